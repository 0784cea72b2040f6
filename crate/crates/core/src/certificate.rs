//! Bi-clique certificates and the universal checker.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::{Id, IntervalFamily, Part, Partition, SubtreeFamily};
use crate::graph::LabeledGraph;
use crate::tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Every cross pair intersects (a bi-clique in G).
    Complete,
    /// No cross pair intersects (a bi-clique in the complement).
    Empty,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Complete => "complete",
            Kind::Empty => "empty",
        }
    }

    pub fn parse(s: &str) -> Result<Kind> {
        match s {
            "complete" => Ok(Kind::Complete),
            "empty" => Ok(Kind::Empty),
            other => Err(Error::invalid(format!("unknown certificate kind `{other}`"))),
        }
    }

    pub fn holds_for(self, adjacent: bool) -> bool {
        match self {
            Kind::Complete => adjacent,
            Kind::Empty => !adjacent,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Two disjoint id sets (kept sorted) plus the relation claimed between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicliqueCertificate {
    pub kind: Kind,
    side_a: Vec<Id>,
    side_b: Vec<Id>,
}

impl BicliqueCertificate {
    pub fn new(kind: Kind, mut side_a: Vec<Id>, mut side_b: Vec<Id>) -> Result<Self> {
        side_a.sort_unstable();
        side_a.dedup();
        side_b.sort_unstable();
        side_b.dedup();
        if let Some(&id) = side_a.iter().find(|id| side_b.binary_search(id).is_ok()) {
            return Err(Error::OverlappingSides(id));
        }
        Ok(BicliqueCertificate { kind, side_a, side_b })
    }

    /// The vacuous certificate, valid only when the guaranteed size is zero.
    pub fn vacuous() -> Self {
        BicliqueCertificate {
            kind: Kind::Empty,
            side_a: Vec::new(),
            side_b: Vec::new(),
        }
    }

    /// Keeps the smallest `max(target, 1)` ids of each side. If either side ends
    /// up empty the vacuous certificate is returned instead.
    pub fn truncated(kind: Kind, side_a: Vec<Id>, side_b: Vec<Id>, target: usize) -> Result<Self> {
        BicliqueCertificate::truncated_each(kind, side_a, side_b, target, target)
    }

    pub fn truncated_each(
        kind: Kind,
        mut side_a: Vec<Id>,
        mut side_b: Vec<Id>,
        target_a: usize,
        target_b: usize,
    ) -> Result<Self> {
        side_a.sort_unstable();
        side_b.sort_unstable();
        side_a.truncate(target_a.max(1));
        side_b.truncate(target_b.max(1));
        if side_a.is_empty() || side_b.is_empty() {
            return Ok(BicliqueCertificate::vacuous());
        }
        BicliqueCertificate::new(kind, side_a, side_b)
    }

    pub fn side_a(&self) -> &[Id] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[Id] {
        &self.side_b
    }

    pub fn min_side(&self) -> usize {
        self.side_a.len().min(self.side_b.len())
    }

    pub fn swapped(self) -> Self {
        BicliqueCertificate {
            kind: self.kind,
            side_a: self.side_b,
            side_b: self.side_a,
        }
    }
}

/// Anything whose members can be tested pairwise for adjacency by id.
pub trait Instance {
    fn instance_ids(&self) -> Vec<Id>;
    fn locate(&self, id: Id) -> Option<usize>;
    /// Adjacency (intersection) of the members at two located positions.
    fn related(&self, i: usize, j: usize) -> bool;
}

impl Instance for IntervalFamily {
    fn instance_ids(&self) -> Vec<Id> {
        self.ids()
    }
    fn locate(&self, id: Id) -> Option<usize> {
        self.index_of(id)
    }
    fn related(&self, i: usize, j: usize) -> bool {
        self.members()[i].intersects(&self.members()[j])
    }
}

impl Instance for SubtreeFamily {
    fn instance_ids(&self) -> Vec<Id> {
        self.ids()
    }
    fn locate(&self, id: Id) -> Option<usize> {
        self.index_of(id)
    }
    fn related(&self, i: usize, j: usize) -> bool {
        tree::intersects(&self.members()[i].subtree, &self.members()[j].subtree)
    }
}

impl Instance for LabeledGraph {
    fn instance_ids(&self) -> Vec<Id> {
        self.ids.clone()
    }
    fn locate(&self, id: Id) -> Option<usize> {
        self.index_of(id)
    }
    fn related(&self, i: usize, j: usize) -> bool {
        self.graph.has_edge(i, j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    SideTooSmall { side: char, size: usize, min_side: usize },
    CrossPair { a: Id, b: Id, adjacent: bool },
    WrongPart { id: Id, expected: Part },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::SideTooSmall { side, size, min_side } => {
                write!(f, "side {side} has {size} ids, need at least {min_side}")
            }
            Failure::CrossPair { a, b, adjacent } => {
                let rel = if *adjacent { "intersect" } else { "are disjoint" };
                write!(f, "cross pair ({a}, {b}) {rel}")
            }
            Failure::WrongPart { id, expected } => {
                write!(f, "id {id} is not in part {}", expected.label())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub failures: Vec<Failure>,
}

/// Checks side sizes, the claimed cross relation on every pair, and (when a
/// partition is given) that side A lies in part 1 and side B in part 2.
pub fn verify_certificate<I: Instance + ?Sized>(
    instance: &I,
    cert: &BicliqueCertificate,
    min_side: usize,
    partition: Option<&Partition>,
) -> Result<VerificationReport> {
    if let Some(&id) = cert.side_a.iter().find(|id| cert.side_b.binary_search(id).is_ok()) {
        return Err(Error::OverlappingSides(id));
    }
    let locate = |id: Id| instance.locate(id).ok_or(Error::UnknownId(id));
    let pos_a = cert.side_a.iter().map(|&id| locate(id)).collect::<Result<Vec<_>>>()?;
    let pos_b = cert.side_b.iter().map(|&id| locate(id)).collect::<Result<Vec<_>>>()?;

    let mut failures = Vec::new();
    for (side, size) in [('A', pos_a.len()), ('B', pos_b.len())] {
        if size < min_side {
            failures.push(Failure::SideTooSmall { side, size, min_side });
        }
    }
    'outer: for (ia, &pa) in pos_a.iter().enumerate() {
        for (ib, &pb) in pos_b.iter().enumerate() {
            let adjacent = instance.related(pa, pb);
            if !cert.kind.holds_for(adjacent) {
                failures.push(Failure::CrossPair {
                    a: cert.side_a[ia],
                    b: cert.side_b[ib],
                    adjacent,
                });
                break 'outer;
            }
        }
    }
    if let Some(p) = partition {
        for (ids, expected) in [(&cert.side_a, Part::One), (&cert.side_b, Part::Two)] {
            for &id in ids {
                if p.get(id) != Some(expected) {
                    failures.push(Failure::WrongPart { id, expected });
                }
            }
        }
    }
    Ok(VerificationReport {
        valid: failures.is_empty(),
        failures,
    })
}
