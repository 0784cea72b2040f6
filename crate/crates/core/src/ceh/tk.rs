//! Colorful bi-cliques for subtree families of a tree with `k` leaves.

use std::fmt;

use crate::ceh::trunk::{trunk, TrunkData};
use crate::ceh::{ceh_interval, require_parts};
use crate::certificate::{verify_certificate, BicliqueCertificate, Kind};
use crate::error::{Error, Result};
use crate::family::{Id, IntervalFamily, IntervalMember, Part, SubtreeFamily, SubtreeMember};
use crate::normalize::{normalize_subtrees, path_family_to_intervals};
use crate::rational::guarded_floor;
use crate::tree::Subtree;

/// `floor((ln k / 20k) * n / 2)`, the guaranteed side for `k >= 2` leaves.
pub fn tk_target(k: usize, n: usize) -> usize {
    if k < 2 {
        return n / 6;
    }
    let k = k as f64;
    guarded_floor(k.ln() / (20.0 * k) * n as f64 / 2.0)
}

/// `floor(n / (6(k-1)))`, the guaranteed side of the weak variant.
pub fn tk_weak_target(k: usize, n: usize) -> usize {
    n / (6 * k.saturating_sub(1).max(1))
}

/// Ladder index `m = floor(log2 k - log2 ln k)`, clamped to `1..=k`.
pub fn ladder_depth(k: usize) -> usize {
    let kf = k as f64;
    let m = guarded_floor((kf.log2() - kf.ln().log2()).max(0.0));
    m.clamp(1, k.max(1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderStage {
    /// Index into the trunk's leaf list.
    pub branch: usize,
    /// `|H_j|`: off-trunk members of the other part inside this branch.
    pub branch_family: usize,
    /// Members of either part inside this branch, the alternative reading of
    /// the branch family.
    pub branch_all_parts: usize,
    pub pivot: Option<usize>,
    pub witness: Option<Id>,
    pub kind: Kind,
    /// `F^(j)`.
    pub kept: Vec<Id>,
    /// `H'_j`.
    pub picked: Vec<Id>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderState {
    /// `F^(0)`: members of the trunk-heavy part meeting the trunk.
    pub start: Vec<Id>,
    pub stages: Vec<LadderStage>,
    pub m: usize,
}

impl LadderState {
    /// The three stage conditions: halving, half of each branch kept, and
    /// nesting.
    pub fn conditions_hold(&self) -> bool {
        let mut prev = &self.start;
        for s in &self.stages {
            let halving = 2 * s.kept.len() >= prev.len();
            let branch = 2 * s.picked.len() >= s.branch_family;
            let nested = s.kept.iter().all(|id| prev.binary_search(id).is_ok());
            if !(halving && branch && nested) {
                return false;
            }
            prev = &s.kept;
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TkCase {
    Interval,
    BothBig,
    BothSmall,
    /// Only `heavy` has at least two thirds of its members on the trunk.
    Mixed {
        heavy: Part,
    },
    /// Weak variant: drop leaf `leaf` and recurse.
    DropLeaf {
        leaf: usize,
    },
    /// Weak variant: a branch holds many members of `part` and the rest of the
    /// tree holds many of the other part.
    BranchApart {
        leaf: usize,
        part: Part,
    },
    /// Weak variant: the other part is restricted to the branch path.
    BranchPath {
        leaf: usize,
        part: Part,
    },
}

impl fmt::Display for TkCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TkCase::Interval => write!(f, "interval"),
            TkCase::BothBig => write!(f, "both big, recurse on trunk"),
            TkCase::BothSmall => write!(f, "both small, branch intervals"),
            TkCase::Mixed { heavy } => write!(f, "mixed, part {} on trunk", heavy.label()),
            TkCase::DropLeaf { leaf } => write!(f, "drop leaf {leaf}"),
            TkCase::BranchApart { leaf, part } => write!(f, "branch at leaf {leaf} apart, part {}", part.label()),
            TkCase::BranchPath { leaf, part } => write!(f, "branch at leaf {leaf} as intervals, part {}", part.label()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TkLevel {
    pub k: usize,
    pub sizes: (usize, usize),
    /// Members of each part meeting the trunk (zero for path levels).
    pub on_trunk: (usize, usize),
    pub case: TkCase,
    pub ladder: Option<LadderState>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TkTrace {
    pub levels: Vec<TkLevel>,
}

impl TkTrace {
    pub fn table(&self) -> crate::trace::Trace {
        let mut t = crate::trace::Trace::new();
        for (d, l) in self.levels.iter().enumerate() {
            t.push(format!("level {d} k"), l.k);
            t.push(format!("level {d} |F_1| |F_2|"), format!("{} {}", l.sizes.0, l.sizes.1));
            t.push(
                format!("level {d} on trunk"),
                format!("{} {}", l.on_trunk.0, l.on_trunk.1),
            );
            t.push(format!("level {d} case"), l.case);
            if let Some(ladder) = &l.ladder {
                t.push(format!("level {d} m"), ladder.m);
                for (j, s) in ladder.stages.iter().enumerate() {
                    t.push(
                        format!("level {d} stage {}", j + 1),
                        format!(
                            "branch {} |H_j|={} both-parts={} {} |F^(j)|={} |H'_j|={}",
                            s.branch,
                            s.branch_family,
                            s.branch_all_parts,
                            s.kind,
                            s.kept.len(),
                            s.picked.len()
                        ),
                    );
                }
            }
        }
        t
    }
}

pub fn ceh_tk(fam: &SubtreeFamily) -> Result<BicliqueCertificate> {
    ceh_tk_traced(fam).map(|(c, _)| c)
}

/// Trunk recursion: both parts heavy on the trunk recurse there, both light
/// use the branch paths as intervals, and the mixed case runs the ladder.
pub fn ceh_tk_traced(fam: &SubtreeFamily) -> Result<(BicliqueCertificate, TkTrace)> {
    finish(fam, tk_level)
}

pub fn ceh_tk_weak(fam: &SubtreeFamily) -> Result<BicliqueCertificate> {
    ceh_tk_weak_traced(fam).map(|(c, _)| c)
}

/// Leaf-deletion induction with sides at least `ceil(|F_i| / (3(k-1)))`.
pub fn ceh_tk_weak_traced(fam: &SubtreeFamily) -> Result<(BicliqueCertificate, TkTrace)> {
    finish(fam, weak_level)
}

fn finish(
    fam: &SubtreeFamily,
    run: impl Fn(&SubtreeFamily, &mut TkTrace) -> Result<BicliqueCertificate>,
) -> Result<(BicliqueCertificate, TkTrace)> {
    let partition = require_parts(fam.partition())?;
    let mut trace = TkTrace::default();
    let cert = run(fam, &mut trace)?;
    let report = verify_certificate(fam, &cert, 1, Some(&partition))?;
    if !report.valid {
        return Err(Error::internal(format!(
            "subtree finder produced an invalid certificate: {}",
            report.failures[0]
        )));
    }
    Ok((cert, trace))
}

fn part_sizes(fam: &SubtreeFamily) -> (usize, usize) {
    let ones = fam.members().iter().filter(|m| m.part == Some(Part::One)).count();
    (ones, fam.len() - ones)
}

fn interval_level(fam: &SubtreeFamily, trace: &mut TkTrace) -> Result<BicliqueCertificate> {
    trace.levels.push(TkLevel {
        k: fam.ambient().leaf_count(),
        sizes: part_sizes(fam),
        on_trunk: (0, 0),
        case: TkCase::Interval,
        ladder: None,
    });
    let iv = path_family_to_intervals(fam).ok_or_else(|| Error::internal("ambient is not a path"))?;
    ceh_interval(&iv)
}

/// Members meeting `keep` (a connected vertex set), cut down to it, on the
/// induced ambient tree.
fn restrict(fam: &SubtreeFamily, keep: &[usize]) -> SubtreeFamily {
    let (tree, map) = fam.ambient().induced(keep);
    let members = fam
        .members()
        .iter()
        .filter_map(|m| {
            let vs: Vec<usize> = m.subtree.vertices().iter().filter_map(|&v| map[v]).collect();
            (!vs.is_empty()).then(|| SubtreeMember {
                id: m.id,
                part: m.part,
                subtree: Subtree::new(&tree, vs).expect("subtree meets a connected set in a connected set"),
            })
        })
        .collect();
    SubtreeFamily::new_unchecked(tree, members)
}

/// Puts side `part` first.
fn oriented(cert: BicliqueCertificate, first: Part) -> BicliqueCertificate {
    if first == Part::One {
        cert
    } else {
        cert.swapped()
    }
}

fn tk_level(fam: &SubtreeFamily, trace: &mut TkTrace) -> Result<BicliqueCertificate> {
    let fam = normalize_subtrees(fam);
    let tree = fam.ambient();
    if tree.is_path() {
        return interval_level(&fam, trace);
    }
    let td = trunk(tree)?;
    let k = td.k();
    let ms = fam.members();
    let on_trunk: Vec<bool> = ms
        .iter()
        .map(|m| m.subtree.vertices().iter().any(|&v| td.trunk.contains(v)))
        .collect();
    let (n1, n2) = part_sizes(&fam);
    let count_on = |p: Part| {
        ms.iter()
            .zip(&on_trunk)
            .filter(|(m, &on)| on && m.part == Some(p))
            .count()
    };
    let (r1, r2) = (count_on(Part::One), count_on(Part::Two));
    let big1 = 3 * r1 >= 2 * n1;
    let big2 = 3 * r2 >= 2 * n2;
    let mut level = TkLevel {
        k,
        sizes: (n1, n2),
        on_trunk: (r1, r2),
        case: TkCase::BothBig,
        ladder: None,
    };

    if big1 && big2 {
        trace.levels.push(level);
        return tk_level(&restrict(&fam, td.trunk.vertices()), trace);
    }

    let loc = td.locations(tree.n());
    if !big1 && !big2 {
        level.case = TkCase::BothSmall;
        trace.levels.push(level);
        let mut base = vec![0i64; k];
        for j in 1..k {
            base[j] = base[j - 1] + td.branch_paths[j - 1].len() as i64;
        }
        let members = ms
            .iter()
            .zip(&on_trunk)
            .filter(|(_, &on)| !on)
            .map(|(m, _)| {
                let (lo, hi) = span_on_branch(&m.subtree, &loc);
                let j = lo.0;
                IntervalMember {
                    id: m.id,
                    part: m.part,
                    left: (base[j] + lo.1 as i64).into(),
                    right: (base[j] + hi as i64).into(),
                }
            })
            .collect();
        return ceh_interval(&IntervalFamily::new(members)?);
    }

    let heavy = if big1 { Part::One } else { Part::Two };
    level.case = TkCase::Mixed { heavy };
    let ladder = run_ladder(&fam, &td, &on_trunk, &loc, heavy);
    debug_assert!(ladder.conditions_hold());
    let m = ladder.m;
    let last = &ladder.stages[m - 1];
    let (mut complete, mut empty) = (Vec::new(), Vec::new());
    for s in &ladder.stages[..m] {
        match s.kind {
            Kind::Complete => complete.extend(&s.picked),
            Kind::Empty => empty.extend(&s.picked),
        }
    }
    let (kind, other) = if complete.len() >= empty.len() {
        (Kind::Complete, complete)
    } else {
        (Kind::Empty, empty)
    };
    let cert = BicliqueCertificate::new(kind, last.kept.clone(), other)?;
    level.ladder = Some(ladder);
    trace.levels.push(level);
    Ok(oriented(cert, heavy))
}

/// Branch and position range of an off-trunk member.
fn span_on_branch(s: &Subtree, loc: &[Option<(usize, usize)>]) -> ((usize, usize), usize) {
    let mut lo = (usize::MAX, usize::MAX);
    let mut hi = 0;
    for &v in s.vertices() {
        let (j, pos) = loc[v].expect("off-trunk members lie on a branch path");
        lo = (j, lo.1.min(pos));
        hi = hi.max(pos);
    }
    (lo, hi)
}

fn run_ladder(
    fam: &SubtreeFamily,
    td: &TrunkData,
    on_trunk: &[bool],
    loc: &[Option<(usize, usize)>],
    heavy: Part,
) -> LadderState {
    let k = td.k();
    let ms = fam.members();
    let start: Vec<usize> = (0..ms.len())
        .filter(|&i| on_trunk[i] && ms[i].part == Some(heavy))
        .collect();

    // H_j as (left, right, id) position ranges on branch j.
    let mut branch: Vec<Vec<(usize, usize, Id)>> = vec![Vec::new(); k];
    let mut all_parts = vec![0usize; k];
    for (m, _) in ms.iter().zip(on_trunk).filter(|(_, &on)| !on) {
        let ((j, l), r) = span_on_branch(&m.subtree, loc);
        all_parts[j] += 1;
        if m.part != Some(heavy) {
            branch[j].push((l, r, m.id));
        }
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| branch[b].len().cmp(&branch[a].len()).then(a.cmp(&b)));

    let mut prev = start.clone();
    let mut stages = Vec::with_capacity(k);
    for &j in &order {
        let h = &branch[j];
        if h.is_empty() {
            stages.push(LadderStage {
                branch: j,
                branch_family: 0,
                branch_all_parts: all_parts[j],
                pivot: None,
                witness: None,
                kind: Kind::Empty,
                kept: ids_of(fam, &prev),
                picked: Vec::new(),
            });
            continue;
        }
        let mut rights: Vec<usize> = h.iter().map(|x| x.1).collect();
        rights.sort_unstable();
        let a = rights[h.len().div_ceil(2) - 1];
        let pivot = td.branch_paths[j][a];
        let witness = h
            .iter()
            .filter(|x| x.1 == a)
            .map(|x| x.2)
            .min()
            .expect("some member ends at the pivot");
        let (with, without): (Vec<usize>, Vec<usize>) = prev.iter().partition(|&&i| ms[i].subtree.contains(pivot));
        let (kind, kept, mut picked) = if 2 * with.len() >= prev.len() {
            let mut picked: Vec<Id> = h.iter().filter(|x| x.1 > a).map(|x| x.2).collect();
            picked.push(witness);
            (Kind::Complete, with, picked)
        } else {
            (
                Kind::Empty,
                without,
                h.iter().filter(|x| x.1 <= a).map(|x| x.2).collect(),
            )
        };
        picked.sort_unstable();
        stages.push(LadderStage {
            branch: j,
            branch_family: h.len(),
            branch_all_parts: all_parts[j],
            pivot: Some(pivot),
            witness: Some(witness),
            kind,
            kept: ids_of(fam, &kept),
            picked,
        });
        prev = kept;
    }
    LadderState {
        start: ids_of(fam, &start),
        stages,
        m: ladder_depth(k),
    }
}

fn ids_of(fam: &SubtreeFamily, idx: &[usize]) -> Vec<Id> {
    idx.iter().map(|&i| fam.members()[i].id).collect()
}

fn weak_level(fam: &SubtreeFamily, trace: &mut TkTrace) -> Result<BicliqueCertificate> {
    let fam = normalize_subtrees(fam);
    let tree = fam.ambient();
    if tree.is_path() {
        return interval_level(&fam, trace);
    }
    let td = trunk(tree)?;
    let k = td.k();
    let ms = fam.members();
    let (n1, n2) = part_sizes(&fam);
    let n_of = |p: Part| if p == Part::One { n1 } else { n2 };
    let mut level = TkLevel {
        k,
        sizes: (n1, n2),
        on_trunk: (0, 0),
        case: TkCase::Interval,
        ladder: None,
    };

    // contained[i][p]: members of part p inside the branch path of leaf i.
    let mut on_path = vec![usize::MAX; tree.n()];
    for (i, p) in td.branch_paths.iter().enumerate() {
        for &v in p {
            on_path[v] = i;
        }
    }
    let inside = |m: &SubtreeMember, i: usize| m.subtree.vertices().iter().all(|&v| on_path[v] == i);
    let contained = |i: usize, p: Part| ms.iter().filter(|m| m.part == Some(p) && inside(m, i)).count();

    for i in 0..k {
        let meets_enough = [Part::One, Part::Two].iter().all(|&p| {
            let n = n_of(p);
            n - contained(i, p) >= ((k - 2) * n).div_ceil(k - 1)
        });
        if meets_enough {
            level.case = TkCase::DropLeaf { leaf: td.leaves[i] };
            trace.levels.push(level);
            let keep: Vec<usize> = (0..tree.n()).filter(|&v| on_path[v] != i).collect();
            return weak_level(&restrict(&fam, &keep), trace);
        }
    }

    let (i, p) = (0..k)
        .flat_map(|i| [(i, Part::One), (i, Part::Two)])
        .find(|&(i, p)| contained(i, p) >= n_of(p).div_ceil(k - 1))
        .ok_or_else(|| Error::internal("no branch holds enough members of either part"))?;
    let o = p.other();
    let a: Vec<Id> = ms
        .iter()
        .filter(|m| m.part == Some(p) && inside(m, i))
        .map(|m| m.id)
        .collect();
    let apart: Vec<Id> = ms
        .iter()
        .filter(|m| m.part == Some(o) && m.subtree.vertices().iter().all(|&v| on_path[v] != i))
        .map(|m| m.id)
        .collect();
    if apart.len() >= n_of(o).div_ceil(k - 1) {
        level.case = TkCase::BranchApart {
            leaf: td.leaves[i],
            part: p,
        };
        trace.levels.push(level);
        return Ok(oriented(BicliqueCertificate::new(Kind::Empty, a, apart)?, p));
    }
    level.case = TkCase::BranchPath {
        leaf: td.leaves[i],
        part: p,
    };
    trace.levels.push(level);
    let mut path = td.branch_paths[i].clone();
    path.sort_unstable();
    let sub = restrict(&fam, &path);
    let keep: Vec<SubtreeMember> = sub
        .members()
        .iter()
        .filter(|m| m.part == Some(o) || a.binary_search(&m.id).is_ok())
        .cloned()
        .collect();
    let sub = SubtreeFamily::new_unchecked(sub.ambient().clone(), keep);
    let iv = path_family_to_intervals(&sub).ok_or_else(|| Error::internal("branch is not a path"))?;
    ceh_interval(&iv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{balanced_partition, random_subtree_family, random_tree_with_leaves, rng};
    use crate::tree::Tree;

    #[test]
    fn ladder_depths() {
        assert_eq!(ladder_depth(3), 1);
        assert_eq!(ladder_depth(8), 1);
        assert_eq!(ladder_depth(16), 2);
        assert_eq!(ladder_depth(64), 3);
    }

    #[test]
    fn targets() {
        assert_eq!(tk_target(8, 2000), 12);
        assert_eq!(tk_weak_target(8, 2000), 47);
    }

    #[test]
    fn path_ambient_matches_the_interval_finder() {
        let t = Tree::path(7);
        let sets = [vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![5, 6]];
        let fam = SubtreeFamily::from_vertex_sets(t, &sets).unwrap();
        let p =
            crate::family::Partition::from_pairs((0..6).map(|i| (i, if i % 2 == 0 { Part::One } else { Part::Two })))
                .unwrap();
        let fam = fam.with_partition(&p).unwrap();
        let iv = path_family_to_intervals(&fam).unwrap();
        assert_eq!(ceh_tk(&fam).unwrap(), ceh_interval(&iv).unwrap());
        assert_eq!(ceh_tk_weak(&fam).unwrap(), ceh_interval(&iv).unwrap());
    }

    #[test]
    fn random_instances_meet_their_targets() {
        let mut r = rng(21);
        for round in 0..200 {
            let k = 3 + round % 6;
            let tree = random_tree_with_leaves(&mut r, k, 20 + round % 30);
            let n = 20 + round % 80;
            let fam = random_subtree_family(&mut r, &tree, n, 1 + round % 8);
            let p = balanced_partition(&mut r, &fam.ids());
            let fam = fam.with_partition(&p).unwrap();
            let (cert, trace) = ceh_tk_traced(&fam).unwrap();
            assert!(
                verify_certificate(&fam, &cert, tk_target(k, n), Some(&p))
                    .unwrap()
                    .valid
            );
            for l in &trace.levels {
                if let Some(ladder) = &l.ladder {
                    assert!(ladder.conditions_hold());
                }
            }
            let weak = ceh_tk_weak(&fam).unwrap();
            assert!(
                verify_certificate(&fam, &weak, tk_weak_target(k, n), Some(&p))
                    .unwrap()
                    .valid
            );
        }
    }
}
