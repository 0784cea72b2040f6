//! Interval and subtree families, the two geometric representations, plus the
//! two-part labelling used by the colorful finders.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, LabeledGraph};
use crate::rational::Rational;
use crate::tree::{Subtree, Tree};

/// Opaque member identifier, preserved through every transformation.
pub type Id = u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    One,
    Two,
}

impl Part {
    pub fn parse(s: &str) -> Result<Part> {
        match s {
            "1" => Ok(Part::One),
            "2" => Ok(Part::Two),
            other => Err(Error::invalid(format!("part label must be 1 or 2, got `{other}`"))),
        }
    }

    pub fn label(self) -> u8 {
        match self {
            Part::One => 1,
            Part::Two => 2,
        }
    }

    pub fn other(self) -> Part {
        match self {
            Part::One => Part::Two,
            Part::Two => Part::One,
        }
    }
}

/// Total assignment of ids to the two parts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Partition {
    assignment: BTreeMap<Id, Part>,
}

impl Partition {
    pub fn new() -> Self {
        Partition::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Id, Part)>) -> Result<Self> {
        let mut p = Partition::new();
        for (id, part) in pairs {
            if p.assignment.insert(id, part).is_some() {
                return Err(Error::DuplicateId(id));
            }
        }
        Ok(p)
    }

    pub fn insert(&mut self, id: Id, part: Part) {
        self.assignment.insert(id, part);
    }

    pub fn get(&self, id: Id) -> Option<Part> {
        self.assignment.get(&id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Id, Part)> + '_ {
        self.assignment.iter().map(|(&id, &p)| (id, p))
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn members(&self, part: Part) -> Vec<Id> {
        self.iter().filter(|&(_, p)| p == part).map(|(id, _)| id).collect()
    }

    pub fn sizes(&self) -> (usize, usize) {
        let ones = self.assignment.values().filter(|&&p| p == Part::One).count();
        (ones, self.len() - ones)
    }

    /// Checks that the partition covers exactly `ids`, that both parts are
    /// nonempty, and (unless `allow_unbalanced`) that the part sizes differ by at
    /// most one.
    pub fn check_against(&self, ids: &[Id], allow_unbalanced: bool) -> Result<()> {
        if ids.len() != self.len() || ids.iter().any(|id| !self.assignment.contains_key(id)) {
            return Err(Error::MissingPartLabels(
                "partition must label exactly the instance ids".into(),
            ));
        }
        let (a, b) = self.sizes();
        if a == 0 || b == 0 {
            return Err(Error::MissingPartLabels("both parts must be nonempty".into()));
        }
        if !allow_unbalanced && a.abs_diff(b) > 1 {
            return Err(Error::invalid(format!(
                "unbalanced partition ({a} vs {b}); pass --allow-unbalanced to accept"
            )));
        }
        Ok(())
    }
}

fn check_labels<T>(items: &[T], id: impl Fn(&T) -> Id, part: impl Fn(&T) -> Option<Part>) -> Result<()> {
    for w in items.windows(2) {
        if id(&w[0]) == id(&w[1]) {
            return Err(Error::DuplicateId(id(&w[0])));
        }
    }
    let labelled = items.iter().filter(|m| part(m).is_some()).count();
    if labelled != 0 && labelled != items.len() {
        return Err(Error::MissingPartLabels(
            "either every member carries a part label or none does".into(),
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalMember {
    pub id: Id,
    pub part: Option<Part>,
    pub left: Rational,
    pub right: Rational,
}

impl IntervalMember {
    pub fn new(id: Id, left: Rational, right: Rational) -> Self {
        IntervalMember {
            id,
            part: None,
            left,
            right,
        }
    }

    pub fn with_part(mut self, part: Part) -> Self {
        self.part = Some(part);
        self
    }

    pub fn intersects(&self, other: &IntervalMember) -> bool {
        self.left <= other.right && other.left <= self.right
    }
}

/// Closed intervals on the line. Members are kept sorted by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalFamily {
    members: Vec<IntervalMember>,
}

impl IntervalFamily {
    pub fn new(mut members: Vec<IntervalMember>) -> Result<Self> {
        members.sort_by_key(|m| m.id);
        check_labels(&members, |m| m.id, |m| m.part)?;
        if let Some(m) = members.iter().find(|m| m.left > m.right) {
            return Err(Error::invalid(format!("interval {} has left > right", m.id)));
        }
        Ok(IntervalFamily { members })
    }

    /// Integer endpoints, convenient for generators and tests.
    pub fn from_integer_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        IntervalFamily::new(
            pairs
                .iter()
                .enumerate()
                .map(|(i, &(l, r))| IntervalMember::new(i as Id, Rational::from_integer(l), Rational::from_integer(r)))
                .collect(),
        )
    }

    pub fn members(&self) -> &[IntervalMember] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn ids(&self) -> Vec<Id> {
        self.members.iter().map(|m| m.id).collect()
    }

    pub fn index_of(&self, id: Id) -> Option<usize> {
        self.members.binary_search_by_key(&id, |m| m.id).ok()
    }

    pub fn partition(&self) -> Option<Partition> {
        labels_to_partition(self.members.iter().map(|m| (m.id, m.part)))
    }

    /// Same intervals with labels taken from `partition`.
    pub fn with_partition(&self, partition: &Partition) -> Result<Self> {
        let members = self
            .members
            .iter()
            .map(|m| {
                let part = partition.get(m.id).ok_or(Error::UnknownId(m.id))?;
                Ok(IntervalMember {
                    part: Some(part),
                    ..m.clone()
                })
            })
            .collect::<Result<Vec<_>>>()?;
        IntervalFamily::new(members)
    }

    /// Vertex `i` is `members()[i]`.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.len();
        let mut g = Graph::empty(n);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.members[a].left.cmp(&self.members[b].left));
        // Sweep by left endpoint: j starting after i intersects i iff it starts
        // no later than i ends.
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[pos + 1..] {
                if self.members[j].left > self.members[i].right {
                    break;
                }
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn labeled_graph(&self) -> LabeledGraph {
        LabeledGraph {
            ids: self.ids(),
            graph: self.intersection_graph(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeMember {
    pub id: Id,
    pub part: Option<Part>,
    pub subtree: Subtree,
}

/// Subtrees of one ambient tree. Members are kept sorted by id; distinct ids may
/// carry identical subtrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeFamily {
    ambient: Tree,
    members: Vec<SubtreeMember>,
}

impl SubtreeFamily {
    pub fn new(ambient: Tree, mut members: Vec<SubtreeMember>) -> Result<Self> {
        members.sort_by_key(|m| m.id);
        check_labels(&members, |m| m.id, |m| m.part)?;
        for m in &members {
            // Re-validate: the subtree may have been built against another tree.
            Subtree::new(&ambient, m.subtree.vertices().to_vec())
                .map_err(|e| Error::invalid(format!("member {}: {e}", m.id)))?;
        }
        Ok(SubtreeFamily { ambient, members })
    }

    pub(crate) fn new_unchecked(ambient: Tree, members: Vec<SubtreeMember>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0].id < w[1].id));
        SubtreeFamily { ambient, members }
    }

    /// Members given as raw vertex lists; ids are assigned `0..`.
    pub fn from_vertex_sets(ambient: Tree, sets: &[Vec<usize>]) -> Result<Self> {
        let members = sets
            .iter()
            .enumerate()
            .map(|(i, vs)| {
                Ok(SubtreeMember {
                    id: i as Id,
                    part: None,
                    subtree: Subtree::new(&ambient, vs.clone())?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SubtreeFamily::new(ambient, members)
    }

    pub fn ambient(&self) -> &Tree {
        &self.ambient
    }

    pub fn members(&self) -> &[SubtreeMember] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn ids(&self) -> Vec<Id> {
        self.members.iter().map(|m| m.id).collect()
    }

    pub fn index_of(&self, id: Id) -> Option<usize> {
        self.members.binary_search_by_key(&id, |m| m.id).ok()
    }

    pub fn partition(&self) -> Option<Partition> {
        labels_to_partition(self.members.iter().map(|m| (m.id, m.part)))
    }

    pub fn with_partition(&self, partition: &Partition) -> Result<Self> {
        let members = self
            .members
            .iter()
            .map(|m| {
                let part = partition.get(m.id).ok_or(Error::UnknownId(m.id))?;
                Ok(SubtreeMember {
                    part: Some(part),
                    ..m.clone()
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SubtreeFamily::new_unchecked(self.ambient.clone(), members))
    }

    /// Membership bitsets over ambient vertices, one per member.
    pub(crate) fn vertex_sets(&self) -> Vec<FixedBitSet> {
        self.members
            .iter()
            .map(|m| {
                let mut b = FixedBitSet::with_capacity(self.ambient.n());
                for &v in m.subtree.vertices() {
                    b.insert(v);
                }
                b
            })
            .collect()
    }

    /// Vertex `i` is `members()[i]`.
    pub fn intersection_graph(&self) -> Graph {
        let sets = self.vertex_sets();
        let n = self.len();
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if !sets[i].is_disjoint(&sets[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn labeled_graph(&self) -> LabeledGraph {
        LabeledGraph {
            ids: self.ids(),
            graph: self.intersection_graph(),
        }
    }

    /// Vertices of the ambient tree that are a leaf of at least two members.
    pub fn shared_leaves(&self) -> Vec<usize> {
        let mut count = vec![0usize; self.ambient.n()];
        for m in &self.members {
            for v in m.subtree.leaves(&self.ambient) {
                count[v] += 1;
            }
        }
        (0..count.len()).filter(|&v| count[v] >= 2).collect()
    }
}

fn labels_to_partition(labels: impl Iterator<Item = (Id, Option<Part>)>) -> Option<Partition> {
    let mut p = Partition::new();
    for (id, part) in labels {
        p.insert(id, part?);
    }
    Some(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn touching_intervals_form_a_path() {
        let fam = IntervalFamily::from_integer_pairs(&[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(fam.intersection_graph().edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn single_member_is_k1() {
        let fam = IntervalFamily::from_integer_pairs(&[(5, 7)]).unwrap();
        let g = fam.intersection_graph();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
    }

    #[test]
    fn rejects_bad_families() {
        assert!(IntervalFamily::from_integer_pairs(&[(2, 1)]).is_err());
        let a = IntervalMember::new(3, Rational::from_integer(0), Rational::from_integer(1));
        assert_eq!(
            IntervalFamily::new(vec![a.clone(), a.clone()]),
            Err(Error::DuplicateId(3))
        );
        let b = IntervalMember::new(4, Rational::from_integer(0), Rational::from_integer(1)).with_part(Part::One);
        assert!(matches!(
            IntervalFamily::new(vec![a, b]),
            Err(Error::MissingPartLabels(_))
        ));
    }

    #[test]
    fn partition_balance() {
        let p = Partition::from_pairs([(0, Part::One), (1, Part::Two), (2, Part::One)]).unwrap();
        assert!(p.check_against(&[0, 1, 2], false).is_ok());
        let q = Partition::from_pairs([(0, Part::One), (1, Part::One), (2, Part::One), (3, Part::Two)]).unwrap();
        assert!(q.check_against(&[0, 1, 2, 3], false).is_err());
        assert!(q.check_against(&[0, 1, 2, 3], true).is_ok());
        assert!(q.check_against(&[0, 1, 2], true).is_err());
    }

    #[test]
    fn subtree_graph_counts_pairs() {
        let t = Tree::star(3);
        let fam = SubtreeFamily::from_vertex_sets(t, &[vec![1], vec![0, 1], vec![0, 2], vec![3]]).unwrap();
        assert_eq!(fam.intersection_graph().edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(fam.shared_leaves(), vec![0, 1]);
    }
}
