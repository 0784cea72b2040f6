//! Ambient trees and their subtrees.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A tree on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn single() -> Self {
        Tree { adj: vec![Vec::new()] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("tree must have at least one vertex"));
        }
        if edges.len() != n - 1 {
            return Err(Error::invalid(format!(
                "tree on {n} vertices needs {} edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("tree edge {u}-{v} out of range")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at tree vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid("parallel tree edge"));
            }
        }
        let tree = Tree { adj };
        if tree.bfs_order(0).len() != n {
            return Err(Error::invalid("tree edges do not connect all vertices"));
        }
        Ok(tree)
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Tree::from_edges(leaves + 1, &edges).expect("star is a tree")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n, &edges).expect("path is a tree")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n().saturating_sub(1));
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Vertices of degree exactly one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.adj.iter().filter(|l| l.len() == 1).count()
    }

    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }

    /// Vertices of a path-shaped tree from one end to the other, starting at the
    /// smaller-numbered end.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if !self.is_path() {
            return None;
        }
        let start = (0..self.n()).find(|&v| self.degree(v) <= 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(next) = self.adj[cur].iter().copied().find(|&w| w != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        insert_sorted(&mut self.adj[u], v);
        insert_sorted(&mut self.adj[v], u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
    }

    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut order = Vec::with_capacity(self.n());
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Parent pointers of the tree rooted at `root`; the root maps to itself.
    pub fn parents(&self, root: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.n()];
        parent[root] = root;
        for u in self.bfs_order(root) {
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                }
            }
        }
        parent
    }

    /// The unique path from `u` to `v`, both ends included.
    pub fn path_between(&self, u: usize, v: usize) -> Vec<usize> {
        let parent = self.parents(v);
        let mut out = vec![u];
        let mut cur = u;
        while cur != v {
            cur = parent[cur];
            out.push(cur);
        }
        out
    }

    /// The inclusion-minimal subtree containing `vertices`, sorted. Empty for an
    /// empty input.
    pub fn span(&self, vertices: &[usize]) -> Vec<usize> {
        let Some(&root) = vertices.first() else {
            return Vec::new();
        };
        let parent = self.parents(root);
        let mut marked = vec![false; self.n()];
        marked[root] = true;
        for &u in vertices {
            let mut cur = u;
            while !marked[cur] {
                marked[cur] = true;
                cur = parent[cur];
            }
        }
        (0..self.n()).filter(|&v| marked[v]).collect()
    }

    /// Labels each vertex with the index (into `neighbors(v)`) of the component of
    /// `T - v` containing it; `v` itself is labeled `usize::MAX`.
    pub fn component_labels(&self, v: usize) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n()];
        for (i, &start) in self.adj[v].iter().enumerate() {
            let mut stack = vec![start];
            label[start] = i;
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if w != v && label[w] == usize::MAX {
                        label[w] = i;
                        stack.push(w);
                    }
                }
            }
        }
        label
    }

    /// Whether `vertices` (sorted, nonempty) induce a connected subgraph.
    pub fn is_connected_set(&self, vertices: &[usize]) -> bool {
        let Some(&start) = vertices.first() else {
            return false;
        };
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut count = 1;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] && vertices.binary_search(&w).is_ok() {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == vertices.len()
    }

    /// The subtree induced on a connected vertex set, renumbered `0..|S|` in the
    /// order of `vertices` (sorted). Returns the tree and the old→new map.
    pub fn induced(&self, vertices: &[usize]) -> (Tree, Vec<Option<usize>>) {
        let mut map = vec![None; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            map[v] = Some(i);
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            adj[i] = self.adj[v].iter().filter_map(|&w| map[w]).collect();
            adj[i].sort_unstable();
        }
        (Tree { adj }, map)
    }
}

fn insert_sorted(list: &mut Vec<usize>, x: usize) {
    if let Err(pos) = list.binary_search(&x) {
        list.insert(pos, x);
    }
}

/// A nonempty connected vertex subset of an ambient tree, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subtree {
    vertices: Vec<usize>,
}

impl Subtree {
    pub fn new(ambient: &Tree, mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.is_empty() {
            return Err(Error::invalid("subtree must be nonempty"));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= ambient.n()) {
            return Err(Error::invalid(format!("subtree vertex {v} not in ambient tree")));
        }
        if !ambient.is_connected_set(&vertices) {
            return Err(Error::invalid(format!(
                "vertex set {vertices:?} is not connected in the ambient tree"
            )));
        }
        Ok(Subtree { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Vertices with at most one neighbour inside the subtree. A single-vertex
    /// subtree has its vertex as a leaf.
    pub fn leaves(&self, ambient: &Tree) -> Vec<usize> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| self.degree_in(ambient, v) <= 1)
            .collect()
    }

    pub fn degree_in(&self, ambient: &Tree, v: usize) -> usize {
        ambient.neighbors(v).iter().filter(|&&w| self.contains(w)).count()
    }

    pub(crate) fn insert(&mut self, v: usize) {
        if let Err(pos) = self.vertices.binary_search(&v) {
            self.vertices.insert(pos, v);
        }
    }
}

/// Whether two subtrees of the same ambient tree share a vertex.
pub fn intersects(a: &Subtree, b: &Subtree) -> bool {
    let (mut i, mut j) = (0, 0);
    let (x, y) = (a.vertices(), b.vertices());
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    // K_{1,3} with v = 0 and u_i = i.
    fn claw() -> Tree {
        Tree::star(3)
    }

    #[test]
    fn validates_tree_shape() {
        assert!(Tree::from_edges(3, &[(0, 1)]).is_err());
        assert!(Tree::from_edges(4, &[(0, 1), (1, 0), (2, 3)]).is_err());
        assert!(Tree::from_edges(4, &[(0, 1), (2, 3), (3, 2)]).is_err());
        assert!(Tree::from_edges(0, &[]).is_err());
        assert_eq!(Tree::from_edges(1, &[]).unwrap(), Tree::single());
    }

    #[test]
    fn leaves_and_degrees() {
        let t = claw();
        assert_eq!(t.leaves(), vec![1, 2, 3]);
        assert_eq!(t.max_degree(), 3);
        assert!(!t.is_path());
        assert_eq!(Tree::single().leaf_count(), 0);
        assert_eq!(Tree::path(2).leaf_count(), 2);
    }

    #[test]
    fn paths_and_spans() {
        let t = claw();
        assert_eq!(t.path_between(1, 2), vec![1, 0, 2]);
        assert_eq!(t.span(&[1, 2]), vec![0, 1, 2]);
        assert_eq!(t.span(&[3]), vec![3]);
        let p = Tree::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(p.path_order().unwrap(), vec![1, 3, 0, 2]);
        assert_eq!(Tree::single().path_order().unwrap(), vec![0]);
        assert!(claw().path_order().is_none());
    }

    #[test]
    fn subtree_intersection_on_claw() {
        let t = claw();
        let u1 = Subtree::new(&t, vec![1]).unwrap();
        let u2 = Subtree::new(&t, vec![2]).unwrap();
        assert!(!intersects(&u1, &u2));
        assert!(intersects(&u1, &u1));
        let p12 = Subtree::new(&t, t.path_between(1, 2)).unwrap();
        let p23 = Subtree::new(&t, t.path_between(2, 3)).unwrap();
        assert!(intersects(&p12, &p23));
        assert!(Subtree::new(&t, vec![1, 2]).is_err());
        assert!(Subtree::new(&t, vec![]).is_err());
    }

    #[test]
    fn subtree_leaves() {
        let t = claw();
        let s = Subtree::new(&t, vec![0, 1, 2]).unwrap();
        assert_eq!(s.leaves(&t), vec![1, 2]);
        assert_eq!(Subtree::new(&t, vec![3]).unwrap().leaves(&t), vec![3]);
    }

    #[test]
    fn component_labels_split_at_center() {
        let labels = claw().component_labels(0);
        assert_eq!(labels, vec![usize::MAX, 0, 1, 2]);
    }
}
