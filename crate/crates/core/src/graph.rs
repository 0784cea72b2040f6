//! Simple undirected graphs on vertices `0..n`, stored as adjacency bitsets.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::family::Id;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.adj[u].insert_range(..);
            g.adj[u].set(u, false);
        }
        g
    }

    /// Rejects loops, out-of-range endpoints and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::invalid(format!("parallel edge {u}-{v}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighborhood(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = self.adj.clone();
        for (u, row) in adj.iter_mut().enumerate() {
            row.toggle_range(..);
            row.set(u, false);
        }
        debug_assert!(adj.iter().all(|r| r.len() == n));
        Graph { adj }
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    /// Connected components of the subgraph induced on `vertices`, each sorted,
    /// ordered by smallest member.
    pub fn components_within(&self, vertices: &[usize], complemented: bool) -> Vec<Vec<usize>> {
        let mut inside = FixedBitSet::with_capacity(self.n());
        for &v in vertices {
            inside.insert(v);
        }
        let mut unvisited = inside.clone();
        let mut comps = Vec::new();
        let mut sorted: Vec<usize> = vertices.to_vec();
        sorted.sort_unstable();
        for &start in &sorted {
            if !unvisited.contains(start) {
                continue;
            }
            unvisited.set(start, false);
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let mut next = self.adj[u].clone();
                if complemented {
                    next.toggle_range(..);
                    next.set(u, false);
                }
                next.intersect_with(&unvisited);
                for w in next.ones() {
                    unvisited.set(w, false);
                    comp.push(w);
                    stack.push(w);
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// A graph whose vertex `i` stands for the externally visible id `ids[i]`.
/// `ids` is strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub ids: Vec<Id>,
    pub graph: Graph,
}

impl LabeledGraph {
    pub fn index_of(&self, id: Id) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    /// Edges translated to ids, sorted.
    pub fn id_edges(&self) -> Vec<(Id, Id)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| (self.ids[u], self.ids[v]))
            .collect()
    }
}
