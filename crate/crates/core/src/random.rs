//! Seeded random instances. All randomness flows through [`Rng`], a ChaCha8
//! stream keyed by a 64-bit seed, so instances are reproducible.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cograph::Cotree;
use crate::family::{Id, IntervalFamily, IntervalMember, Part, Partition, SubtreeFamily, SubtreeMember};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::tree::{Subtree, Tree};

pub type Rng = ChaCha8Rng;

/// Algorithm identifier written into generated file headers.
pub const RNG_NAME: &str = "ChaCha8";

pub fn rng(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform attachment tree on `n >= 1` vertices.
pub fn random_tree(rng: &mut Rng, n: usize) -> Tree {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    Tree::from_edges(n.max(1), &edges).expect("attachment builds a tree")
}

/// Attachment tree on `n >= 1` vertices with maximum degree at most 3.
pub fn random_tree_max3(rng: &mut Rng, n: usize) -> Tree {
    let mut deg = vec![0usize; n.max(1)];
    let mut open = vec![0usize];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let slot = rng.random_range(0..open.len());
        let u = open[slot];
        edges.push((u, v));
        deg[u] += 1;
        deg[v] += 1;
        if deg[u] == 3 {
            open.swap_remove(slot);
        }
        open.push(v);
    }
    Tree::from_edges(n.max(1), &edges).expect("attachment builds a tree")
}

/// A tree with exactly `k >= 2` leaves, maximum degree 3 and at least `n`
/// vertices: pendant paths are grafted onto degree-2 vertices, then random
/// edges are subdivided.
pub fn random_tree_with_leaves(rng: &mut Rng, k: usize, n: usize) -> Tree {
    let mut tree = Tree::path(3);
    while tree.leaf_count() < k {
        let mut inner: Vec<usize> = (0..tree.n()).filter(|&v| tree.degree(v) == 2).collect();
        if inner.is_empty() {
            subdivide_random_edge(rng, &mut tree);
            inner = (0..tree.n()).filter(|&v| tree.degree(v) == 2).collect();
        }
        let mut at = *inner.choose(rng).unwrap();
        for _ in 0..rng.random_range(1..=3) {
            let w = tree.add_vertex();
            tree.add_edge(at, w);
            at = w;
        }
    }
    while tree.n() < n {
        subdivide_random_edge(rng, &mut tree);
    }
    tree
}

fn subdivide_random_edge(rng: &mut Rng, tree: &mut Tree) {
    let edges = tree.edges();
    let &(u, v) = edges.choose(rng).unwrap();
    let w = tree.add_vertex();
    tree.remove_edge(u, v);
    tree.add_edge(u, w);
    tree.add_edge(w, v);
}

/// Grows a connected set from a random vertex to a random size in
/// `1..=max_size`.
pub fn random_subtree(rng: &mut Rng, tree: &Tree, max_size: usize) -> Subtree {
    let target = rng.random_range(1..=max_size.clamp(1, tree.n()));
    let start = rng.random_range(0..tree.n());
    let mut inside = vec![false; tree.n()];
    inside[start] = true;
    let mut chosen = vec![start];
    let mut frontier: Vec<usize> = tree.neighbors(start).to_vec();
    while chosen.len() < target && !frontier.is_empty() {
        let v = frontier.swap_remove(rng.random_range(0..frontier.len()));
        if inside[v] {
            continue;
        }
        inside[v] = true;
        chosen.push(v);
        frontier.extend(tree.neighbors(v).iter().copied().filter(|&w| !inside[w]));
    }
    Subtree::new(tree, chosen).expect("grown sets are connected")
}

/// `m` random subtrees with ids `0..m` and no part labels.
pub fn random_subtree_family(rng: &mut Rng, tree: &Tree, m: usize, max_size: usize) -> SubtreeFamily {
    let members = (0..m)
        .map(|i| SubtreeMember {
            id: i as Id,
            part: None,
            subtree: random_subtree(rng, tree, max_size),
        })
        .collect();
    SubtreeFamily::new(tree.clone(), members).expect("distinct ids, valid subtrees")
}

/// `n` intervals with integer endpoints in `[0, range]`; ids `0..n`.
pub fn random_integer_intervals(rng: &mut Rng, n: usize, range: i64) -> IntervalFamily {
    let pairs: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let a = rng.random_range(0..=range);
            let b = rng.random_range(0..=range);
            (a.min(b), a.max(b))
        })
        .collect();
    IntervalFamily::from_integer_pairs(&pairs).expect("ordered endpoints")
}

/// `n` intervals with endpoints `p/q`, `q` in `1..=6`, inside `[0, range]`.
pub fn random_rational_intervals(rng: &mut Rng, n: usize, range: i64) -> IntervalFamily {
    let point = |rng: &mut Rng| {
        let q = rng.random_range(1..=6);
        Rational::new(rng.random_range(0..=range * q), q)
    };
    let members = (0..n)
        .map(|i| {
            let a = point(rng);
            let b = point(rng);
            IntervalMember::new(i as Id, a.min(b), a.max(b))
        })
        .collect();
    IntervalFamily::new(members).expect("ordered endpoints")
}

/// A random cotree over `ids` (nonempty, distinct). Unions have 2 to 4
/// children; about half of the internal nodes are complemented.
pub fn random_cotree(rng: &mut Rng, ids: &[Id]) -> Cotree {
    let mut ids = ids.to_vec();
    ids.shuffle(rng);
    build_cotree(rng, &ids)
}

fn build_cotree(rng: &mut Rng, ids: &[Id]) -> Cotree {
    if ids.len() == 1 {
        return Cotree::Leaf(ids[0]);
    }
    let parts = rng.random_range(2..=4usize.min(ids.len()));
    let mut cuts: Vec<usize> = (1..ids.len()).collect();
    cuts.shuffle(rng);
    let mut cuts = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    let mut children = Vec::with_capacity(parts);
    let mut start = 0;
    for end in cuts.into_iter().chain(std::iter::once(ids.len())) {
        children.push(build_cotree(rng, &ids[start..end]));
        start = end;
    }
    let node = Cotree::Union(children);
    if rng.random_bool(0.5) {
        Cotree::complement(node)
    } else {
        node
    }
}

/// Erdős–Rényi graph on `n` vertices.
pub fn random_graph(rng: &mut Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple by construction")
}

/// Random bipartite graph with sides `0..m` and `m..m+n`.
pub fn random_bipartite(rng: &mut Rng, m: usize, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..m {
        for x in m..m + n {
            if rng.random_bool(p) {
                edges.push((u, x));
            }
        }
    }
    Graph::from_edges(m + n, &edges).expect("simple by construction")
}

/// Shuffles `ids` and puts the first `ceil(n/2)` into part 1.
pub fn balanced_partition(rng: &mut Rng, ids: &[Id]) -> Partition {
    let mut ids = ids.to_vec();
    ids.shuffle(rng);
    let half = ids.len().div_ceil(2);
    Partition::from_pairs(
        ids.iter()
            .enumerate()
            .map(|(i, &id)| (id, if i < half { Part::One } else { Part::Two })),
    )
    .expect("ids are distinct")
}
