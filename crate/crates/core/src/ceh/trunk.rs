use crate::error::{Error, Result};
use crate::tree::{Subtree, Tree};

/// The trunk of a tree with maximum degree 3: the span of the anchors `r_i`,
/// where `r_i` is the degree-3 vertex closest to leaf `v_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrunkData {
    pub trunk: Subtree,
    /// Leaves `v_1 .. v_k` in ascending order.
    pub leaves: Vec<usize>,
    pub anchors: Vec<usize>,
    /// `s_i`: the neighbour of `r_i` towards `v_i`.
    pub gates: Vec<usize>,
    /// `P(v_i, s_i)`, listed from `v_i`.
    pub branch_paths: Vec<Vec<usize>>,
}

impl TrunkData {
    pub fn k(&self) -> usize {
        self.leaves.len()
    }

    pub fn trunk_leaf_count(&self, tree: &Tree) -> usize {
        self.trunk.leaves(tree).len()
    }

    /// Branch index and position along the branch path for every vertex off
    /// the trunk.
    pub fn locations(&self, n: usize) -> Vec<Option<(usize, usize)>> {
        let mut loc = vec![None; n];
        for (j, path) in self.branch_paths.iter().enumerate() {
            for (pos, &v) in path.iter().enumerate() {
                loc[v] = Some((j, pos));
            }
        }
        loc
    }
}

pub fn trunk(tree: &Tree) -> Result<TrunkData> {
    if tree.max_degree() > 3 {
        return Err(Error::invalid("trunk needs maximum degree at most 3"));
    }
    let leaves = tree.leaves();
    if leaves.len() < 3 {
        return Err(Error::invalid(format!(
            "trunk needs at least 3 leaves, found {}",
            leaves.len()
        )));
    }
    let mut anchors = Vec::with_capacity(leaves.len());
    let mut gates = Vec::with_capacity(leaves.len());
    let mut branch_paths = Vec::with_capacity(leaves.len());
    for &v in &leaves {
        let mut path = vec![v];
        let mut prev = v;
        let mut cur = tree.neighbors(v)[0];
        while tree.degree(cur) < 3 {
            path.push(cur);
            let next = tree
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| w != prev)
                .expect("internal path vertex");
            prev = cur;
            cur = next;
        }
        anchors.push(cur);
        gates.push(prev);
        branch_paths.push(path);
    }
    let trunk = Subtree::new(tree, tree.span(&anchors))?;
    Ok(TrunkData {
        trunk,
        leaves,
        anchors,
        gates,
        branch_paths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subdivided_star(legs: usize, len: usize) -> Tree {
        let mut edges = Vec::new();
        for j in 0..legs {
            let base = 1 + j * len;
            edges.push((0, base));
            for i in 1..len {
                edges.push((base + i - 1, base + i));
            }
        }
        Tree::from_edges(1 + legs * len, &edges).unwrap()
    }

    #[test]
    fn subdivided_star_has_a_point_trunk() {
        let t = subdivided_star(3, 3);
        let d = trunk(&t).unwrap();
        assert_eq!(d.trunk.vertices(), &[0]);
        assert_eq!(d.anchors, vec![0, 0, 0]);
        assert_eq!(d.branch_paths[0], vec![3, 2, 1]);
        assert_eq!(d.gates, vec![1, 4, 7]);
    }

    #[test]
    fn caterpillar_of_ys() {
        // Spine 0-1-2-3; each spine vertex carries pendant paths so that the
        // tree has six leaves and maximum degree 3.
        let edges = [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (1, 6), (2, 7), (3, 8), (3, 9)];
        let t = Tree::from_edges(10, &edges).unwrap();
        assert_eq!(t.leaf_count(), 6);
        let d = trunk(&t).unwrap();
        assert_eq!(d.trunk.vertices(), &[0, 1, 2, 3]);
        assert!(d.trunk_leaf_count(&t) <= 3);
    }

    #[test]
    fn paths_have_no_trunk() {
        assert!(trunk(&Tree::path(5)).is_err());
    }
}
