//! Representation surgeries that leave the intersection graph untouched:
//! ambient degree reduction, leaf separation, and endpoint perturbation.

use crate::family::{Id, IntervalFamily, IntervalMember, SubtreeFamily, SubtreeMember};
use crate::rational::Rational;
use crate::tree::{Subtree, Tree};

/// Replaces every ambient vertex `v` of degree `d >= 4` by a path `v_1 .. v_d`
/// whose `i`-th vertex takes over the edge to the `i`-th neighbour of `v`.
///
/// `v` itself becomes `v_1`; `v_2 .. v_d` get fresh ids `n, n+1, ...`. Members
/// containing `v` receive the whole path. Vertices are processed in ascending
/// order, and a tree with maximum degree at most 3 comes back unchanged.
pub fn reduce_degree(fam: &SubtreeFamily) -> SubtreeFamily {
    let mut tree = fam.ambient().clone();
    let mut sets: Vec<Subtree> = fam.members().iter().map(|m| m.subtree.clone()).collect();
    let original = tree.n();
    for v in 0..original {
        let d = tree.degree(v);
        if d < 4 {
            continue;
        }
        let nbrs = tree.neighbors(v).to_vec();
        let mut path = vec![v];
        for &u in &nbrs[1..] {
            tree.remove_edge(v, u);
            let p = tree.add_vertex();
            tree.add_edge(u, p);
            tree.add_edge(*path.last().unwrap(), p);
            path.push(p);
        }
        for s in sets.iter_mut().filter(|s| s.contains(v)) {
            for &p in &path[1..] {
                s.insert(p);
            }
        }
    }
    rebuild(fam, tree, sets)
}

/// Ensures no ambient vertex is a leaf of two distinct members.
///
/// Members are scanned by ascending id and their leaves by ascending vertex; the
/// first member to claim a leaf keeps it. A later member `T_i` with the same
/// leaf `v` is grown along fresh subdivision vertices `w` on edges `v u` with
/// `u` outside `T_i` until `v` has two neighbours inside `T_i`. If `v` has fewer
/// than two ambient neighbours, pendant vertices are attached first.
pub fn separate_leaves(fam: &SubtreeFamily) -> SubtreeFamily {
    let mut tree = fam.ambient().clone();
    let mut sets: Vec<Subtree> = fam.members().iter().map(|m| m.subtree.clone()).collect();
    let mut owner: Vec<Option<usize>> = vec![None; tree.n()];

    for i in 0..sets.len() {
        for v in sets[i].leaves(&tree) {
            match owner[v] {
                None => {
                    owner[v] = Some(i);
                    continue;
                }
                Some(j) if j == i => continue,
                Some(_) => {}
            }
            while tree.degree(v) < 2 {
                let u = tree.add_vertex();
                owner.push(None);
                tree.add_edge(v, u);
            }
            let need = 2 - sets[i].degree_in(&tree, v);
            let outside: Vec<usize> = tree
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| !sets[i].contains(u))
                .take(need)
                .collect();
            for u in outside {
                let w = tree.add_vertex();
                owner.push(Some(i));
                tree.remove_edge(u, v);
                tree.add_edge(u, w);
                tree.add_edge(w, v);
                for s in sets.iter_mut() {
                    if s.contains(u) && s.contains(v) {
                        s.insert(w);
                    }
                }
                sets[i].insert(w);
            }
        }
    }
    rebuild(fam, tree, sets)
}

/// Degree reduction followed by leaf separation.
pub fn normalize_subtrees(fam: &SubtreeFamily) -> SubtreeFamily {
    let out = separate_leaves(&reduce_degree(fam));
    debug_assert_eq!(reduce_degree(&out), out);
    out
}

fn rebuild(fam: &SubtreeFamily, tree: Tree, sets: Vec<Subtree>) -> SubtreeFamily {
    let members = fam
        .members()
        .iter()
        .zip(sets)
        .map(|(m, subtree)| SubtreeMember {
            id: m.id,
            part: m.part,
            subtree,
        })
        .collect();
    SubtreeFamily::new_unchecked(tree, members)
}

/// Re-embeds all endpoints at distinct integers `0, 1, 2, ...`.
///
/// Events are ordered by coordinate, then left-before-right, then member id. A
/// left endpoint sharing a coordinate with a right endpoint stays before it, so
/// touching intervals keep intersecting and every other relation is preserved.
pub fn perturb_intervals(fam: &IntervalFamily) -> IntervalFamily {
    let mut events: Vec<(Rational, u8, Id, usize)> = Vec::with_capacity(2 * fam.len());
    for (idx, m) in fam.members().iter().enumerate() {
        events.push((m.left, 0, m.id, idx));
        events.push((m.right, 1, m.id, idx));
    }
    events.sort();
    let mut left = vec![0i64; fam.len()];
    let mut right = vec![0i64; fam.len()];
    for (pos, &(_, kind, _, idx)) in events.iter().enumerate() {
        if kind == 0 {
            left[idx] = pos as i64;
        } else {
            right[idx] = pos as i64;
        }
    }
    let members = fam
        .members()
        .iter()
        .enumerate()
        .map(|(idx, m)| IntervalMember {
            id: m.id,
            part: m.part,
            left: Rational::from_integer(left[idx]),
            right: Rational::from_integer(right[idx]),
        })
        .collect();
    IntervalFamily::new(members).expect("perturbation keeps ids and orientation")
}

/// Reads a family on a path-shaped ambient tree as intervals of path positions.
pub fn path_family_to_intervals(fam: &SubtreeFamily) -> Option<IntervalFamily> {
    let order = fam.ambient().path_order()?;
    let mut pos = vec![0i64; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i as i64;
    }
    let members = fam
        .members()
        .iter()
        .map(|m| {
            let vs = m.subtree.vertices();
            let lo = vs.iter().map(|&v| pos[v]).min().unwrap();
            let hi = vs.iter().map(|&v| pos[v]).max().unwrap();
            IntervalMember {
                id: m.id,
                part: m.part,
                left: Rational::from_integer(lo),
                right: Rational::from_integer(hi),
            }
        })
        .collect();
    Some(IntervalFamily::new(members).expect("ids already distinct"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn claw_family(sets: &[Vec<usize>]) -> SubtreeFamily {
        SubtreeFamily::from_vertex_sets(Tree::star(3), sets).unwrap()
    }

    #[test]
    fn star_center_becomes_a_path() {
        let fam = SubtreeFamily::from_vertex_sets(Tree::star(4), &[vec![0]]).unwrap();
        let out = reduce_degree(&fam);
        let t = out.ambient();
        assert_eq!(t.n(), 8);
        assert_eq!(t.max_degree(), 3);
        assert_eq!(t.leaf_count(), 4);
        assert_eq!(out.members()[0].subtree.vertices(), &[0, 5, 6, 7]);
        let mut edges = t.edges();
        edges.sort();
        assert_eq!(edges, vec![(0, 1), (0, 5), (2, 5), (3, 6), (4, 7), (5, 6), (6, 7)]);
    }

    #[test]
    fn low_degree_tree_is_untouched() {
        let fam = claw_family(&[vec![1], vec![0, 2], vec![3]]);
        assert_eq!(reduce_degree(&fam), fam);
    }

    #[test]
    fn shared_single_vertex_leaves_are_separated() {
        let fam = claw_family(&[vec![1], vec![1]]);
        let out = separate_leaves(&fam);
        assert!(out.shared_leaves().is_empty());
        assert!(out.intersection_graph().has_edge(0, 1));
        assert_eq!(out.ambient().leaf_count(), 3);
        assert_eq!(out.ambient().max_degree(), 3);
    }

    #[test]
    fn disjoint_singletons_are_untouched() {
        let fam = claw_family(&[vec![1], vec![2], vec![3]]);
        assert_eq!(separate_leaves(&fam), fam);
    }

    #[test]
    fn single_vertex_ambient_grows_a_path() {
        let fam = SubtreeFamily::from_vertex_sets(Tree::single(), &[vec![0], vec![0], vec![0]]).unwrap();
        let out = normalize_subtrees(&fam);
        assert!(out.shared_leaves().is_empty());
        assert_eq!(out.intersection_graph(), fam.intersection_graph());
        assert!(out.ambient().is_path());
    }

    #[test]
    fn perturbation_of_touching_intervals() {
        let fam = IntervalFamily::from_integer_pairs(&[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let out = perturb_intervals(&fam);
        let mut ends: Vec<Rational> = out.members().iter().flat_map(|m| [m.left, m.right]).collect();
        ends.sort();
        ends.dedup();
        assert_eq!(ends.len(), 8);
        assert_eq!(out.intersection_graph(), fam.intersection_graph());
    }

    #[test]
    fn distinct_endpoints_stay_in_order() {
        let fam = IntervalFamily::from_integer_pairs(&[(0, 5), (2, 3), (4, 9)]).unwrap();
        let out = perturb_intervals(&fam);
        let pairs: Vec<(Rational, Rational)> = out.members().iter().map(|m| (m.left, m.right)).collect();
        let r = Rational::from_integer;
        assert_eq!(pairs, vec![(r(0), r(4)), (r(1), r(2)), (r(3), r(5))]);
    }

    #[test]
    fn path_family_positions() {
        let t = Tree::from_edges(3, &[(2, 0), (0, 1)]).unwrap();
        let fam = SubtreeFamily::from_vertex_sets(t, &[vec![0, 1], vec![2]]).unwrap();
        let iv = path_family_to_intervals(&fam).unwrap();
        assert_eq!(iv.intersection_graph(), fam.intersection_graph());
        assert_eq!(iv.members()[1].left, Rational::from_integer(2));
    }
}
