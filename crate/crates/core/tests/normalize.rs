use ehcert::extremal::gen_seh_chordal;
use ehcert::normalize::{normalize_subtrees, perturb_intervals, reduce_degree, separate_leaves};
use ehcert::random::{random_integer_intervals, random_subtree_family, random_tree, rng};
use ehcert::{IntervalFamily, SubtreeFamily, Tree};

#[test]
fn nine_subtree_instance_keeps_its_graph() {
    let fam = gen_seh_chordal(1);
    assert_eq!(reduce_degree(&fam), fam);
    let out = normalize_subtrees(&fam);
    assert_eq!(out.intersection_graph(), fam.intersection_graph());
    assert!(out.shared_leaves().is_empty());
    assert_eq!(out.ambient().leaf_count(), 3);
}

#[test]
fn twin_leaves_on_the_claw_are_pulled_apart() {
    let fam = SubtreeFamily::from_vertex_sets(Tree::star(3), &[vec![1], vec![1]]).unwrap();
    let out = separate_leaves(&fam);
    let a = out.members()[0].subtree.leaves(out.ambient());
    let b = out.members()[1].subtree.leaves(out.ambient());
    assert!(a.iter().all(|v| !b.contains(v)));
    assert!(out.intersection_graph().has_edge(0, 1));
    assert_eq!(out.ambient().leaf_count(), 3);
}

#[test]
fn random_twelve_vertex_trees() {
    let mut r = rng(61);
    for _ in 0..200 {
        let tree = random_tree(&mut r, 12);
        let fam = random_subtree_family(&mut r, &tree, 10, 5);
        let out = normalize_subtrees(&fam);
        assert_eq!(out.intersection_graph(), fam.intersection_graph());
        assert!(out.ambient().max_degree() <= 3);
        assert_eq!(out.ambient().leaf_count(), tree.leaf_count());
        assert!(out.shared_leaves().is_empty());
    }
}

#[test]
fn touching_intervals_stay_a_path() {
    let fam = IntervalFamily::from_integer_pairs(&[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    let out = perturb_intervals(&fam);
    assert_eq!(out.intersection_graph(), fam.intersection_graph());
    assert_eq!(out.intersection_graph().edges(), vec![(0, 1), (1, 2), (2, 3)]);
}

#[test]
fn many_ties_in_a_short_range() {
    let mut r = rng(62);
    for _ in 0..100 {
        let fam = random_integer_intervals(&mut r, 50, 20);
        let out = perturb_intervals(&fam);
        assert_eq!(out.intersection_graph(), fam.intersection_graph());
        assert_eq!(out.ids(), fam.ids());
        assert_eq!(perturb_intervals(&out), out);
    }
}
