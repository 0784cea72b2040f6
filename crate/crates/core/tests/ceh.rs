use ehcert::ceh::{
    ceh_cograph, ceh_interval, ceh_interval_traced, ceh_tk, ceh_tk_traced, ceh_tk_weak, tk_target, tk_weak_target,
    TkCase,
};
use ehcert::cograph::{cotree_to_graph, parse_cotree, Cotree};
use ehcert::extremal::{gen_ceh_cograph, gen_ceh_interval};
use ehcert::oracle::{max_colorful_biclique, DEFAULT_CAP};
use ehcert::random::{
    balanced_partition, random_cotree, random_rational_intervals, random_subtree_family, random_tree_with_leaves, rng,
};
use ehcert::{verify_certificate, Error, Id, IntervalFamily, Kind, LabeledGraph, Part, Partition, SubtreeFamily, Tree};

fn labels(g: &LabeledGraph, p: &Partition) -> Vec<bool> {
    g.ids.iter().map(|&id| p.get(id) == Some(Part::One)).collect()
}

#[test]
fn base_interval_instance() {
    let fam = gen_ceh_interval(1);
    let p = fam.partition().unwrap();
    let cert = ceh_interval(&fam).unwrap();
    assert!(verify_certificate(&fam, &cert, 1, Some(&p)).unwrap().valid);
    let g = fam.labeled_graph();
    assert_eq!(
        max_colorful_biclique(&g.graph, &labels(&g, &p), DEFAULT_CAP).unwrap().0,
        2
    );
}

#[test]
fn far_apart_parts_are_case_one() {
    let pairs: Vec<(i64, i64)> = (0..4).map(|_| (0, 1)).chain((0..4).map(|_| (5, 6))).collect();
    let fam = IntervalFamily::from_integer_pairs(&pairs).unwrap();
    let p = Partition::from_pairs((0..8).map(|i| (i, if i < 4 { Part::One } else { Part::Two }))).unwrap();
    let fam = fam.with_partition(&p).unwrap();
    let (cert, trace) = ceh_interval_traced(&fam).unwrap();
    assert_eq!(cert.kind, Kind::Empty);
    assert!(verify_certificate(&fam, &cert, 2, Some(&p)).unwrap().valid);
    assert!(trace.get("case").is_some());
}

#[test]
fn sixty_labelled_intervals() {
    let mut r = rng(31);
    for _ in 0..50 {
        let fam = random_rational_intervals(&mut r, 60, 30);
        let p = balanced_partition(&mut r, &fam.ids());
        let fam = fam.with_partition(&p).unwrap();
        let cert = ceh_interval(&fam).unwrap();
        assert!(verify_certificate(&fam, &cert, 10, Some(&p)).unwrap().valid);
    }
}

#[test]
fn base_cograph_instance() {
    let (ct, p) = gen_ceh_cograph(1);
    let g = cotree_to_graph(&ct);
    let cert = ceh_cograph(&ct, &p).unwrap();
    assert!(verify_certificate(&g, &cert, 1, Some(&p)).unwrap().valid);
    assert_eq!(
        max_colorful_biclique(&g.graph, &labels(&g, &p), DEFAULT_CAP).unwrap().0,
        2
    );
}

#[test]
fn complete_graph_gives_a_complete_pair() {
    for n in [4usize, 9, 16, 33] {
        let ids: Vec<Id> = (0..n as Id).collect();
        let ct = Cotree::complement(Cotree::union(ids.iter().map(|&i| Cotree::leaf(i)).collect()).unwrap());
        let p = balanced_partition(&mut rng(n as u64), &ids);
        let cert = ceh_cograph(&ct, &p).unwrap();
        assert_eq!(cert.kind, Kind::Complete);
        let small = p.sizes().0.min(p.sizes().1);
        assert!(
            verify_certificate(&cotree_to_graph(&ct), &cert, small / 4, Some(&p))
                .unwrap()
                .valid
        );
    }
}

#[test]
fn random_64_leaf_cotrees() {
    let mut r = rng(32);
    let ids: Vec<Id> = (0..64).collect();
    for _ in 0..100 {
        let ct = random_cotree(&mut r, &ids);
        let p = balanced_partition(&mut r, &ids);
        let cert = ceh_cograph(&ct, &p).unwrap();
        assert!(
            verify_certificate(&cotree_to_graph(&ct), &cert, 8, Some(&p))
                .unwrap()
                .valid
        );
    }
}

#[test]
fn cograph_rejects_a_partial_partition() {
    let ct = parse_cotree("(U 0 1 2 3)").unwrap();
    let p = Partition::from_pairs([(0, Part::One), (1, Part::Two)]).unwrap();
    assert!(matches!(ceh_cograph(&ct, &p), Err(Error::MissingPartLabels(_))));
}

#[test]
fn eight_leaf_trees_with_two_thousand_members() {
    let mut r = rng(33);
    let tree = random_tree_with_leaves(&mut r, 8, 120);
    let fam = random_subtree_family(&mut r, &tree, 2000, 25);
    let p = balanced_partition(&mut r, &fam.ids());
    let fam = fam.with_partition(&p).unwrap();
    assert_eq!(tk_target(8, 2000), 12);
    assert_eq!(tk_weak_target(8, 2000), 47);
    let (cert, trace) = ceh_tk_traced(&fam).unwrap();
    assert!(verify_certificate(&fam, &cert, 12, Some(&p)).unwrap().valid);
    assert!(!trace.levels.is_empty());
    let weak = ceh_tk_weak(&fam).unwrap();
    assert!(verify_certificate(&fam, &weak, 47, Some(&p)).unwrap().valid);
}

#[test]
fn star_with_interleaved_paths() {
    // Three legs of length 10 around vertex 0; leg j holds 1 + 10j ..= 10 + 10j.
    let mut edges = Vec::new();
    for j in 0..3 {
        let base = 1 + 10 * j;
        edges.push((0, base));
        for i in 1..10 {
            edges.push((base + i - 1, base + i));
        }
    }
    let tree = Tree::from_edges(31, &edges).unwrap();
    let mut sets = Vec::new();
    for j in 0..3 {
        let base = 1 + 10 * j;
        for s in 0..8 {
            sets.push((base + s..base + s + 3).collect::<Vec<_>>());
        }
    }
    let n = sets.len();
    let fam = SubtreeFamily::from_vertex_sets(tree, &sets).unwrap();
    let p = Partition::from_pairs((0..n as Id).map(|i| (i, if i % 2 == 0 { Part::One } else { Part::Two }))).unwrap();
    let fam = fam.with_partition(&p).unwrap();
    let weak = ceh_tk_weak(&fam).unwrap();
    assert!(verify_certificate(&fam, &weak, n / 12, Some(&p)).unwrap().valid);
    let strong = ceh_tk(&fam).unwrap();
    assert!(
        verify_certificate(&fam, &strong, tk_target(3, n), Some(&p))
            .unwrap()
            .valid
    );
}

#[test]
fn ladders_keep_their_halving_conditions() {
    let mut r = rng(34);
    let mut mixed = 0;
    for round in 0..300 {
        let k = [3, 4, 6, 8][round % 4];
        let tree = random_tree_with_leaves(&mut r, k, 30 + round % 50);
        let fam = random_subtree_family(&mut r, &tree, 40 + round % 200, 1 + round % 10);
        let p = balanced_partition(&mut r, &fam.ids());
        let fam = fam.with_partition(&p).unwrap();
        let (cert, trace) = ceh_tk_traced(&fam).unwrap();
        assert!(
            verify_certificate(&fam, &cert, tk_target(k, fam.len()), Some(&p))
                .unwrap()
                .valid
        );
        for level in &trace.levels {
            if let TkCase::Mixed { .. } = level.case {
                mixed += 1;
            }
            if let Some(ladder) = &level.ladder {
                assert!(ladder.conditions_hold(), "round {round}");
            }
        }
    }
    assert!(mixed > 0);
}

#[test]
fn unlabelled_tree_family_is_rejected() {
    let fam = SubtreeFamily::from_vertex_sets(Tree::star(3), &[vec![1], vec![2]]).unwrap();
    assert!(matches!(ceh_tk(&fam), Err(Error::MissingPartLabels(_))));
}
