use std::collections::BTreeMap;

use ehcert::random::{random_cotree, random_integer_intervals, random_subtree_family, random_tree_max3, rng};
use ehcert::seh::{seh_chordal_traced, seh_cograph, seh_interval, ChordalExit};
use ehcert::{cograph::cotree_to_graph, verify_certificate, Id};

#[test]
fn interval_sides_reach_a_quarter() {
    let mut r = rng(11);
    for n in 0..120 {
        let fam = random_integer_intervals(&mut r, n, 3 * n as i64 + 1);
        let cert = seh_interval(&fam);
        assert!(verify_certificate(&fam, &cert, n / 4, None).unwrap().valid, "n = {n}");
    }
}

#[test]
fn cograph_sides_reach_a_quarter() {
    let mut r = rng(12);
    for n in 1..150 {
        let ids: Vec<Id> = (0..n as Id).collect();
        let ct = random_cotree(&mut r, &ids);
        let cert = seh_cograph(&ct).unwrap();
        let g = cotree_to_graph(&ct);
        assert!(verify_certificate(&g, &cert, n / 4, None).unwrap().valid, "n = {n}");
    }
}

#[test]
fn chordal_sides_reach_two_ninths_and_exits_vary() {
    let mut r = rng(13);
    let mut exits: BTreeMap<String, usize> = BTreeMap::new();
    for round in 0..600 {
        let vertices = 2 + round % 60;
        let n = 1 + (round * 7) % 120;
        let tree = random_tree_max3(&mut r, vertices);
        let max_size = 1 + round % 6;
        let fam = random_subtree_family(&mut r, &tree, n, max_size);
        let (cert, trace) = seh_chordal_traced(&fam).unwrap();
        assert!(verify_certificate(&fam, &cert, 2 * n / 9, None).unwrap().valid);
        if let Some(d) = &trace.decomposition {
            assert!(d.identities_hold(&fam.ids()));
        }
        let key = match trace.exit {
            ChordalExit::Clique { .. } => "clique",
            ChordalExit::HeavyPair { .. } => "heavy pair",
            ChordalExit::Orientation { .. } => "orientation",
            ChordalExit::Separated { .. } => "separated",
            ChordalExit::Overlap { .. } => "overlap",
            ChordalExit::Split { .. } => "split",
            ChordalExit::Interval => "interval",
            ChordalExit::Small => "small",
        };
        *exits.entry(key.to_string()).or_default() += 1;
    }
    println!("{exits:?}");
    assert!(exits.len() >= 3);
}

/// Three legs of length `leg` around vertex 0; leg `j` holds vertices
/// `1 + j*leg .. 1 + (j+1)*leg`, ordered outwards.
fn spider(leg: usize) -> ehcert::Tree {
    let mut edges = Vec::new();
    for j in 0..3 {
        let base = 1 + j * leg;
        edges.push((0, base));
        for i in 1..leg {
            edges.push((base + i - 1, base + i));
        }
    }
    ehcert::Tree::from_edges(1 + 3 * leg, &edges).unwrap()
}

#[test]
fn balanced_spiders_hold_the_bound() {
    use rand::Rng;
    let mut r = rng(14);
    let mut exits: BTreeMap<String, usize> = BTreeMap::new();
    for round in 0..3000 {
        let leg = 3 + round % 12;
        let tree = spider(leg);
        let on_legs = 6 + round % 40;
        let through = round % 25;
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for i in 0..on_legs {
            let j = i % 3;
            let a = r.random_range(0..leg);
            let b = r.random_range(a..leg.min(a + 1 + round % 5));
            sets.push((a..=b).map(|x| 1 + j * leg + x).collect());
        }
        for _ in 0..through {
            let mut s = vec![0];
            for j in 0..3 {
                if r.random_bool(0.6) {
                    let reach = r.random_range(0..=leg);
                    s.extend((0..reach).map(|x| 1 + j * leg + x));
                }
            }
            sets.push(s);
        }
        let n = sets.len();
        let fam = ehcert::SubtreeFamily::from_vertex_sets(tree, &sets).unwrap();
        let (cert, trace) = seh_chordal_traced(&fam).unwrap();
        assert!(verify_certificate(&fam, &cert, 2 * n / 9, None).unwrap().valid);
        if let Some(d) = &trace.decomposition {
            assert!(d.identities_hold(&fam.ids()));
        }
        *exits
            .entry(format!("{:?}", trace.exit).split(' ').next().unwrap().to_string())
            .or_default() += 1;
    }
    println!("{exits:?}");
    assert!(exits.len() >= 3);
}

/// Claws whose centre has three near-balanced branches, each ending in a fork,
/// with random noise members.
#[test]
fn noisy_claws_reach_every_inner_exit() {
    use rand::Rng;
    let mut r = rng(15);
    let mut exits: BTreeMap<String, usize> = BTreeMap::new();
    for _ in 0..2000 {
        let mut edges = vec![(0, 1), (0, 2), (0, 3)];
        let mut sets: Vec<Vec<usize>> = Vec::new();
        let mut next = 4;
        for u in 1..=3 {
            for _ in 0..2 {
                let (a, b) = (next, next + 1);
                next += 2;
                edges.extend([(u, a), (a, b)]);
                for _ in 0..r.random_range(2..7) {
                    sets.push(match r.random_range(0..3) {
                        0 => vec![a],
                        1 => vec![b],
                        _ => vec![a, b],
                    });
                }
            }
            for _ in 0..r.random_range(0..4) {
                sets.push(vec![u]);
            }
        }
        for _ in 0..r.random_range(14..26) {
            let mut s = vec![0];
            s.extend((1..=3).filter(|_| r.random_bool(0.85)));
            sets.push(s);
        }
        let n = sets.len();
        let tree = ehcert::Tree::from_edges(next, &edges).unwrap();
        let fam = ehcert::SubtreeFamily::from_vertex_sets(tree, &sets).unwrap();
        let (cert, trace) = seh_chordal_traced(&fam).unwrap();
        assert!(verify_certificate(&fam, &cert, 2 * n / 9, None).unwrap().valid);
        *exits
            .entry(format!("{:?}", trace.exit).split(' ').next().unwrap().to_string())
            .or_default() += 1;
    }
    println!("{exits:?}");
    for exit in ["Separated", "Overlap", "Split"] {
        assert!(exits.contains_key(exit), "{exit} never reached");
    }
}
