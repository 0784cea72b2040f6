//! Extremal instances, the bipartite-to-subtree realizer, the randomized
//! lower-bound instance and the expectation `E[X]` of `K_{a,b}` copies.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::cograph::Cotree;
use crate::error::{Error, Result};
use crate::family::{Id, IntervalFamily, IntervalMember, Part, Partition, SubtreeFamily, SubtreeMember};
use crate::graph::Graph;
use crate::random::{random_bipartite, rng};
use crate::rational::guarded_ceil;
use crate::tree::{Subtree, Tree};

/// Ids `j*k .. (j+1)*k` are the copies of the `j`-th base object.
fn copies(base: usize, k: usize) -> impl Iterator<Item = (usize, Id)> {
    (0..base).flat_map(move |j| (0..k).map(move |c| (j, (j * k + c) as Id)))
}

/// `k` copies each of `[0,1], [1,2], [2,3], [3,4]`.
pub fn gen_seh_interval(k: usize) -> IntervalFamily {
    let members = copies(4, k)
        .map(|(j, id)| IntervalMember::new(id, (j as i64).into(), (j as i64 + 1).into()))
        .collect();
    IntervalFamily::new(members).expect("distinct ids")
}

/// A clique on `ids`, as a cotree.
fn clique(ids: &[Id]) -> Cotree {
    match ids {
        [one] => Cotree::Leaf(*one),
        _ => {
            Cotree::complement(Cotree::union(ids.iter().map(|&i| Cotree::Leaf(i)).collect()).expect("distinct leaves"))
        }
    }
}

/// The complement of three disjoint `K_k`, plus a disjoint `K_k`; `4k` leaves.
pub fn gen_seh_cograph(k: usize) -> Cotree {
    let block = |b: usize| -> Vec<Id> { ((b * k) as Id..((b + 1) * k) as Id).collect() };
    let three = Cotree::union(vec![clique(&block(0)), clique(&block(1)), clique(&block(2))]).expect("disjoint blocks");
    Cotree::union(vec![Cotree::complement(three), clique(&block(3))]).expect("disjoint blocks")
}

/// Nine subtrees of the claw (centre 0, leaves 1, 2, 3), `k` copies each: two
/// of each leaf, then the three leaf-to-leaf paths.
pub fn gen_seh_chordal(k: usize) -> SubtreeFamily {
    let base: [&[usize]; 9] = [&[1], &[1], &[2], &[2], &[3], &[3], &[0, 1, 2], &[0, 1, 3], &[0, 2, 3]];
    let tree = Tree::star(3);
    let members = copies(9, k)
        .map(|(j, id)| SubtreeMember {
            id,
            part: None,
            subtree: Subtree::new(&tree, base[j].to_vec()).expect("paths of the claw"),
        })
        .collect();
    SubtreeFamily::new(tree, members).expect("distinct ids")
}

/// `I = [0,1], [2,3], [4,5]` in part 1 and `J = [1,2], [3,4], [5,6]` in
/// part 2, `k` copies each. The `I` copies take ids `0..3k`.
pub fn gen_ceh_interval(k: usize) -> IntervalFamily {
    let members = copies(6, k)
        .map(|(j, id)| {
            let (left, part) = if j < 3 {
                (2 * j, Part::One)
            } else {
                (2 * (j - 3) + 1, Part::Two)
            };
            IntervalMember::new(id, (left as i64).into(), (left as i64 + 1).into()).with_part(part)
        })
        .collect();
    IntervalFamily::new(members).expect("distinct ids")
}

/// The eight-vertex cograph whose cross-part bipartite graph is extremal, with
/// each vertex `v_i` blown up into `k` independent copies (ids
/// `(i-1)k .. ik`). Vertices `v_1 .. v_4` form part 1.
pub fn gen_ceh_cograph(k: usize) -> (Cotree, Partition) {
    let v = |i: usize| -> Cotree {
        let ids: Vec<Cotree> = ((i - 1) * k..i * k).map(|x| Cotree::Leaf(x as Id)).collect();
        if ids.len() == 1 {
            ids.into_iter().next().unwrap()
        } else {
            Cotree::union(ids).expect("distinct leaves")
        }
    };
    let u = |xs: Vec<Cotree>| Cotree::union(xs).expect("disjoint blocks");
    let c = Cotree::complement;
    let g1 = u(vec![v(1), v(5)]);
    let g2 = u(vec![c(u(vec![v(2), v(6)])), c(u(vec![v(3), v(7)]))]);
    let g3 = u(vec![c(g1), c(g2)]);
    let g4 = c(u(vec![v(4), v(8)]));
    let g5 = u(vec![c(g3), g4]);
    let partition = Partition::from_pairs((0..8 * k).map(|x| (x as Id, if x < 4 * k { Part::One } else { Part::Two })))
        .expect("distinct ids");
    (g5, partition)
}

/// Realizes a bipartite graph on `0..m` and `m..n` as subtrees of the star
/// with centre 0 and leaves `1..=m`.
///
/// Vertex `i < m` becomes the part-2 singleton `{i + 1}`. Vertex `x >= m`
/// becomes the part-1 span of the leaves of its neighbours (the centre alone
/// when it has none). Ids are vertex indices.
pub fn bipartite_to_subtrees(g: &Graph, m: usize) -> Result<SubtreeFamily> {
    if m < 2 {
        return Err(Error::invalid(format!("the star needs at least 2 leaves, got m = {m}")));
    }
    if m > g.n() {
        return Err(Error::invalid(format!("m = {m} exceeds {} vertices", g.n())));
    }
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| (u < m) == (v < m)) {
        return Err(Error::invalid(format!("edge {u}-{v} lies inside one side")));
    }
    let tree = Tree::star(m);
    let mut members = Vec::with_capacity(g.n());
    for x in 0..g.n() {
        let (part, vertices) = if x < m {
            (Part::Two, vec![x + 1])
        } else {
            let leaves: Vec<usize> = g.neighbors(x).map(|i| i + 1).collect();
            (Part::One, if leaves.is_empty() { vec![0] } else { tree.span(&leaves) })
        };
        members.push(SubtreeMember {
            id: x as Id,
            part: Some(part),
            subtree: Subtree::new(&tree, vertices)?,
        });
    }
    SubtreeFamily::new(tree, members)
}

/// `c = 2 ln k / (k ln 2)`.
pub fn lower_bound_constant(k: usize) -> f64 {
    let k = k as f64;
    2.0 * k.ln() / (k * std::f64::consts::LN_2)
}

/// `(ceil(ck), ceil(cn))`.
pub fn lower_bound_dims(k: usize, n: usize) -> (usize, usize) {
    let c = lower_bound_constant(k);
    (guarded_ceil(c * k as f64), guarded_ceil(c * n as f64))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundInstance {
    pub family: SubtreeFamily,
    /// Sides `0..k` and `k..k+n`.
    pub graph: Graph,
    pub a: usize,
    pub b: usize,
}

/// A uniform random bipartite graph inside `K_{k,n}` realized on the star with
/// `k` leaves. `dims` overrides the target `(a, b)`.
pub fn gen_lower_bound(k: usize, n: usize, seed: u64, dims: Option<(usize, usize)>) -> Result<LowerBoundInstance> {
    if k < 2 || n < k {
        return Err(Error::invalid(format!("need 2 <= k <= n, got k = {k}, n = {n}")));
    }
    let graph = random_bipartite(&mut rng(seed), k, n, 0.5);
    let family = bipartite_to_subtrees(&graph, k)?;
    let (a, b) = dims.unwrap_or_else(|| lower_bound_dims(k, n));
    Ok(LowerBoundInstance { family, graph, a, b })
}

/// Replaces each part-1 member by `|F_2| t` copies and each part-2 member by
/// `|F_1| t` copies, so both parts have `|F_1| |F_2| t` members.
///
/// New ids are consecutive: the copies of the `i`-th part-1 member (in id
/// order) come first as one block, then the part-2 blocks.
pub fn equalize_sizes(fam: &SubtreeFamily, t: usize) -> Result<SubtreeFamily> {
    if t == 0 {
        return Err(Error::invalid("t must be at least 1"));
    }
    let by_part = |p: Part| -> Vec<&SubtreeMember> { fam.members().iter().filter(|m| m.part == Some(p)).collect() };
    let (ones, twos) = (by_part(Part::One), by_part(Part::Two));
    if ones.len() + twos.len() != fam.len() || ones.is_empty() || twos.is_empty() {
        return Err(Error::MissingPartLabels(
            "both parts must be labelled and nonempty".into(),
        ));
    }
    let overflow = || Error::Overflow(format!("{} * {} * {t} copies", ones.len(), twos.len()));
    let per_one = twos.len().checked_mul(t).ok_or_else(overflow)?;
    let per_two = ones.len().checked_mul(t).ok_or_else(overflow)?;
    let side = ones.len().checked_mul(per_one).ok_or_else(overflow)?;
    side.checked_mul(2)
        .filter(|&s| Id::try_from(s).is_ok())
        .ok_or_else(overflow)?;

    let mut members = Vec::with_capacity(2 * side);
    let mut next: Id = 0;
    for (group, reps) in [(&ones, per_one), (&twos, per_two)] {
        for m in group.iter() {
            for _ in 0..reps {
                members.push(SubtreeMember {
                    id: next,
                    part: m.part,
                    subtree: m.subtree.clone(),
                });
                next += 1;
            }
        }
    }
    SubtreeFamily::new(fam.ambient().clone(), members)
}

/// `C(k,a) C(n,b) 2^(1-ab)`, exactly and as a float.
pub fn expected_kab(k: usize, n: usize, a: usize, b: usize) -> (BigRational, f64) {
    let choose = |n: usize, r: usize| -> BigUint {
        if r > n {
            BigUint::ZERO
        } else {
            binomial(BigUint::from(n), BigUint::from(r))
        }
    };
    let count = BigInt::from(choose(k, a) * choose(n, b));
    let ab = a * b;
    let value = if ab == 0 {
        BigRational::from_integer(count * 2)
    } else {
        BigRational::new(count, BigInt::one() << (ab - 1))
    };
    let approx = value.to_f64().unwrap_or(f64::INFINITY);
    (value, approx)
}
