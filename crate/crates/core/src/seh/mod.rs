//! Balanced bi-cliques in a graph or its complement, with side `floor(n/4)`
//! for interval graphs and cographs and `floor(2n/9)` for chordal graphs.

mod chordal;

pub use chordal::{seh_chordal, seh_chordal_traced, ChordalDecomposition, ChordalExit, ChordalTrace};

use crate::certificate::{BicliqueCertificate, Kind};
use crate::cograph::{conforming_subset, cotree_to_graph, Cotree};
use crate::error::Result;
use crate::family::{Id, IntervalFamily};
use crate::normalize::perturb_intervals;
use crate::rational::Rational;
use crate::trace::Trace;

/// Guaranteed side for interval graphs and cographs.
pub fn quarter(n: usize) -> usize {
    n / 4
}

/// Splits a clique into halves (smaller ids first), each cut to `target`.
pub(crate) fn split_clique(mut ids: Vec<Id>, target: usize) -> Result<BicliqueCertificate> {
    ids.sort_unstable();
    let b = ids.split_off(ids.len() / 2);
    BicliqueCertificate::truncated(Kind::Complete, ids, b, target)
}

pub fn seh_interval(fam: &IntervalFamily) -> BicliqueCertificate {
    seh_interval_traced(fam).0
}

/// Sweeps the perturbed family to the point `x0` with as many intervals
/// strictly left of it as strictly right of it.
pub fn seh_interval_traced(fam: &IntervalFamily) -> (BicliqueCertificate, Trace) {
    let n = fam.len();
    let t = quarter(n);
    let mut trace = Trace::new();
    trace.push("n", n);
    trace.push("target", t);
    if n == 0 {
        return (BicliqueCertificate::vacuous(), trace);
    }
    let p = perturb_intervals(fam);
    // Endpoints now occupy 0..2n; x0 = n - 1/2 balances L(x0) and R(x0).
    let x0 = Rational::new(2 * n as i64 - 1, 2);
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut through = Vec::new();
    for m in p.members() {
        if m.right < x0 {
            left.push(m.id);
        } else if m.left > x0 {
            right.push(m.id);
        } else {
            through.push(m.id);
        }
    }
    debug_assert_eq!(left.len(), right.len());
    let big_m = left.len();
    trace.push("M", big_m);
    trace.push("through x0", through.len());
    let cert = if 4 * big_m >= n {
        trace.push("exit", "separated");
        BicliqueCertificate::truncated(Kind::Empty, left, right, t)
    } else {
        trace.push("exit", "clique");
        split_clique(through, t)
    };
    (cert.expect("sides come from disjoint classes"), trace)
}

pub fn seh_cograph(ct: &Cotree) -> Result<BicliqueCertificate> {
    seh_cograph_traced(ct).map(|(c, _)| c)
}

/// Takes a conforming set `W` for `U = V` and the larger conformity class of
/// `V - W`.
pub fn seh_cograph_traced(ct: &Cotree) -> Result<(BicliqueCertificate, Trace)> {
    let g = cotree_to_graph(ct);
    let n = g.ids.len();
    let t = quarter(n);
    let w = conforming_subset(ct, &g.ids)?;
    let mut trace = Trace::new();
    trace.push("n", n);
    trace.push("target", t);
    trace.push("|W|", w.len());
    let probe = g.index_of(w[0]).expect("W is a set of leaves");
    let (mut joined, mut apart) = (Vec::new(), Vec::new());
    for (v, &id) in g.ids.iter().enumerate() {
        if w.binary_search(&id).is_ok() {
            continue;
        }
        if g.graph.has_edge(v, probe) {
            joined.push(id);
        } else {
            apart.push(id);
        }
    }
    trace.push("|X(W)|", joined.len());
    trace.push("|Y(W)|", apart.len());
    let cert = if joined.len() >= apart.len() {
        BicliqueCertificate::truncated(Kind::Complete, w, joined, t)?
    } else {
        BicliqueCertificate::truncated(Kind::Empty, w, apart, t)?
    };
    Ok((cert, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::cograph::parse_cotree;

    #[test]
    fn four_touching_intervals_twice() {
        let pairs: Vec<(i64, i64)> = [(0, 1), (1, 2), (2, 3), (3, 4)].iter().flat_map(|&p| [p, p]).collect();
        let fam = IntervalFamily::from_integer_pairs(&pairs).unwrap();
        let cert = seh_interval(&fam);
        assert!(verify_certificate(&fam, &cert, 2, None).unwrap().valid);
    }

    #[test]
    fn identical_intervals_give_a_clique() {
        let fam = IntervalFamily::from_integer_pairs(&[(0, 3); 10]).unwrap();
        let cert = seh_interval(&fam);
        assert_eq!(cert.kind, Kind::Complete);
        assert_eq!(cert.min_side(), 2);
        assert!(verify_certificate(&fam, &cert, 2, None).unwrap().valid);
    }

    #[test]
    fn complete_cograph() {
        let ct = parse_cotree("(C (U 0 1 2 3 4 5 6 7))").unwrap();
        let cert = seh_cograph(&ct).unwrap();
        assert_eq!(cert.kind, Kind::Complete);
        assert!(verify_certificate(&cotree_to_graph(&ct), &cert, 2, None).unwrap().valid);
    }

    #[test]
    fn single_leaf_is_vacuous() {
        let cert = seh_cograph(&Cotree::Leaf(5)).unwrap();
        assert_eq!(cert, BicliqueCertificate::vacuous());
    }
}
