//! Colorful bi-cliques: one side drawn from each part of a given partition.

mod tk;
mod trunk;

pub use tk::{
    ceh_tk, ceh_tk_traced, ceh_tk_weak, ceh_tk_weak_traced, ladder_depth, tk_target, tk_weak_target, LadderStage,
    LadderState, TkCase, TkLevel, TkTrace,
};
pub use trunk::{trunk, TrunkData};

use crate::certificate::{BicliqueCertificate, Kind};
use crate::cograph::{conforming_subset, cotree_to_graph, Cotree};
use crate::error::{Error, Result};
use crate::family::{Id, IntervalFamily, Part, Partition};
use crate::normalize::perturb_intervals;
use crate::rational::Rational;
use crate::trace::Trace;

/// Guaranteed side for interval graphs at a balanced partition.
pub fn sixth(n: usize) -> usize {
    n / 6
}

pub(crate) fn require_parts(partition: Option<Partition>) -> Result<Partition> {
    let p = partition.ok_or_else(|| Error::MissingPartLabels("every member needs a part label".into()))?;
    let (a, b) = p.sizes();
    if a == 0 || b == 0 {
        return Err(Error::MissingPartLabels("both parts must be nonempty".into()));
    }
    Ok(p)
}

pub fn ceh_interval(fam: &IntervalFamily) -> Result<BicliqueCertificate> {
    ceh_interval_traced(fam).map(|(c, _)| c)
}

/// Compares the one-third thresholds `a_i` (from the left) and `b_i` (from the
/// right) of the two parts. Side `i` has at least `ceil(|F_i|/3)` members.
pub fn ceh_interval_traced(fam: &IntervalFamily) -> Result<(BicliqueCertificate, Trace)> {
    require_parts(fam.partition())?;
    let p = perturb_intervals(fam);
    let mut parts: [Vec<(Rational, Rational, Id)>; 2] = Default::default();
    for m in p.members() {
        let slot = usize::from(m.part == Some(Part::Two));
        parts[slot].push((m.left, m.right, m.id));
    }
    let q: [usize; 2] = std::array::from_fn(|i| parts[i].len().div_ceil(3));
    let a: [Rational; 2] = std::array::from_fn(|i| {
        let mut r: Vec<Rational> = parts[i].iter().map(|x| x.1).collect();
        r.sort();
        r[q[i] - 1]
    });
    let b: [Rational; 2] = std::array::from_fn(|i| {
        let mut l: Vec<Rational> = parts[i].iter().map(|x| x.0).collect();
        l.sort_by(|x, y| y.cmp(x));
        l[q[i] - 1]
    });
    let upto = |i: usize| -> Vec<Id> { parts[i].iter().filter(|x| x.1 <= a[i]).map(|x| x.2).collect() };
    let from = |i: usize| -> Vec<Id> { parts[i].iter().filter(|x| x.0 >= b[i]).map(|x| x.2).collect() };

    let mut trace = Trace::new();
    trace.push("|F_1|", parts[0].len());
    trace.push("|F_2|", parts[1].len());
    trace.push("ceil(|F_i|/3)", format!("{} {}", q[0], q[1]));
    trace.push("a_1 a_2", format!("{} {}", a[0], a[1]));
    trace.push("b_1 b_2", format!("{} {}", b[0], b[1]));
    let cert = if a[0] < b[1] {
        trace.push("case", "separated, F_1 left");
        BicliqueCertificate::new(Kind::Empty, upto(0), from(1))?
    } else if a[1] < b[0] {
        trace.push("case", "separated, F_1 right");
        BicliqueCertificate::new(Kind::Empty, from(0), upto(1))?
    } else {
        trace.push(
            "case",
            if b[0] <= a[0] && b[1] <= a[1] {
                "both spanning"
            } else {
                "nested"
            },
        );
        let middle = |i: usize| -> Vec<Id> {
            parts[i]
                .iter()
                .filter(|x| x.1 >= a[i] && x.0 <= b[i])
                .map(|x| x.2)
                .collect()
        };
        BicliqueCertificate::new(Kind::Complete, middle(0), middle(1))?
    };
    trace.push("sides", format!("{} {}", cert.side_a().len(), cert.side_b().len()));
    Ok((cert, trace))
}

/// Guaranteed side for cographs: `floor(|V_i|/4)` on each part.
pub fn ceh_cograph(ct: &Cotree, partition: &Partition) -> Result<BicliqueCertificate> {
    ceh_cograph_traced(ct, partition).map(|(c, _)| c)
}

pub fn ceh_cograph_traced(ct: &Cotree, partition: &Partition) -> Result<(BicliqueCertificate, Trace)> {
    let g = cotree_to_graph(ct);
    partition.check_against(&g.ids, true)?;
    let v1 = partition.members(Part::One);
    let v2 = partition.members(Part::Two);
    let w = conforming_subset(ct, &v1)?;
    let probe = g.index_of(w[0]).expect("W is a set of leaves");
    let in_w = |id: &Id| w.binary_search(id).is_ok();
    let joined = |id: &Id| g.graph.has_edge(g.index_of(*id).unwrap(), probe);
    let classes =
        |side: &[Id]| -> (Vec<Id>, Vec<Id>) { side.iter().copied().filter(|id| !in_w(id)).partition(|id| joined(id)) };
    let larger = |(x, y): (Vec<Id>, Vec<Id>)| {
        if x.len() >= y.len() {
            (Kind::Complete, x)
        } else {
            (Kind::Empty, y)
        }
    };

    let mut trace = Trace::new();
    trace.push("|V_1|", v1.len());
    trace.push("|V_2|", v2.len());
    trace.push("|W|", w.len());
    let w2: Vec<Id> = v2.iter().copied().filter(in_w).collect();
    trace.push("|V_1 ∩ W|", v1.iter().filter(|id| in_w(id)).count());
    trace.push("|V_2 ∩ W|", w2.len());
    let (kind, u1, u2) = if 2 * w2.len() < v2.len() {
        trace.push("case", "V_2 mostly outside W");
        let (kind, u2) = larger(classes(&v2));
        (kind, v1.iter().copied().filter(in_w).collect(), u2)
    } else {
        trace.push("case", "V_2 mostly inside W");
        let (kind, u1) = larger(classes(&v1));
        (kind, u1, w2)
    };
    let cert = if u1.is_empty() || u2.is_empty() {
        trace.push("fallback", "single pair");
        let (a, b) = (v1[0], v2[0]);
        let adjacent = g.graph.has_edge(g.index_of(a).unwrap(), g.index_of(b).unwrap());
        BicliqueCertificate::new(if adjacent { Kind::Complete } else { Kind::Empty }, vec![a], vec![b])?
    } else {
        BicliqueCertificate::new(kind, u1, u2)?
    };
    trace.push("sides", format!("{} {}", cert.side_a().len(), cert.side_b().len()));
    Ok((cert, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::cograph::parse_cotree;
    use crate::family::IntervalMember;

    fn labeled(pairs: &[(i64, i64, Part)]) -> IntervalFamily {
        let members = pairs
            .iter()
            .enumerate()
            .map(|(i, &(l, r, p))| IntervalMember::new(i as Id, l.into(), r.into()).with_part(p))
            .collect();
        IntervalFamily::new(members).unwrap()
    }

    #[test]
    fn separated_parts_give_an_empty_pair() {
        use Part::*;
        let fam = labeled(&[
            (0, 1, One),
            (0, 1, One),
            (0, 1, One),
            (5, 6, Two),
            (5, 6, Two),
            (5, 6, Two),
        ]);
        let cert = ceh_interval(&fam).unwrap();
        assert_eq!(cert.kind, Kind::Empty);
        assert!(
            verify_certificate(&fam, &cert, 1, fam.partition().as_ref())
                .unwrap()
                .valid
        );
    }

    #[test]
    fn nested_parts_give_a_complete_pair() {
        use Part::*;
        let fam = labeled(&[
            (0, 9, One),
            (1, 8, One),
            (2, 7, One),
            (3, 6, Two),
            (4, 5, Two),
            (2, 5, Two),
        ]);
        let cert = ceh_interval(&fam).unwrap();
        assert_eq!(cert.kind, Kind::Complete);
        assert!(
            verify_certificate(&fam, &cert, 1, fam.partition().as_ref())
                .unwrap()
                .valid
        );
    }

    #[test]
    fn unlabeled_intervals_are_rejected() {
        let fam = IntervalFamily::from_integer_pairs(&[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(ceh_interval(&fam), Err(Error::MissingPartLabels(_))));
    }

    #[test]
    fn complete_cograph_takes_a_quarter() {
        let ct = parse_cotree("(C (U 0 1 2 3 4 5 6 7))").unwrap();
        let p = Partition::from_pairs((0..8).map(|i| (i, if i < 4 { Part::One } else { Part::Two }))).unwrap();
        let cert = ceh_cograph(&ct, &p).unwrap();
        assert_eq!(cert.kind, Kind::Complete);
        assert!(cert.min_side() >= 1);
        assert!(
            verify_certificate(&cotree_to_graph(&ct), &cert, 1, Some(&p))
                .unwrap()
                .valid
        );
    }

    #[test]
    fn cograph_needs_a_full_partition() {
        let ct = parse_cotree("(U 0 1)").unwrap();
        let p = Partition::from_pairs([(0, Part::One)]).unwrap();
        assert!(ceh_cograph(&ct, &p).is_err());
    }
}
