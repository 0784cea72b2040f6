//! Exhaustive solvers for small instances, on `u64` vertex masks.

use crate::certificate::{BicliqueCertificate, Kind};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CAP: usize = 24;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(64);
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    Ok(())
}

fn rows(g: &Graph, complemented: bool) -> Vec<u64> {
    let n = g.n();
    let all = full(n);
    (0..n)
        .map(|v| {
            let mut row = 0u64;
            for u in g.neighbors(v) {
                row |= 1 << u;
            }
            if complemented {
                all & !row & !(1 << v)
            } else {
                row
            }
        })
        .collect()
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn members(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Largest `t` with `|A| >= t` drawn from `pool` and `|N(A) ∩ target| >= t`.
/// Returns `(t, A, N(A) ∩ target)`, keeping the first optimum found in
/// lexicographic order of `A`.
struct Search<'a> {
    adj: &'a [u64],
    best: usize,
    best_a: u64,
    best_n: u64,
}

impl Search<'_> {
    fn run(adj: &[u64], pool: u64, target: u64) -> (usize, u64, u64) {
        let mut s = Search {
            adj,
            best: 0,
            best_a: 0,
            best_n: 0,
        };
        s.grow(0, 0, target, pool);
        (s.best, s.best_a, s.best_n)
    }

    fn grow(&mut self, a: u64, size: usize, common: u64, cands: u64) {
        let value = size.min(common.count_ones() as usize);
        if value > self.best {
            self.best = value;
            self.best_a = a;
            self.best_n = common;
        }
        let useful: Vec<usize> = members(cands)
            .into_iter()
            .filter(|&v| (common & self.adj[v]).count_ones() as usize > self.best)
            .collect();
        if (size + useful.len()).min(common.count_ones() as usize) <= self.best {
            return;
        }
        for (i, &v) in useful.iter().enumerate() {
            let next_common = common & self.adj[v];
            if (next_common.count_ones() as usize) <= self.best {
                continue;
            }
            if (size + useful.len() - i).min(common.count_ones() as usize) <= self.best {
                return;
            }
            let rest = useful[i + 1..].iter().fold(0u64, |m, &u| m | 1 << u);
            self.grow(a | 1 << v, size + 1, next_common, rest);
        }
    }
}

fn certificate(kind: Kind, t: usize, a: u64, b: u64) -> Result<BicliqueCertificate> {
    if t == 0 {
        return Ok(BicliqueCertificate::vacuous());
    }
    let side = |m: u64| members(m).into_iter().take(t).map(|v| v as u64).collect();
    BicliqueCertificate::new(kind, side(a), side(b))
}

/// Maximum balanced bi-clique in `g` or its complement, complete kind on
/// ties. The size is `|A| + |B|`; certificate ids are vertex indices.
pub fn max_balanced_biclique(g: &Graph, cap: usize) -> Result<(usize, BicliqueCertificate)> {
    check_cap(g.n(), cap)?;
    let all = full(g.n());
    let (t1, a1, b1) = Search::run(&rows(g, false), all, all);
    let (t2, a2, b2) = Search::run(&rows(g, true), all, all);
    if t1 >= t2 {
        Ok((2 * t1, certificate(Kind::Complete, t1, a1, b1)?))
    } else {
        Ok((2 * t2, certificate(Kind::Empty, t2, a2, b2)?))
    }
}

/// Maximum balanced bi-clique with side A inside `part_one` and side B inside
/// the remaining vertices. `part_one[v]` labels vertex `v`; the size is
/// `|A| + |B|`.
pub fn max_colorful_biclique(g: &Graph, part_one: &[bool], cap: usize) -> Result<(usize, BicliqueCertificate)> {
    check_cap(g.n(), cap)?;
    if part_one.len() != g.n() {
        return Err(Error::MissingPartLabels(format!(
            "{} labels for {} vertices",
            part_one.len(),
            g.n()
        )));
    }
    let ones = part_one
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .fold(0u64, |m, (v, _)| m | 1 << v);
    let twos = full(g.n()) & !ones;
    let (t1, a1, b1) = Search::run(&rows(g, false), ones, twos);
    let (t2, a2, b2) = Search::run(&rows(g, true), ones, twos);
    if t1 >= t2 {
        Ok((2 * t1, certificate(Kind::Complete, t1, a1, b1)?))
    } else {
        Ok((2 * t2, certificate(Kind::Empty, t2, a2, b2)?))
    }
}

/// True when neither `g` nor its bipartite complement contains `K_{a,b}`
/// with the `a` side among vertices `0..m` and the `b` side among `m..n`.
pub fn check_no_kab(g: &Graph, m: usize, a: usize, b: usize, cap: usize) -> Result<bool> {
    let n = g.n();
    check_cap(m, cap)?;
    check_cap(n, 64)?;
    if m > n {
        return Err(Error::invalid(format!("side size {m} exceeds {n} vertices")));
    }
    let right = full(n) & !full(m);
    for complemented in [false, true] {
        let adj: Vec<u64> = rows(g, false)
            .into_iter()
            .take(m)
            .map(|r| if complemented { right & !r } else { right & r })
            .collect();
        if a == 0 {
            if (right.count_ones() as usize) >= b {
                return Ok(false);
            }
            continue;
        }
        if has_kab(&adj, 0, a, right, b) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn has_kab(adj: &[u64], from: usize, left: usize, common: u64, b: usize) -> bool {
    if (common.count_ones() as usize) < b {
        return false;
    }
    if left == 0 {
        return true;
    }
    (from..adj.len()).any(|v| adj.len() - v >= left && has_kab(adj, v + 1, left - 1, common & adj[v], b))
}
