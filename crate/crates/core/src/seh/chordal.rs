//! The chordal finder: an early-exit cascade over a normalized subtree
//! representation, each exit producing a bi-clique with sides `floor(2n/9)`.

use std::fmt;

use crate::certificate::{verify_certificate, BicliqueCertificate, Kind};
use crate::error::{Error, Result};
use crate::family::{Id, SubtreeFamily};
use crate::normalize::{normalize_subtrees, path_family_to_intervals};
use crate::seh::{seh_interval, split_clique};
use crate::trace::Trace;
use crate::tree::Tree;

/// Guaranteed side for chordal graphs.
pub fn two_ninths(n: usize) -> usize {
    2 * n / 9
}

/// Every family of the decomposition around a balanced center `v`, as sorted
/// member ids. Index `i` in the arrays stands for component `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalDecomposition {
    pub center: usize,
    /// Neighbour of `v` inside each component, largest family first.
    pub u: [usize; 3],
    pub f_v: Vec<Id>,
    pub f: [Vec<Id>; 3],
    pub w: [usize; 3],
    pub gamma_plus: [Vec<Id>; 3],
    pub f2_w: [Vec<Id>; 3],
    pub f3_w: [Vec<Id>; 3],
    pub g: [Vec<Id>; 3],
    pub h: [Vec<Id>; 3],
    pub x_empty: Vec<Id>,
    pub x: [Vec<Id>; 3],
    pub y12: Vec<Id>,
    pub y13: Vec<Id>,
    pub y23: Vec<Id>,
}

impl ChordalDecomposition {
    /// Members inside the two far components at `w_i`.
    pub fn gamma(&self, i: usize) -> Vec<Id> {
        union(&self.f2_w[i], &self.f3_w[i])
    }

    fn y_union(&self) -> Vec<Id> {
        union(&union(&self.y12, &self.y13), &self.y23)
    }

    /// Checks the disjoint-union identities of the decomposition against the
    /// full id list.
    pub fn identities_hold(&self, all: &[Id]) -> bool {
        let mut whole = self.f_v.clone();
        self.f.iter().for_each(|f| whole.extend(f));
        whole.sort_unstable();
        let partition_ok = whole == all;

        let h_ok = (0..3).all(|i| self.h[i] == minus(&minus(&self.f[i], &self.g[i]), &self.gamma_plus[i]));

        let mut xs = self.x_empty.clone();
        self.x.iter().for_each(|x| xs.extend(x));
        let ys = self.y_union();
        let disjoint = xs.len() + ys.len() == union(&xs, &ys).len();
        let mut fv = xs.clone();
        fv.extend(&ys);
        fv.sort_unstable();
        let x_ok = disjoint && fv == self.f_v;
        partition_ok && h_ok && x_ok
    }

    fn sizes(&self, trace: &mut Trace) {
        trace.push("center v", self.center);
        trace.push("|F_v|", self.f_v.len());
        for i in 0..3 {
            let k = i + 1;
            trace.push(format!("|F_{k}(v)|"), self.f[i].len());
            trace.push(format!("w_{k}"), self.w[i]);
            trace.push(format!("|Gamma+(w_{k})|"), self.gamma_plus[i].len());
            trace.push(format!("|F_2(w_{k})|"), self.f2_w[i].len());
            trace.push(format!("|F_3(w_{k})|"), self.f3_w[i].len());
            trace.push(format!("|G_{k}|"), self.g[i].len());
            trace.push(format!("|H_{k}|"), self.h[i].len());
        }
        trace.push("|X_0|", self.x_empty.len());
        for i in 0..3 {
            trace.push(format!("|X_{}|", i + 1), self.x[i].len());
        }
        trace.push("|Y_12|", self.y12.len());
        trace.push("|Y_13|", self.y13.len());
        trace.push("|Y_23|", self.y23.len());
    }
}

/// Which branch of the cascade produced the certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordalExit {
    /// Fewer than five members: any single pair.
    Small,
    /// The normalized ambient tree is a path.
    Interval,
    /// Some ambient vertex lies in at least `4n/9` members.
    Clique { vertex: usize },
    /// Two components at `vertex` each hold at least the target.
    HeavyPair { vertex: usize },
    /// An edge whose ends point at each other.
    Orientation { u: usize, v: usize },
    /// `X_0 ∪ X_i ∪ F_i(v)` against the far families of the other two branches.
    Separated { index: usize },
    /// `Y` against `(F_v - Y) ∪ G_a`.
    Overlap { index: usize },
    /// The greedy split of the five pairwise-disjoint families.
    Split { index: usize },
}

impl fmt::Display for ChordalExit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChordalExit::Small => write!(f, "small"),
            ChordalExit::Interval => write!(f, "interval"),
            ChordalExit::Clique { vertex } => write!(f, "clique at {vertex}"),
            ChordalExit::HeavyPair { vertex } => write!(f, "heavy pair at {vertex}"),
            ChordalExit::Orientation { u, v } => write!(f, "orientation on edge {u}-{v}"),
            ChordalExit::Separated { index } => write!(f, "separated, branch {}", index + 1),
            ChordalExit::Overlap { index } => write!(f, "overlap, branch {}", index + 1),
            ChordalExit::Split { index } => write!(f, "split, branch {}", index + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalTrace {
    pub n: usize,
    pub target: usize,
    pub ambient_vertices: usize,
    pub exit: ChordalExit,
    /// `|F_1(v)|, |F_2(v)|, |F_3(v)|` at the balanced center, when one exists.
    pub claim_sizes: Option<[usize; 3]>,
    pub decomposition: Option<ChordalDecomposition>,
}

impl ChordalTrace {
    pub fn table(&self) -> Trace {
        let mut t = Trace::new();
        t.push("n", self.n);
        t.push("target", self.target);
        t.push("ambient vertices", self.ambient_vertices);
        if let Some(d) = &self.decomposition {
            d.sizes(&mut t);
        }
        t.push("exit", self.exit);
        t
    }
}

pub fn seh_chordal(fam: &SubtreeFamily) -> Result<BicliqueCertificate> {
    seh_chordal_traced(fam).map(|(c, _)| c)
}

pub fn seh_chordal_traced(fam: &SubtreeFamily) -> Result<(BicliqueCertificate, ChordalTrace)> {
    let n = fam.len();
    let target = two_ninths(n);
    let norm = normalize_subtrees(fam);
    let mut trace = ChordalTrace {
        n,
        target,
        ambient_vertices: norm.ambient().n(),
        exit: ChordalExit::Small,
        claim_sizes: None,
        decomposition: None,
    };
    let cert = cascade(&norm, target, &mut trace)?;
    let min_side = if trace.exit == ChordalExit::Interval {
        n / 4
    } else {
        target
    };
    let report = verify_certificate(fam, &cert, min_side, None)?;
    if !report.valid {
        return Err(Error::internal(format!(
            "exit `{}` produced an invalid certificate: {}",
            trace.exit, report.failures[0]
        )));
    }
    Ok((cert, trace))
}

fn cascade(fam: &SubtreeFamily, t: usize, trace: &mut ChordalTrace) -> Result<BicliqueCertificate> {
    let n = fam.len();
    let ms = fam.members();
    if t == 0 {
        trace.exit = ChordalExit::Small;
        return Ok(match ms {
            [a, b, ..] => {
                let kind = if crate::tree::intersects(&a.subtree, &b.subtree) {
                    Kind::Complete
                } else {
                    Kind::Empty
                };
                BicliqueCertificate::new(kind, vec![a.id], vec![b.id])?
            }
            _ => BicliqueCertificate::vacuous(),
        });
    }
    let tree = fam.ambient();
    if tree.is_path() {
        trace.exit = ChordalExit::Interval;
        let iv = path_family_to_intervals(fam).expect("path ambient");
        return Ok(seh_interval(&iv));
    }
    let nv = tree.n();

    // (1) a heavily covered vertex.
    let mut cover = vec![0usize; nv];
    for m in ms {
        for &x in m.subtree.vertices() {
            cover[x] += 1;
        }
    }
    if let Some(v) = (0..nv).find(|&v| 9 * cover[v] >= 4 * n) {
        trace.exit = ChordalExit::Clique { vertex: v };
        let ids = ms.iter().filter(|m| m.subtree.contains(v)).map(|m| m.id).collect();
        return split_clique(ids, t);
    }

    // (2) component families at every vertex, largest first.
    let comps: Vec<Components> = (0..nv).map(|v| Components::at(fam, v)).collect();
    let balanced =
        (0..nv).find(|&v| tree.degree(v) == 3 && comps[v].sizes.iter().all(|&s| 9 * s >= n && 9 * s <= 2 * n));
    let Some(v) = balanced else {
        if let Some(v) = (0..nv).find(|&v| comps[v].size(0) >= t && comps[v].size(1) >= t) {
            trace.exit = ChordalExit::HeavyPair { vertex: v };
            return BicliqueCertificate::truncated(Kind::Empty, comps[v].family(fam, 0), comps[v].family(fam, 1), t);
        }
        let out: Vec<usize> = (0..nv).map(|v| tree.neighbors(v)[comps[v].slots[0]]).collect();
        let mut cur = 0;
        for _ in 0..=nv {
            let next = out[cur];
            if out[next] == cur {
                trace.exit = ChordalExit::Orientation { u: cur, v: next };
                let (a, b) = (comps[cur].family(fam, 0), comps[next].family(fam, 0));
                if a.len() < t || b.len() < t {
                    return Err(Error::internal("orientation edge with a light side"));
                }
                return BicliqueCertificate::truncated(Kind::Empty, a, b, t);
            }
            cur = next;
        }
        return Err(Error::internal("orientation walk did not close"));
    };
    trace.claim_sizes = Some([comps[v].size(0), comps[v].size(1), comps[v].size(2)]);

    // (3) the decomposition around v.
    let d = decompose(fam, v, &comps[v])?;
    debug_assert!(d.identities_hold(&fam.ids()));
    trace.decomposition = Some(d.clone());

    // (4) one branch plus the sparse parts of F_v against the other two far families.
    for i in 0..3 {
        let near = union(&union(&d.x_empty, &d.x[i]), &d.f[i]);
        if near.len() >= t {
            let far: Vec<Id> = (0..3)
                .filter(|&j| j != i)
                .flat_map(|j| d.gamma_plus[j].clone())
                .collect();
            if far.len() >= t {
                trace.exit = ChordalExit::Separated { index: i };
                return BicliqueCertificate::truncated(Kind::Empty, near, far, t);
            }
        }
    }

    // (5) members reaching two of the w's.
    let pairs = [union(&d.y12, &d.y13), union(&d.y12, &d.y23), union(&d.y13, &d.y23)];
    let a = (0..3)
        .max_by(|&x, &y| pairs[x].len().cmp(&pairs[y].len()).then(y.cmp(&x)))
        .unwrap();
    if pairs[a].len() < t {
        return Err(Error::internal("no pair of Y families reaches the target"));
    }
    let y: Vec<Id> = pairs[a][..t].to_vec();
    let rest = union(&minus(&d.f_v, &y), &d.g[a]);
    if rest.len() >= t {
        trace.exit = ChordalExit::Overlap { index: a };
        return BicliqueCertificate::truncated(Kind::Complete, y, rest, t);
    }

    // (6) greedy split of five pairwise-disjoint families.
    let others: Vec<usize> = (0..3).filter(|&j| j != a).collect();
    let mut s1 = d.f[others[0]].clone();
    let mut s2 = d.f[others[1]].clone();
    for extra in [&d.h[a], &d.f2_w[a], &d.f3_w[a]] {
        if s1.len() <= s2.len() {
            s1.extend(extra);
        } else {
            s2.extend(extra);
        }
    }
    if s1.len() >= t && s2.len() >= t {
        trace.exit = ChordalExit::Split { index: a };
        return BicliqueCertificate::truncated(Kind::Empty, s1, s2, t);
    }
    Err(Error::internal("no exit of the chordal cascade applied"))
}

/// Families of members inside each component of `T - v`.
struct Components {
    /// Component slot (index into `neighbors(v)`) of each member, or `None`
    /// when the member contains `v`.
    slot_of: Vec<Option<usize>>,
    /// Slots ordered by family size (descending), then smallest vertex.
    slots: Vec<usize>,
    /// Family sizes in `slots` order.
    sizes: Vec<usize>,
}

impl Components {
    fn at(fam: &SubtreeFamily, v: usize) -> Components {
        let tree = fam.ambient();
        let labels = tree.component_labels(v);
        let deg = tree.degree(v);
        let mut min_vertex = vec![usize::MAX; deg];
        for (x, &l) in labels.iter().enumerate() {
            if l != usize::MAX && min_vertex[l] == usize::MAX {
                min_vertex[l] = x;
            }
        }
        let mut count = vec![0usize; deg];
        let slot_of: Vec<Option<usize>> = fam
            .members()
            .iter()
            .map(|m| {
                if m.subtree.contains(v) {
                    None
                } else {
                    let l = labels[m.subtree.vertices()[0]];
                    count[l] += 1;
                    Some(l)
                }
            })
            .collect();
        let mut slots: Vec<usize> = (0..deg).collect();
        slots.sort_by(|&a, &b| count[b].cmp(&count[a]).then(min_vertex[a].cmp(&min_vertex[b])));
        let sizes = slots.iter().map(|&s| count[s]).collect();
        Components { slot_of, slots, sizes }
    }

    fn size(&self, rank: usize) -> usize {
        self.sizes.get(rank).copied().unwrap_or(0)
    }

    fn family(&self, fam: &SubtreeFamily, rank: usize) -> Vec<Id> {
        let Some(&slot) = self.slots.get(rank) else {
            return Vec::new();
        };
        fam.members()
            .iter()
            .zip(&self.slot_of)
            .filter(|(_, s)| **s == Some(slot))
            .map(|(m, _)| m.id)
            .collect()
    }
}

/// The tree rooted at the center, with O(1) ancestor tests.
struct Rooted {
    parent: Vec<usize>,
    tin: Vec<usize>,
    tout: Vec<usize>,
    sub_min: Vec<usize>,
}

impl Rooted {
    fn new(tree: &Tree, root: usize) -> Rooted {
        let n = tree.n();
        let parent = tree.parents(root);
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        let mut sub_min: Vec<usize> = (0..n).collect();
        let mut clock = 0;
        let mut stack = vec![(root, false)];
        while let Some((x, done)) = stack.pop() {
            if done {
                tout[x] = clock;
                if x != root {
                    let p = parent[x];
                    sub_min[p] = sub_min[p].min(sub_min[x]);
                }
                continue;
            }
            tin[x] = clock;
            clock += 1;
            stack.push((x, true));
            for &c in tree.neighbors(x).iter().rev() {
                if c != parent[x] {
                    stack.push((c, false));
                }
            }
        }
        Rooted {
            parent,
            tin,
            tout,
            sub_min,
        }
    }

    /// `y` lies in the subtree below (and including) `x`.
    fn below(&self, x: usize, y: usize) -> bool {
        self.tin[x] <= self.tin[y] && self.tin[y] < self.tout[x]
    }
}

fn decompose(fam: &SubtreeFamily, v: usize, comps: &Components) -> Result<ChordalDecomposition> {
    let tree = fam.ambient();
    let n = fam.len();
    let ms = fam.members();
    let rooted = Rooted::new(tree, v);
    let top: Vec<usize> = ms
        .iter()
        .map(|m| {
            *m.subtree
                .vertices()
                .iter()
                .min_by_key(|&&x| rooted.tin[x])
                .expect("subtrees are nonempty")
        })
        .collect();
    let below = |x: usize| -> Vec<Id> {
        ms.iter()
            .zip(&top)
            .filter(|(_, &tp)| rooted.below(x, tp))
            .map(|(m, _)| m.id)
            .collect()
    };
    let children = |x: usize| -> Vec<usize> {
        tree.neighbors(x)
            .iter()
            .copied()
            .filter(|&c| c != rooted.parent[x])
            .collect()
    };

    let u: [usize; 3] = std::array::from_fn(|i| tree.neighbors(v)[comps.slots[i]]);
    let f: [Vec<Id>; 3] = std::array::from_fn(|i| below(u[i]));
    let f_v: Vec<Id> = ms.iter().filter(|m| m.subtree.contains(v)).map(|m| m.id).collect();

    let mut w = [0usize; 3];
    let mut far: [[Vec<Id>; 2]; 3] = Default::default();
    for i in 0..3 {
        let mut cur = u[i];
        let mut steps = 0;
        loop {
            let mut kids: Vec<(usize, Vec<Id>)> = children(cur).into_iter().map(|c| (c, below(c))).collect();
            kids.sort_by(|a, b| {
                b.1.len()
                    .cmp(&a.1.len())
                    .then(rooted.sub_min[a.0].cmp(&rooted.sub_min[b.0]))
            });
            if kids.iter().all(|(_, fam)| 9 * fam.len() < n) {
                let mut it = kids.into_iter().map(|(_, fam)| fam);
                far[i] = [it.next().unwrap_or_default(), it.next().unwrap_or_default()];
                break;
            }
            cur = kids[0].0;
            steps += 1;
            if steps > tree.n() {
                return Err(Error::internal("descent towards w_i did not terminate"));
            }
        }
        w[i] = cur;
    }

    let gamma_plus: [Vec<Id>; 3] = std::array::from_fn(|i| below(w[i]));
    let mut g: [Vec<Id>; 3] = Default::default();
    let mut h: [Vec<Id>; 3] = Default::default();
    for i in 0..3 {
        let mut on_path = vec![false; tree.n()];
        let mut x = w[i];
        loop {
            on_path[x] = true;
            if x == u[i] {
                break;
            }
            x = rooted.parent[x];
        }
        g[i] = ms
            .iter()
            .zip(&top)
            .filter(|(_, &tp)| on_path[tp])
            .map(|(m, _)| m.id)
            .collect();
        h[i] = minus(&minus(&f[i], &g[i]), &gamma_plus[i]);
    }

    let mut x_empty = Vec::new();
    let mut x: [Vec<Id>; 3] = Default::default();
    let (mut y12, mut y13, mut y23) = (Vec::new(), Vec::new(), Vec::new());
    for m in ms.iter().filter(|m| m.subtree.contains(v)) {
        let hit: [bool; 3] = std::array::from_fn(|i| m.subtree.contains(w[i]));
        match hit.iter().filter(|&&b| b).count() {
            0 => x_empty.push(m.id),
            1 => x[hit.iter().position(|&b| b).unwrap()].push(m.id),
            _ => {
                if hit[0] && hit[1] {
                    y12.push(m.id);
                }
                if hit[0] && hit[2] {
                    y13.push(m.id);
                }
                if hit[1] && hit[2] {
                    y23.push(m.id);
                }
            }
        }
    }

    let [[f2_0, f3_0], [f2_1, f3_1], [f2_2, f3_2]] = far;
    Ok(ChordalDecomposition {
        center: v,
        u,
        f_v,
        f,
        w,
        gamma_plus,
        f2_w: [f2_0, f2_1, f2_2],
        f3_w: [f3_0, f3_1, f3_2],
        g,
        h,
        x_empty,
        x,
        y12,
        y13,
        y23,
    })
}

fn union(a: &[Id], b: &[Id]) -> Vec<Id> {
    let mut out: Vec<Id> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn minus(a: &[Id], b: &[Id]) -> Vec<Id> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}
