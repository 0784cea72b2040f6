//! Cotrees: parsing, evaluation to graphs, recognition of P4-free graphs, and
//! the conforming-subset descent.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::family::Id;
use crate::graph::{Graph, LabeledGraph};

/// Complement / disjoint-union expression over leaf ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(Id),
    /// At least two children.
    Union(Vec<Cotree>),
    /// Never wraps another `Complement`.
    Complement(Box<Cotree>),
}

impl Cotree {
    pub fn leaf(id: Id) -> Cotree {
        Cotree::Leaf(id)
    }

    pub fn union(children: Vec<Cotree>) -> Result<Cotree> {
        if children.len() < 2 {
            return Err(Error::invalid("a union needs at least two children"));
        }
        let ct = Cotree::Union(children);
        ct.check_distinct()?;
        Ok(ct)
    }

    /// Complement of `child`; a double complement collapses.
    pub fn complement(child: Cotree) -> Cotree {
        match child {
            Cotree::Complement(inner) => *inner,
            other => Cotree::Complement(Box::new(other)),
        }
    }

    /// Leaf ids in left-to-right order.
    pub fn leaves(&self) -> Vec<Id> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Id>) {
        match self {
            Cotree::Leaf(id) => out.push(*id),
            Cotree::Union(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
            Cotree::Complement(c) => c.collect_leaves(out),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Union(ch) => ch.iter().map(Cotree::leaf_count).sum(),
            Cotree::Complement(c) => c.leaf_count(),
        }
    }

    fn check_distinct(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for id in self.leaves() {
            if !seen.insert(id) {
                return Err(Error::DuplicateId(id));
            }
        }
        Ok(())
    }

    fn min_leaf(&self) -> Id {
        match self {
            Cotree::Leaf(id) => *id,
            Cotree::Union(ch) => ch.iter().map(Cotree::min_leaf).min().unwrap(),
            Cotree::Complement(c) => c.min_leaf(),
        }
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cotree::Leaf(id) => write!(f, "{id}"),
            Cotree::Union(ch) => {
                f.write_str("(U")?;
                for c in ch {
                    write!(f, " {c}")?;
                }
                f.write_str(")")
            }
            Cotree::Complement(c) => write!(f, "(C {c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Word(String),
}

fn tokenize(text: &str) -> Vec<(usize, Token)> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '(' || c == ')' {
            chars.next();
            out.push((pos, if c == '(' { Token::Open } else { Token::Close }));
        } else {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_whitespace() || c == '(' || c == ')' {
                    break;
                }
                word.push(c);
                chars.next();
            }
            out.push((pos, Token::Word(word)));
        }
    }
    out
}

/// Parses `expr := <id> | (U expr expr+) | (C expr)`.
pub fn parse_cotree(text: &str) -> Result<Cotree> {
    let tokens = tokenize(text);
    let mut pos = 0;
    let ct = parse_expr(&tokens, &mut pos, text.len())?;
    if let Some((at, _)) = tokens.get(pos) {
        return Err(Error::Syntax {
            pos: *at,
            message: "trailing input after the expression".into(),
        });
    }
    ct.check_distinct()?;
    Ok(ct)
}

fn parse_expr(tokens: &[(usize, Token)], pos: &mut usize, end: usize) -> Result<Cotree> {
    let syntax = |at: usize, message: &str| Error::Syntax {
        pos: at,
        message: message.into(),
    };
    let Some((at, tok)) = tokens.get(*pos) else {
        return Err(syntax(end, "unexpected end of input"));
    };
    *pos += 1;
    match tok {
        Token::Word(w) => w
            .parse::<Id>()
            .map(Cotree::Leaf)
            .map_err(|_| syntax(*at, &format!("expected a leaf id, found `{w}`"))),
        Token::Close => Err(syntax(*at, "unexpected `)`")),
        Token::Open => {
            let op = match tokens.get(*pos) {
                Some((_, Token::Word(w))) if w == "U" || w == "C" => w.clone(),
                Some((p, _)) => return Err(syntax(*p, "expected `U` or `C` after `(`")),
                None => return Err(syntax(end, "unexpected end of input")),
            };
            *pos += 1;
            let mut children = Vec::new();
            loop {
                match tokens.get(*pos) {
                    Some((_, Token::Close)) => {
                        *pos += 1;
                        break;
                    }
                    Some(_) => children.push(parse_expr(tokens, pos, end)?),
                    None => return Err(syntax(end, "unclosed `(`")),
                }
            }
            if op == "U" {
                if children.len() < 2 {
                    return Err(syntax(*at, "`U` needs at least two operands"));
                }
                Ok(Cotree::Union(children))
            } else {
                if children.len() != 1 {
                    return Err(syntax(*at, "`C` takes exactly one operand"));
                }
                Ok(Cotree::complement(children.pop().unwrap()))
            }
        }
    }
}

/// The graph on the sorted leaf ids. Two leaves are adjacent iff an odd
/// number of complement nodes sit above their lowest common union.
pub fn cotree_to_graph(ct: &Cotree) -> LabeledGraph {
    let mut ids = ct.leaves();
    ids.sort_unstable();
    let mut graph = Graph::empty(ids.len());
    fn walk(node: &Cotree, odd: bool, ids: &[Id], g: &mut Graph) -> Vec<usize> {
        match node {
            Cotree::Leaf(id) => vec![ids.binary_search(id).unwrap()],
            Cotree::Complement(c) => walk(c, !odd, ids, g),
            Cotree::Union(ch) => {
                let parts: Vec<Vec<usize>> = ch.iter().map(|c| walk(c, odd, ids, g)).collect();
                if odd {
                    for (i, a) in parts.iter().enumerate() {
                        for b in &parts[i + 1..] {
                            for &x in a {
                                for &y in b {
                                    g.add_edge(x, y);
                                }
                            }
                        }
                    }
                }
                parts.concat()
            }
        }
    }
    walk(ct, false, &ids, &mut graph);
    LabeledGraph { ids, graph }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Cotree(Cotree),
    /// Ids `a b c d` inducing the path `a-b-c-d`.
    P4([Id; 4]),
}

/// Splits by components of the graph or of its complement, recursively.
pub fn recognize_cograph(g: &LabeledGraph) -> Result<Recognition> {
    if g.ids.is_empty() {
        return Err(Error::invalid("cannot recognize the empty graph"));
    }
    let all: Vec<usize> = (0..g.ids.len()).collect();
    Ok(match recognize_within(g, &all, false) {
        Ok(ct) => Recognition::Cotree(ct),
        Err(p4) => Recognition::P4(p4.map(|v| g.ids[v])),
    })
}

fn recognize_within(g: &LabeledGraph, set: &[usize], complemented: bool) -> std::result::Result<Cotree, [usize; 4]> {
    if set.len() == 1 {
        return Ok(Cotree::Leaf(g.ids[set[0]]));
    }
    let comps = g.graph.components_within(set, complemented);
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| recognize_within(g, c, complemented))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        return Ok(Cotree::Union(children));
    }
    let co = g.graph.components_within(set, !complemented);
    if co.len() > 1 {
        let children = co
            .iter()
            .map(|c| recognize_within(g, c, !complemented))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        return Ok(Cotree::complement(Cotree::Union(children)));
    }
    Err(find_p4(&g.graph, set).expect("a graph connected with its complement contains an induced P4"))
}

fn find_p4(g: &Graph, set: &[usize]) -> Option<[usize; 4]> {
    let mut inside = fixedbitset::FixedBitSet::with_capacity(g.n());
    set.iter().for_each(|&v| inside.insert(v));
    for &b in set {
        for c in g.neighbors(b).filter(|&c| inside.contains(c)) {
            let mut only_b = g.neighborhood(b).clone();
            only_b.difference_with(g.neighborhood(c));
            only_b.intersect_with(&inside);
            only_b.set(c, false);
            let mut only_c = g.neighborhood(c).clone();
            only_c.difference_with(g.neighborhood(b));
            only_c.intersect_with(&inside);
            only_c.set(b, false);
            for a in only_b.ones() {
                if let Some(d) = only_c.ones().find(|&d| !g.has_edge(a, d)) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// One split of the descent: the kept part `G` and the discarded part `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentStep {
    pub kept: Vec<Id>,
    pub dropped: Vec<Id>,
    pub u_in_kept: usize,
    pub u_in_dropped: usize,
}

/// A set `W` with `|U|/4 <= |U ∩ W| <= max(|U|/2, 1)` that conforms to every
/// vertex outside it. Returned sorted.
pub fn conforming_subset(ct: &Cotree, u: &[Id]) -> Result<Vec<Id>> {
    conforming_subset_traced(ct, u).map(|(w, _)| w)
}

/// As [`conforming_subset`], also returning the descent sequence.
///
/// At a union node the child holding the most of `U` (ties to the smallest
/// leaf) is split off against the rest; the side holding more of `U` is kept.
pub fn conforming_subset_traced(ct: &Cotree, u: &[Id]) -> Result<(Vec<Id>, Vec<DescentStep>)> {
    let mut all = ct.leaves();
    all.sort_unstable();
    let mut uset: Vec<Id> = u.to_vec();
    uset.sort_unstable();
    uset.dedup();
    if uset.is_empty() {
        return Err(Error::invalid("conforming_subset needs a nonempty U"));
    }
    if let Some(&bad) = uset.iter().find(|id| all.binary_search(id).is_err()) {
        return Err(Error::UnknownId(bad));
    }
    let count_u = |ids: &[Id]| ids.iter().filter(|id| uset.binary_search(id).is_ok()).count();

    let mut steps = Vec::new();
    let mut cur: Vec<&Cotree> = vec![ct];
    loop {
        if cur.len() == 1 {
            match cur[0] {
                Cotree::Leaf(_) => break,
                Cotree::Complement(c) => cur = vec![c],
                Cotree::Union(ch) => cur = ch.iter().collect(),
            }
            continue;
        }
        let counts: Vec<usize> = cur.iter().map(|c| count_u(&c.leaves())).collect();
        let chosen = (0..cur.len())
            .max_by(|&a, &b| {
                counts[a]
                    .cmp(&counts[b])
                    .then(cur[b].min_leaf().cmp(&cur[a].min_leaf()))
            })
            .unwrap();
        let rest_count: usize = counts.iter().sum::<usize>() - counts[chosen];
        let single = vec![cur[chosen]];
        let rest: Vec<&Cotree> = cur
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != chosen)
            .map(|(_, c)| *c)
            .collect();
        let (kept, dropped) = if counts[chosen] >= rest_count {
            (single, rest)
        } else {
            (rest, single)
        };
        let leaves_of = |nodes: &[&Cotree]| {
            let mut v: Vec<Id> = nodes.iter().flat_map(|c| c.leaves()).collect();
            v.sort_unstable();
            v
        };
        let kept_leaves = leaves_of(&kept);
        let dropped_leaves = leaves_of(&dropped);
        steps.push(DescentStep {
            u_in_kept: count_u(&kept_leaves),
            u_in_dropped: count_u(&dropped_leaves),
            kept: kept_leaves,
            dropped: dropped_leaves,
        });
        cur = kept;
    }

    let size = uset.len();
    if size == 1 {
        return Ok((all, steps));
    }
    if let Some(s) = steps
        .iter()
        .find(|s| 4 * s.u_in_dropped >= size && 2 * s.u_in_dropped <= size)
    {
        return Ok((s.dropped.clone(), steps));
    }
    let mut before = size;
    for s in &steps {
        if 2 * before > size && 2 * s.u_in_kept <= size {
            return Ok((s.kept.clone(), steps));
        }
        before = s.u_in_kept;
    }
    Err(Error::internal("conforming descent found no crossing step"))
}

/// Ids outside `w` that see some but not all of `w`.
pub fn conformity_violations(g: &LabeledGraph, w: &[Id]) -> Vec<Id> {
    let w_idx: Vec<usize> = w.iter().filter_map(|&id| g.index_of(id)).collect();
    (0..g.ids.len())
        .filter(|v| !w_idx.contains(v))
        .filter(|&v| {
            let hits = w_idx.iter().filter(|&&x| g.graph.has_edge(v, x)).count();
            hits != 0 && hits != w_idx.len()
        })
        .map(|v| g.ids[v])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(text: &str) -> Vec<(Id, Id)> {
        cotree_to_graph(&parse_cotree(text).unwrap()).id_edges()
    }

    #[test]
    fn evaluates_small_expressions() {
        assert_eq!(edges("(U 0 1)"), vec![]);
        assert_eq!(edges("(C (U 0 1))"), vec![(0, 1)]);
        assert_eq!(edges("(C (U (C (U 0 1)) 2))"), vec![(0, 2), (1, 2)]);
        assert_eq!(edges("(U (C (U 0 1 2)) 3)"), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn double_complement_collapses() {
        assert_eq!(
            parse_cotree("(C (C (U 0 1)))").unwrap(),
            parse_cotree("(U 0 1)").unwrap()
        );
        let ct = parse_cotree("(U (C (U 3 4)) 7)").unwrap();
        assert_eq!(parse_cotree(&ct.to_string()).unwrap(), ct);
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(parse_cotree("(U 0)"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_cotree("(X 0 1)"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_cotree("(U 0 1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_cotree("(U 0 1) 2"), Err(Error::Syntax { pos: 8, .. })));
        assert_eq!(parse_cotree("(U 0 0)"), Err(Error::DuplicateId(0)));
    }

    #[test]
    fn p4_is_rejected_with_witness() {
        let g = LabeledGraph {
            ids: vec![0, 1, 2, 3],
            graph: Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
        };
        match recognize_cograph(&g).unwrap() {
            Recognition::P4(w) => {
                let mut s = w.to_vec();
                s.sort();
                assert_eq!(s, vec![0, 1, 2, 3]);
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn c4_is_the_join_of_two_non_edges() {
        let g = LabeledGraph {
            ids: vec![0, 1, 2, 3],
            graph: Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap(),
        };
        let Recognition::Cotree(ct) = recognize_cograph(&g).unwrap() else {
            panic!()
        };
        assert_eq!(cotree_to_graph(&ct), g);
        assert_eq!(ct.to_string(), "(C (U (C (U 0 2)) (C (U 1 3))))");
    }

    #[test]
    fn single_u_takes_everything() {
        let ct = parse_cotree("(U (C (U 0 1 2)) 3)").unwrap();
        assert_eq!(conforming_subset(&ct, &[2]).unwrap(), vec![0, 1, 2, 3]);
        assert!(conforming_subset(&ct, &[]).is_err());
    }

    #[test]
    fn clique_subset_is_small() {
        let ct = parse_cotree("(C (U 0 1 2 3))").unwrap();
        let w = conforming_subset(&ct, &[0, 1, 2, 3]).unwrap();
        assert!((1..=2).contains(&w.len()));
    }

    #[test]
    fn three_way_union_keeps_the_heavier_rest() {
        let ct = parse_cotree("(U 0 1 2)").unwrap();
        let (w, steps) = conforming_subset_traced(&ct, &[0, 1, 2]).unwrap();
        assert_eq!(steps[0].u_in_kept, 2);
        assert_eq!(steps[0].u_in_dropped, 1);
        assert_eq!(w, vec![0]);
        assert!(conformity_violations(&cotree_to_graph(&ct), &w).is_empty());
    }
}
