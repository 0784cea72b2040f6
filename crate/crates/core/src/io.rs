//! Line-oriented text formats for instances and certificates. `#` starts a
//! comment; errors name the 1-based line.

use std::fmt::Write as _;

use crate::certificate::{BicliqueCertificate, Kind};
use crate::cograph::{parse_cotree, Cotree};
use crate::error::{Error, Result};
use crate::family::{Id, IntervalFamily, IntervalMember, Part, Partition, SubtreeFamily, SubtreeMember};
use crate::graph::Graph;
use crate::rational::{format_rational, parse_rational};
use crate::tree::{Subtree, Tree};

/// Non-empty lines with comments stripped, as `(line number, tokens)`.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn at<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    })
}

fn number<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("{what} must be a non-negative integer, got `{tok}`")))
}

fn write_part(out: &mut String, part: Option<Part>) {
    if let Some(p) = part {
        let _ = write!(out, " {}", p.label());
    }
}

/// `I <id> <left> <right> [<part>]`.
pub fn parse_intervals(text: &str) -> Result<IntervalFamily> {
    let mut members = Vec::new();
    for (line, toks) in lines(text) {
        match toks.as_slice() {
            ["I", id, l, r, rest @ ..] if rest.len() <= 1 => {
                let mut m = IntervalMember::new(
                    number(line, id, "id")?,
                    at(line, parse_rational(l))?,
                    at(line, parse_rational(r))?,
                );
                if let [p] = rest {
                    m = m.with_part(at(line, Part::parse(p))?);
                }
                if m.left > m.right {
                    return Err(Error::parse(line, "left endpoint exceeds right endpoint"));
                }
                members.push(m);
            }
            _ => return Err(Error::parse(line, "expected `I <id> <left> <right> [<part>]`")),
        }
    }
    IntervalFamily::new(members)
}

pub fn format_intervals(fam: &IntervalFamily) -> String {
    let mut out = String::new();
    for m in fam.members() {
        let _ = write!(
            out,
            "I {} {} {}",
            m.id,
            format_rational(&m.left),
            format_rational(&m.right)
        );
        write_part(&mut out, m.part);
        out.push('\n');
    }
    out
}

/// `T <n>`, `E <u> <v>`, `S <id> [<part>] : <v1> <v2> ...`.
pub fn parse_subtrees(text: &str) -> Result<SubtreeFamily> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut raw = Vec::new();
    let mut header_line = 0;
    for (line, toks) in lines(text) {
        match toks.as_slice() {
            ["T", k] => {
                if n.is_some() {
                    return Err(Error::parse(line, "repeated `T` header"));
                }
                n = Some(number::<usize>(line, k, "vertex count")?);
                header_line = line;
            }
            ["E", u, v] => edges.push((number(line, u, "vertex")?, number(line, v, "vertex")?)),
            ["S", rest @ ..] => {
                let colon = rest
                    .iter()
                    .position(|&t| t == ":")
                    .ok_or_else(|| Error::parse(line, "member line needs `:` before its vertices"))?;
                let (head, vs) = (&rest[..colon], &rest[colon + 1..]);
                let (id, part) = match head {
                    [id] => (number::<Id>(line, id, "id")?, None),
                    [id, p] => (number::<Id>(line, id, "id")?, Some(at(line, Part::parse(p))?)),
                    _ => return Err(Error::parse(line, "expected `S <id> [<part>] : <vertices>`")),
                };
                let vs = vs
                    .iter()
                    .map(|v| number::<usize>(line, v, "vertex"))
                    .collect::<Result<Vec<_>>>()?;
                raw.push((line, id, part, vs));
            }
            _ => return Err(Error::parse(line, "expected a `T`, `E` or `S` line")),
        }
    }
    let n = n.ok_or_else(|| Error::parse(1, "missing `T <n>` header"))?;
    let tree = at(header_line, Tree::from_edges(n, &edges))?;
    let mut members = Vec::with_capacity(raw.len());
    for (line, id, part, vs) in raw {
        if let Some(&v) = vs.iter().find(|&&v| v >= n) {
            return Err(Error::parse(line, format!("vertex {v} is outside the ambient tree")));
        }
        let subtree = at(line, Subtree::new(&tree, vs))?;
        members.push(SubtreeMember { id, part, subtree });
    }
    SubtreeFamily::new(tree, members)
}

pub fn format_subtrees(fam: &SubtreeFamily) -> String {
    let mut out = format!("T {}\n", fam.ambient().n());
    let mut edges = fam.ambient().edges();
    edges.sort_unstable();
    for (u, v) in edges {
        let _ = writeln!(out, "E {u} {v}");
    }
    for m in fam.members() {
        let _ = write!(out, "S {}", m.id);
        write_part(&mut out, m.part);
        out.push_str(" :");
        for v in m.subtree.vertices() {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

fn partition_line(line: usize, toks: &[&str]) -> Result<(Id, Part)> {
    match toks {
        ["P", id, p] => Ok((number(line, id, "id")?, at(line, Part::parse(p))?)),
        _ => Err(Error::parse(line, "expected `P <id> <part>`")),
    }
}

fn collect_partition(pairs: Vec<(usize, Id, Part)>) -> Result<Option<Partition>> {
    if pairs.is_empty() {
        return Ok(None);
    }
    let mut p = Partition::new();
    for (line, id, part) in pairs {
        if p.get(id).is_some() {
            return Err(Error::parse(line, format!("id {id} labelled twice")));
        }
        p.insert(id, part);
    }
    Ok(Some(p))
}

/// One s-expression, possibly spread over several lines, plus optional
/// `P <id> <part>` lines. Syntax error positions are byte offsets in the file.
pub fn parse_cotree_file(text: &str) -> Result<(Cotree, Option<Partition>)> {
    let mut expr = String::with_capacity(text.len());
    let mut pairs = Vec::new();
    for (i, raw) in text.split_inclusive('\n').enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.first() == Some(&"P") {
            let (id, part) = partition_line(i + 1, &toks)?;
            pairs.push((i + 1, id, part));
            expr.extend(raw.chars().map(|c| if c == '\n' { '\n' } else { ' ' }));
        } else {
            expr.push_str(body);
            expr.extend(raw[body.len()..].chars().map(|c| if c == '\n' { '\n' } else { ' ' }));
        }
    }
    let ct = parse_cotree(&expr)?;
    Ok((ct, collect_partition(pairs)?))
}

pub fn format_cotree_file(ct: &Cotree, partition: Option<&Partition>) -> String {
    let mut out = format!("{ct}\n");
    if let Some(p) = partition {
        for (id, part) in p.iter() {
            let _ = writeln!(out, "P {id} {}", part.label());
        }
    }
    out
}

/// Optional `N <n>`, edges as `E <u> <v>` or `<u> <v>`, optional
/// `P <v> <part>`. Without `N` the vertex count is one more than the largest
/// vertex mentioned.
pub fn parse_graph(text: &str) -> Result<(Graph, Option<Partition>)> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut pairs = Vec::new();
    let mut seen_max = None::<usize>;
    for (line, toks) in lines(text) {
        let edge = match toks.as_slice() {
            ["N", k] => {
                n = Some(number::<usize>(line, k, "vertex count")?);
                continue;
            }
            ["P", ..] => {
                let (id, part) = partition_line(line, &toks)?;
                pairs.push((line, id, part));
                continue;
            }
            ["E", u, v] | [u, v] => (number::<usize>(line, u, "vertex")?, number::<usize>(line, v, "vertex")?),
            _ => {
                return Err(Error::parse(
                    line,
                    "expected `N <n>`, `E <u> <v>`, `<u> <v>` or `P <v> <part>`",
                ))
            }
        };
        if edge.0 == edge.1 {
            return Err(Error::parse(line, format!("loop at vertex {}", edge.0)));
        }
        seen_max = Some(seen_max.unwrap_or(0).max(edge.0).max(edge.1));
        edges.push((line, edge));
    }
    let n = n.unwrap_or_else(|| seen_max.map_or(0, |m| m + 1));
    for &(line, (u, v)) in &edges {
        if u >= n || v >= n {
            return Err(Error::parse(
                line,
                format!("edge {u}-{v} leaves the vertex range 0..{n}"),
            ));
        }
    }
    let mut list: Vec<(usize, usize)> = edges.into_iter().map(|(_, (u, v))| (u.min(v), u.max(v))).collect();
    list.sort_unstable();
    list.dedup();
    let g = Graph::from_edges(n, &list)?;
    Ok((g, collect_partition(pairs)?))
}

pub fn format_graph(g: &Graph, partition: Option<&Partition>) -> String {
    let mut out = format!("N {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "E {u} {v}");
    }
    if let Some(p) = partition {
        for (id, part) in p.iter() {
            let _ = writeln!(out, "P {id} {}", part.label());
        }
    }
    out
}

/// `BICLIQUE kind=<complete|empty>`, then `A: <ids>` and `B: <ids>`.
pub fn parse_certificate(text: &str) -> Result<BicliqueCertificate> {
    let mut kind = None;
    let mut sides: [Option<Vec<Id>>; 2] = [None, None];
    let mut last = 1;
    for (line, toks) in lines(text) {
        last = line;
        match toks.as_slice() {
            ["BICLIQUE", k] => {
                let value = k
                    .strip_prefix("kind=")
                    .ok_or_else(|| Error::parse(line, "expected `kind=<complete|empty>`"))?;
                kind = Some(at(line, Kind::parse(value))?);
            }
            [label @ ("A:" | "B:"), ids @ ..] => {
                let slot = usize::from(*label == "B:");
                if sides[slot].is_some() {
                    return Err(Error::parse(line, format!("repeated `{label}` line")));
                }
                sides[slot] = Some(ids.iter().map(|t| number(line, t, "id")).collect::<Result<_>>()?);
            }
            _ => return Err(Error::parse(line, "expected `BICLIQUE kind=...`, `A: ...` or `B: ...`")),
        }
    }
    let kind = kind.ok_or_else(|| Error::parse(last, "missing `BICLIQUE kind=...` line"))?;
    let [a, b] = sides;
    let a = a.ok_or_else(|| Error::parse(last, "missing `A:` line"))?;
    let b = b.ok_or_else(|| Error::parse(last, "missing `B:` line"))?;
    at(last, BicliqueCertificate::new(kind, a, b))
}

pub fn format_certificate(cert: &BicliqueCertificate) -> String {
    let side = |ids: &[Id]| ids.iter().map(|i| format!(" {i}")).collect::<String>();
    format!(
        "BICLIQUE kind={}\nA:{}\nB:{}\n",
        cert.kind.as_str(),
        side(cert.side_a()),
        side(cert.side_b())
    )
}

/// Any instance file, told apart by its first significant token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceFile {
    Intervals(IntervalFamily),
    Subtrees(SubtreeFamily),
    Cotree(Cotree, Option<Partition>),
    Graph(Graph, Option<Partition>),
}

pub fn parse_instance(text: &str) -> Result<InstanceFile> {
    let first = lines(text).find(|(_, t)| t[0] != "P").map(|(_, t)| t[0].to_string());
    match first.as_deref() {
        Some("I") => parse_intervals(text).map(InstanceFile::Intervals),
        Some("T") | Some("S") => parse_subtrees(text).map(InstanceFile::Subtrees),
        Some(t) if t.starts_with('(') => parse_cotree_file(text).map(|(c, p)| InstanceFile::Cotree(c, p)),
        Some(_) => {
            let single = lines(text)
                .filter(|(_, t)| t[0] != "P")
                .all(|(_, t)| t.len() == 1 && t[0] != "N");
            if single {
                parse_cotree_file(text).map(|(c, p)| InstanceFile::Cotree(c, p))
            } else {
                parse_graph(text).map(|(g, p)| InstanceFile::Graph(g, p))
            }
        }
        None => Err(Error::parse(1, "empty instance file")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{gen_ceh_cograph, gen_ceh_interval, gen_seh_chordal};

    #[test]
    fn interval_round_trip() {
        let fam = gen_ceh_interval(2);
        assert_eq!(parse_intervals(&format_intervals(&fam)).unwrap(), fam);
        let fam = parse_intervals("# half-open\nI 3 1/2 7/3 1\nI 4 0 1 2\n").unwrap();
        assert_eq!(fam.members()[0].right, crate::Rational::new(7, 3));
    }

    #[test]
    fn subtree_round_trip() {
        let fam = gen_seh_chordal(1);
        assert_eq!(parse_subtrees(&format_subtrees(&fam)).unwrap(), fam);
    }

    #[test]
    fn cotree_round_trip() {
        let (ct, p) = gen_ceh_cograph(1);
        let (ct2, p2) = parse_cotree_file(&format_cotree_file(&ct, Some(&p))).unwrap();
        assert_eq!(ct, ct2);
        assert_eq!(Some(p), p2);
    }

    #[test]
    fn certificate_round_trip() {
        let cert = BicliqueCertificate::new(Kind::Empty, vec![3, 1], vec![7]).unwrap();
        let text = format_certificate(&cert);
        assert_eq!(text, "BICLIQUE kind=empty\nA: 1 3\nB: 7\n");
        assert_eq!(parse_certificate(&text).unwrap(), cert);
    }

    #[test]
    fn graph_accepts_bare_pairs() {
        let (g, p) = parse_graph("0 1\nE 1 2\nP 0 1\nP 1 2\nP 2 1\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(p.unwrap().sizes(), (2, 1));
    }

    #[test]
    fn errors_name_the_line() {
        let err = parse_intervals("I 0 0 1\nI 1 2 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_subtrees("T 3\nE 0 1\nE 1 2\nS 0 : 0 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        let err = parse_certificate("BICLIQUE kind=full\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn instance_kinds_are_detected() {
        assert!(matches!(
            parse_instance("I 0 0 1\n").unwrap(),
            InstanceFile::Intervals(_)
        ));
        assert!(matches!(
            parse_instance("(U 0 1)\nP 0 1\nP 1 2\n").unwrap(),
            InstanceFile::Cotree(..)
        ));
        assert!(matches!(parse_instance("7\n").unwrap(), InstanceFile::Cotree(..)));
        assert!(matches!(parse_instance("N 3\n0 1\n").unwrap(), InstanceFile::Graph(..)));
        assert!(matches!(
            parse_instance("T 1\nS 0 : 0\n").unwrap(),
            InstanceFile::Subtrees(_)
        ));
    }
}
