//! Text formats: graph6, a plain edge list, short graph names, and DOT.

use std::fmt::Write as _;

use thiserror::Error;

use crate::construction::{Role, Scaffold};
use crate::families;
use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn malformed(msg: impl Into<String>) -> IoError {
    IoError::MalformedInput(msg.into())
}

/// graph6 encoding (short form below 63 vertices, long form above).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes one graph6 string; an optional `>>graph6<<` header is skipped.
pub fn parse_graph6(text: &str) -> Result<Graph, IoError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b:#04x} outside the graph6 range")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(malformed("graph6 forms beyond 258047 vertices are not supported"));
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(malformed(format!(
            "{n} vertices need {need} data bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..need * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// `n m` on the first line, then `m` lines `u v` (0-based). Blank lines and
/// lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| malformed("empty edge list"))?;
    let nums = |line: &str| -> Result<Vec<usize>, IoError> {
        line.split_whitespace()
            .map(|t| t.parse().map_err(|_| malformed(format!("not a number: {t:?}"))))
            .collect()
    };
    let head = nums(header)?;
    let [n, m] = head[..] else {
        return Err(malformed("header must be `n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let pair = nums(line)?;
        let [u, v] = pair[..] else {
            return Err(malformed(format!("edge line must be `u v`: {line:?}")));
        };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(malformed(format!("header promises {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Edge list if the first meaningful line holds two numbers, graph6 otherwise.
pub fn parse_graph_text(text: &str) -> Result<Graph, IoError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| malformed("empty input"))?;
    let looks_numeric = first
        .split_whitespace()
        .all(|t| t.chars().all(|c| c.is_ascii_digit()));
    if looks_numeric && first.split_whitespace().count() == 2 {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

/// Short names: `k<n>` complete, `p<n>` path, `c<n>` cycle, `e<n>` edgeless,
/// `star<n>` star with n leaves, `prism<m>`, `palpha<a>`, `palphabeta<a>,<b>`,
/// `<k>k<n>` for k disjoint copies of K_n, and the fixture names `figure1`,
/// `hex_prism`, `hept_prism`. Returns `None` for anything else.
pub fn parse_named(spec: &str) -> Option<Result<Graph, IoError>> {
    let s = spec.trim().to_ascii_lowercase();
    let num = |rest: &str| rest.parse::<usize>().ok();
    let wrap = |r: Result<Graph, GraphError>| Some(r.map_err(IoError::from));
    let fam = |r: Result<families::Fixture, families::DomainError>| {
        Some(r.map(|f| f.graph).map_err(|e| malformed(e.to_string())))
    };
    match s.as_str() {
        "figure1" => return Some(Ok(families::fixture_figure1().graph)),
        "hex_prism" => return fam(families::gen_prism(6)),
        "hept_prism" => return fam(families::gen_prism(7)),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("palphabeta") {
        let (a, b) = rest.split_once(',')?;
        return fam(families::gen_p_alpha_beta(num(a)?, num(b)?));
    }
    if let Some(rest) = s.strip_prefix("palpha") {
        return fam(families::gen_p_alpha(num(rest)?));
    }
    if let Some(rest) = s.strip_prefix("prism") {
        return fam(families::gen_prism(num(rest)?));
    }
    if let Some(rest) = s.strip_prefix("star") {
        return wrap(Graph::star(num(rest)?));
    }
    if let Some((copies, size)) = s.split_once('k') {
        if !copies.is_empty() {
            let (copies, size) = (num(copies)?, num(size)?);
            if copies == 0 {
                return Some(Err(malformed("zero copies")));
            }
            let one = match Graph::complete(size) {
                Ok(g) => g,
                Err(e) => return Some(Err(e.into())),
            };
            let mut g = one.clone();
            for _ in 1..copies {
                g = match g.disjoint_union(&one) {
                    Ok(g) => g,
                    Err(e) => return Some(Err(e.into())),
                };
            }
            return Some(Ok(g));
        }
    }
    let (head, rest) = s.split_at(1.min(s.len()));
    let n = num(rest)?;
    match head {
        "k" => wrap(Graph::complete(n)),
        "p" => wrap(Graph::path(n)),
        "c" => wrap(Graph::cycle(n)),
        "e" => wrap(Graph::edgeless(n)),
        _ => None,
    }
}

fn role_color(role: Role) -> &'static str {
    match role {
        Role::Center(_) => "gold",
        Role::Periphery(_) => "lightblue",
        _ => "gray85",
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT rendering of a plain graph with its labels.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", dot_escape(&g.label(v)));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// DOT rendering colouring center, periphery and added vertices.
pub fn scaffold_to_dot(s: &Scaffold) -> String {
    let g = &s.graph;
    let mut out = String::from("graph G {\n  node [style=filled];\n");
    for v in 0..g.n() {
        let role = s.roles[v];
        let _ = writeln!(
            out,
            "  {v} [label=\"{}\", fillcolor={}, tooltip=\"{role}\"];",
            dot_escape(&g.label(v)),
            role_color(role)
        );
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_small() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse_graph6("A?").unwrap(), Graph::edgeless(2).unwrap());
        assert_eq!(to_graph6(&Graph::complete(2).unwrap()), "A_");
        // well-known encodings
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::path(4).unwrap()), "Ch");
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("A`").is_err()); // padding bit set
        assert!(parse_graph6("A\u{7f}").is_err());
    }

    #[test]
    fn graph6_long_form() {
        let g = Graph::cycle(64).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(parse_graph_text(&text).unwrap(), g);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3\n").is_err());
    }

    #[test]
    fn named_graphs() {
        let get = |s: &str| parse_named(s).unwrap().unwrap();
        assert_eq!(get("k3"), Graph::complete(3).unwrap());
        assert_eq!(get("P4"), Graph::path(4).unwrap());
        assert_eq!(get("c6"), Graph::cycle(6).unwrap());
        assert_eq!(get("e2"), Graph::edgeless(2).unwrap());
        assert_eq!(get("star3"), Graph::star(3).unwrap());
        assert_eq!(get("2k2").n(), 4);
        assert_eq!(get("2k2").edge_count(), 2);
        assert_eq!(get("prism6").n(), 12);
        assert_eq!(get("palphabeta3,2").n(), 8);
        assert_eq!(get("figure1").n(), 13);
        assert!(parse_named("graph.g6").is_none());
        assert!(parse_named("k0").unwrap().is_err());
    }

    #[test]
    fn dot_output() {
        let s = crate::construction::build_cone(&Graph::path(3).unwrap());
        let dot = scaffold_to_dot(&s);
        assert!(dot.contains("fillcolor=gold"));
        assert!(dot.contains("0 -- 1;"));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn graph6_round_trip(n in 1usize..20, seed in any::<u64>()) {
                let mut x = seed | 1;
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                        if x & 1 == 1 { edges.push((u, v)); }
                    }
                }
                let g = Graph::from_edges(n, edges).unwrap();
                let s = to_graph6(&g);
                prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
                prop_assert_eq!(to_graph6(&parse_graph6(&s).unwrap()), s);
            }
        }
    }
}
