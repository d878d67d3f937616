//! Edge-list and graph6 text formats.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Largest order graph6 handles here (single-byte size header).
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "el" | "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            "g6" | "graph6" => Ok(GraphFormat::Graph6),
            _ => Err(Error::input(format!("unknown graph format `{s}` (expected el or g6)"))),
        }
    }
}

/// A parsed graph together with the text it came from.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub graph: Graph,
    pub source_format: GraphFormat,
    pub original_text: String,
}

impl GraphDocument {
    pub fn parse(text: &str, format: GraphFormat) -> Result<Self> {
        let graph = match format {
            GraphFormat::EdgeList => parse_edge_list(text)?,
            GraphFormat::Graph6 => parse_graph6(text)?,
        };
        Ok(GraphDocument {
            graph,
            source_format: format,
            original_text: text.to_string(),
        })
    }

    /// Re-serializes the graph in its source format.
    pub fn emit(&self) -> String {
        emit(&self.graph, self.source_format)
    }
}

pub fn emit(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => emit_edge_list(g),
        GraphFormat::Graph6 => emit_graph6(g),
    }
}

/// Parses `u v` lines with 0-based vertices. An optional first line
/// `n <count>` fixes the order; otherwise it is one more than the largest
/// index seen. `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_edge = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if seen_edge || declared.is_some() {
                return Err(Error::format(line_no, "header `n <count>` must come before any edge"));
            }
            let [_, count] = tokens[..] else {
                return Err(Error::format(line_no, "header must be `n <count>`"));
            };
            let count = parse_index(count, line_no)?;
            if count == 0 || count > MAX_VERTICES {
                return Err(Error::format(
                    line_no,
                    format!("vertex count must be between 1 and {MAX_VERTICES}, got {count}"),
                ));
            }
            declared = Some(count);
            continue;
        }
        let [a, b] = tokens[..] else {
            return Err(Error::format(line_no, format!("expected `u v`, got `{line}`")));
        };
        let (u, v) = (parse_index(a, line_no)?, parse_index(b, line_no)?);
        if u == v {
            return Err(Error::format(line_no, format!("loop at vertex {u}")));
        }
        let limit = declared.unwrap_or(MAX_VERTICES);
        if u.max(v) >= limit {
            return Err(Error::format(
                line_no,
                format!("vertex {} out of range for {limit} vertices", u.max(v)),
            ));
        }
        seen_edge = true;
        edges.push((u, v));
    }
    let n = match declared {
        Some(n) => n,
        None => edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .ok_or_else(|| Error::format(1, "no header and no edges; order unknown"))?,
    };
    let mut g = Graph::new(n)?;
    for (u, v) in edges {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::format(line, format!("`{token}` is not a non-negative integer")))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses one graph6 line. A leading `>>graph6<<` header is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::format(1, format!("byte {} at offset {pos} outside 63..=126", bytes[pos])));
    }
    let Some((&head, payload)) = bytes.split_first() else {
        return Err(Error::format(1, "empty graph6 string"));
    };
    let n = (head - 63) as usize;
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::format(1, format!("graph6 orders above {GRAPH6_MAX_ORDER} are not supported")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if payload.len() != needed {
        return Err(Error::format(
            1,
            format!("order {n} needs {needed} payload bytes, found {}", payload.len()),
        ));
    }
    if n == 0 {
        return Err(Error::format(1, "graph has no vertices"));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = payload[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= GRAPH6_MAX_ORDER, "graph6 output limited to {GRAPH6_MAX_ORDER} vertices");
    let bits = n * (n - 1) / 2;
    let mut payload = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                payload[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + payload.len());
    out.push((n as u8 + 63) as char);
    out.extend(payload.into_iter().map(|b| (b + 63) as char));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_examples() {
        let p3 = parse_edge_list("n 3\n0 1\n1 2").unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);
        let k3 = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!((k3.n(), k3.edge_count()), (3, 3));
        assert!(matches!(parse_edge_list("0 0"), Err(Error::Format { line: 1, .. })));
    }

    #[test]
    fn edge_list_details() {
        let g = parse_edge_list("# header\nn 5 # five\n\n0 1\n1 0\n0 1\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 1));
        assert!(matches!(parse_edge_list("n 3\n0 3"), Err(Error::Format { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 x"), Err(Error::Format { .. })));
        assert!(matches!(parse_edge_list("0 1 2"), Err(Error::Format { .. })));
        assert!(matches!(parse_edge_list("0 -1"), Err(Error::Format { .. })));
        assert!(parse_edge_list("0 1\nn 3").is_err());
        assert!(parse_edge_list("").is_err());
        assert_eq!(parse_edge_list("n 1").unwrap().n(), 1);
    }

    #[test]
    fn graph6_examples() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!((k3.n(), k3.edge_count()), (3, 3));
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap().edge_count(), 3);
        assert_eq!(emit_graph6(&k3), "Bw");
        assert_eq!(emit_graph6(&Graph::new(1).unwrap()), "@");
        // P_3 from the reference documentation: 0-1, 1-2 gives bits 1,0,1.
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(emit_graph6(&p3), "Bg");
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("B").is_err());
        assert!(parse_graph6("Bww").is_err());
        assert!(parse_graph6("B w").is_err());
        assert!(parse_graph6("~??").is_err());
        assert!(parse_graph6("?").is_err());
    }

    #[test]
    fn format_names() {
        assert_eq!("g6".parse::<GraphFormat>().unwrap(), GraphFormat::Graph6);
        assert_eq!("el".parse::<GraphFormat>().unwrap(), GraphFormat::EdgeList);
        assert!("dot".parse::<GraphFormat>().is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = Graph::new(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    fn same(a: &Graph, b: &Graph) -> bool {
        a.n() == b.n() && a.edges().eq(b.edges())
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph(40)) {
            let s = emit_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert!(same(&g, &back));
            prop_assert_eq!(emit_graph6(&back), s);
        }

        #[test]
        fn edge_list_round_trip(g in arb_graph(40)) {
            let doc = GraphDocument::parse(&emit_edge_list(&g), GraphFormat::EdgeList).unwrap();
            prop_assert!(same(&g, &doc.graph));
            prop_assert_eq!(doc.emit(), doc.original_text);
        }
    }
}
