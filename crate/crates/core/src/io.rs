//! Edge-list text format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v      (m lines, 0 <= u, v < n)
//! ```
//!
//! Directed files use the same layout with `u v` meaning `u -> v`.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Graph, GraphRef, UndirectedGraph};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    pub directed: bool,
    /// Reject repeated edges instead of dropping them.
    pub strict: bool,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line: usize, s: &str, what: &str) -> Result<(usize, usize)> {
    let mut it = s.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line, format!("{what}: expected two integers")))?;
        tok.parse()
            .map_err(|_| Error::parse(line, format!("{what}: `{tok}` is not a nonnegative integer")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::parse(line, format!("{what}: trailing tokens")));
    }
    Ok(pair)
}

/// Parses the edge-list format into either graph kind. Errors carry the
/// 1-based line number of the offending line.
pub fn parse_graph(text: &str, opts: ParseOptions) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let (n, m) = two_numbers(header_line, header, "header")?;

    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut listed = 0;
    let mut last_line = header_line;
    for (line, body) in lines {
        if listed == m {
            return Err(Error::parse(line, format!("more than the {m} edges declared in the header")));
        }
        listed += 1;
        last_line = line;
        let (u, v) = two_numbers(line, body, "edge")?;
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("endpoint out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        if opts.directed && seen.contains(&(v, u)) {
            return Err(Error::parse(line, format!("antiparallel pair {u}->{v} / {v}->{u}")));
        }
        let key = if opts.directed { (u, v) } else { (u.min(v), u.max(v)) };
        if !seen.insert(key) {
            if opts.strict {
                return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
            }
            continue;
        }
        edges.push((u, v));
    }
    if listed < m {
        return Err(Error::parse(last_line, format!("header declares {m} edges, found {listed}")));
    }

    Ok(if opts.directed {
        Graph::Directed(DirectedGraph::from_arcs(n, edges).map_err(|e| Error::parse(header_line, e.to_string()))?)
    } else {
        Graph::Undirected(UndirectedGraph::from_edges(n, edges).map_err(|e| Error::parse(header_line, e.to_string()))?)
    })
}

pub fn parse_undirected(text: &str) -> Result<UndirectedGraph> {
    match parse_graph(text, ParseOptions::default())? {
        Graph::Undirected(g) => Ok(g),
        Graph::Directed(_) => unreachable!(),
    }
}

pub fn parse_directed(text: &str) -> Result<DirectedGraph> {
    match parse_graph(text, ParseOptions { directed: true, strict: false })? {
        Graph::Directed(g) => Ok(g),
        Graph::Undirected(_) => unreachable!(),
    }
}

/// Serialises a graph with its edges in lexicographic order.
pub fn to_edge_list<'a>(graph: impl Into<GraphRef<'a>>) -> String {
    let (n, edges) = match graph.into() {
        GraphRef::Undirected(g) => (g.vertex_count(), g.edges()),
        GraphRef::Directed(g) => (g.vertex_count(), g.arcs()),
    };
    let mut out = format!("{} {}\n", n, edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_graph;
    use proptest::prelude::*;

    #[test]
    fn parses_path() {
        let g = parse_undirected("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, UndirectedGraph::path(3));
    }

    #[test]
    fn antiparallel_rejected_with_line() {
        let err = parse_directed("2 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn edgeless() {
        assert_eq!(parse_undirected("4 0\n").unwrap(), UndirectedGraph::new(4));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_undirected("# a triangle\n\n3 3\n0 1\n# mid\n1 2\n2 0\n").unwrap();
        assert_eq!(g, UndirectedGraph::complete(3));
    }

    #[test]
    fn duplicates_tolerated_unless_strict() {
        let text = "3 3\n0 1\n1 0\n1 2\n";
        assert_eq!(parse_undirected(text).unwrap().edge_count(), 2);
        let err = parse_graph(text, ParseOptions { directed: false, strict: true }).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn malformed_inputs() {
        let cases = [
            ("", 1),
            ("3\n", 1),
            ("3 x\n", 1),
            ("3 1 7\n0 1\n", 1),
            ("3 1\n0 3\n", 2),
            ("3 1\n1 1\n", 2),
            ("3 2\n0 1\n", 2),
            ("3 1\n0 1\n1 2\n", 3),
            ("3 1\n0 -1\n", 2),
        ];
        for (text, line) in cases {
            match parse_undirected(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn serialises_sorted() {
        let g = UndirectedGraph::from_edges(4, [(3, 2), (1, 0), (0, 3)]).unwrap();
        assert_eq!(to_edge_list(&g), "4 3\n0 1\n0 3\n2 3\n");
        let d = DirectedGraph::from_arcs(3, [(2, 0), (0, 1)]).unwrap();
        assert_eq!(to_edge_list(&d), "3 2\n0 1\n2 0\n");
        assert_eq!(parse_directed(&to_edge_list(&d)).unwrap(), d);
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..40, p in 0.0f64..=1.0, seed: u64) {
            let g = random_graph(n, p, seed).unwrap();
            prop_assert_eq!(parse_undirected(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
