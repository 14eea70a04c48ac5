//! Plain-text graph format.
//!
//! ```text
//! # comment
//! hh v1 <n> <hub>
//! t <v> <tau>
//! e <u> <v> <w>
//! ```
//!
//! Tokens are whitespace separated and `#` starts a comment. Edge weights must
//! be at least 1 and each `(u, v)` pair and each `t` vertex may appear once.
//! [`write_graph`] emits the canonical form: header, nonzero tolerances by
//! vertex, then edges by `(u, v)`, single spaces, `\n` line ends. Canonical
//! text survives `parse` then `write` byte for byte.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{HhError, Result};
use crate::graph::{Tolerance, Topology, Weight, WeightedDigraph};

pub const FORMAT_TAG: &str = "hh";
pub const FORMAT_VERSION: &str = "v1";

/// A graph together with the tolerances stored alongside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: WeightedDigraph,
    pub tolerance: Tolerance,
}

impl GraphDocument {
    pub fn new(graph: WeightedDigraph) -> Self {
        GraphDocument {
            graph,
            tolerance: Tolerance::zero(),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> HhError {
    HhError::Parse {
        line,
        message: message.into(),
    }
}

fn field<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<GraphDocument> {
    let mut header: Option<(usize, usize)> = None;
    let mut topology = Topology::default();
    let mut tolerance = Tolerance::zero();
    let mut seen_tau = std::collections::BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = content.split_whitespace();
        let Some(kind) = toks.next() else { continue };

        match (kind, header) {
            (FORMAT_TAG, None) => {
                let version: String = field(toks.next(), line, "version")?;
                if version != FORMAT_VERSION {
                    return Err(parse_err(line, format!("unsupported version `{version}`")));
                }
                let n: usize = field(toks.next(), line, "vertex count")?;
                let hub: usize = field(toks.next(), line, "hub id")?;
                if hub >= n {
                    return Err(parse_err(line, format!("hub {hub} out of range for n = {n}")));
                }
                header = Some((n, hub));
                topology = Topology::empty(n);
            }
            (FORMAT_TAG, Some(_)) => return Err(parse_err(line, "duplicate header")),
            (_, None) => {
                return Err(parse_err(line, "expected header `hh v1 <n> <hub>`"));
            }
            ("t", Some((n, _))) => {
                let v: usize = field(toks.next(), line, "vertex")?;
                let tau: u64 = field(toks.next(), line, "tolerance")?;
                if v >= n {
                    return Err(parse_err(line, format!("vertex {v} out of range for n = {n}")));
                }
                if !seen_tau.insert(v) {
                    return Err(parse_err(line, format!("duplicate tolerance for vertex {v}")));
                }
                tolerance.set(v, tau);
            }
            ("e", Some((n, _))) => {
                let u: usize = field(toks.next(), line, "source")?;
                let v: usize = field(toks.next(), line, "target")?;
                let w: Weight = field(toks.next(), line, "weight")?;
                if u >= n || v >= n {
                    return Err(parse_err(line, format!("edge ({u}, {v}) out of range for n = {n}")));
                }
                if w == 0 {
                    return Err(parse_err(line, "edge weight must be at least 1"));
                }
                if topology.weight(u, v) != 0 {
                    return Err(parse_err(line, format!("duplicate edge ({u}, {v})")));
                }
                topology.add_weight(u, v, w)?;
            }
            (other, Some(_)) => {
                return Err(parse_err(line, format!("unknown record `{other}`")));
            }
        }
        if let Some(extra) = toks.next() {
            return Err(parse_err(line, format!("unexpected token `{extra}`")));
        }
    }

    let (_, hub) = header.ok_or_else(|| parse_err(1, "missing header `hh v1 <n> <hub>`"))?;
    Ok(GraphDocument {
        graph: WeightedDigraph::new(topology, hub)?,
        tolerance,
    })
}

pub fn write_graph(doc: &GraphDocument) -> String {
    let g = &doc.graph;
    let mut out = String::new();
    writeln!(out, "{FORMAT_TAG} {FORMAT_VERSION} {} {}", g.n(), g.hub()).unwrap();
    for v in 0..g.n() {
        let tau = doc.tolerance.get(v);
        if tau != 0 {
            writeln!(out, "t {v} {tau}").unwrap();
        }
    }
    for (u, v, w) in g.edges() {
        writeln!(out, "e {u} {v} {w}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_whitespace() {
        let text = "# a graph\n\n  hh v1 3 2   # header\nt 0 1\ne 2 0 2\n\te 1\t0 3\n";
        let doc = parse_graph(text).unwrap();
        assert_eq!(doc.graph.n(), 3);
        assert_eq!(doc.graph.hub(), 2);
        assert_eq!(doc.graph.total_in(0).unwrap(), 5);
        assert_eq!(doc.tolerance.get(0), 1);
        assert_eq!(doc.tolerance.get(1), 0);
    }

    #[test]
    fn canonical_text_round_trips() {
        let text = "hh v1 4 3\nt 1 2\nt 2 7\ne 0 1 5\ne 1 1 1\ne 3 0 4\ne 3 2 9\n";
        assert_eq!(write_graph(&parse_graph(text).unwrap()), text);
    }

    #[test]
    fn zero_tolerance_lines_are_normalised_away() {
        let doc = parse_graph("hh v1 2 0\nt 1 0\n").unwrap();
        assert_eq!(write_graph(&doc), "hh v1 2 0\n");
    }

    fn err_line(text: &str) -> usize {
        match parse_graph(text) {
            Err(HhError::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_input_with_line_numbers() {
        assert_eq!(err_line(""), 1);
        assert_eq!(err_line("e 0 1 1\n"), 1);
        assert_eq!(err_line("hh v2 3 0\n"), 1);
        assert_eq!(err_line("hh v1 3 3\n"), 1);
        assert_eq!(err_line("hh v1 3 0\ne 0 1 0\n"), 2);
        assert_eq!(err_line("hh v1 3 0\ne 0 1 1\ne 0 1 2\n"), 3);
        assert_eq!(err_line("hh v1 3 0\ne 0 5 1\n"), 2);
        assert_eq!(err_line("hh v1 3 0\n\nt 1 1\nt 1 2\n"), 4);
        assert_eq!(err_line("hh v1 3 0\nx 1 2\n"), 2);
        assert_eq!(err_line("hh v1 3 0\ne 0 1 1 9\n"), 2);
        assert_eq!(err_line("hh v1 3 0\nhh v1 3 0\n"), 2);
        assert_eq!(err_line("hh v1 3 0\ne 0 1 -1\n"), 2);
        assert_eq!(err_line("hh v1 3 0\ne 0 1\n"), 2);
    }
}
