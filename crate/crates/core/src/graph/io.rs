//! Plain-text instance formats.
//!
//! * Edge list: a header line `N M`, then one `u v` line per edge (0-indexed).
//!   Anything after `#` on a line is ignored.
//! * DIMACS: `c` comment lines, one `p edge N M` line, then `e u v` lines
//!   (1-indexed).
//!
//! The declared edge count `M` is informational; the edge lines are what is
//! read, since published DIMACS files frequently list duplicates.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl Format {
    /// Guesses the format from the first meaningful line.
    pub fn detect(text: &str) -> Self {
        for line in text.lines() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return if t.starts_with("c ") || t == "c" || t.starts_with("p ") || t.starts_with("e ")
            {
                Format::Dimacs
            } else {
                Format::EdgeList
            };
        }
        Format::EdgeList
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(crate::error::invalid(
                "format",
                format!("unknown format `{other}`"),
            )),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn field<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("cannot parse {what} from `{tok}`")))
}

pub fn parse_instance(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let a: usize = field(toks.next(), lineno, "first field")?;
        let b: usize = field(toks.next(), lineno, "second field")?;
        if toks.next().is_some() {
            return Err(parse_err(lineno, "expected exactly two fields"));
        }
        match n {
            None => n = Some(a),
            Some(n) => {
                if a >= n || b >= n {
                    return Err(parse_err(
                        lineno,
                        format!("edge ({a}, {b}) references a node outside 0..{n}"),
                    ));
                }
                if a == b {
                    return Err(parse_err(lineno, format!("self loop on node {a}")));
                }
                edges.push((a, b));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `N M` header"))?;
    Graph::from_edge_list(n, edges)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        let mut toks = line.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                let kind = toks.next().unwrap_or("");
                if kind != "edge" && kind != "col" {
                    return Err(parse_err(
                        lineno,
                        format!("unsupported problem type `{kind}`"),
                    ));
                }
                n = Some(field(toks.next(), lineno, "node count")?);
                let _m: usize = field(toks.next(), lineno, "edge count")?;
            }
            Some("e") => {
                let nodes = n.ok_or_else(|| parse_err(lineno, "edge before problem line"))?;
                let u: usize = field(toks.next(), lineno, "edge endpoint")?;
                let v: usize = field(toks.next(), lineno, "edge endpoint")?;
                if u == 0 || v == 0 || u > nodes || v > nodes {
                    return Err(parse_err(
                        lineno,
                        format!("edge ({u}, {v}) references a node outside 1..={nodes}"),
                    ));
                }
                if u == v {
                    return Err(parse_err(lineno, format!("self loop on node {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(parse_err(lineno, format!("unexpected line type `{other}`")));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `p edge N M` line"))?;
    Graph::from_edge_list(n, edges)
}

pub fn write_instance(graph: &Graph, format: Format) -> String {
    let mut out = String::new();
    let (n, m) = (graph.num_nodes(), graph.num_edges());
    match format {
        Format::EdgeList => {
            writeln!(out, "{n} {m}").unwrap();
            for (u, v) in graph.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        Format::Dimacs => {
            writeln!(out, "p edge {n} {m}").unwrap();
            for (u, v) in graph.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
    }
    out
}

/// Reads an instance file, detecting the format from its contents when `format` is `None`.
pub fn read_instance(path: impl AsRef<Path>, format: Option<Format>) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    let format = format.unwrap_or_else(|| Format::detect(&text));
    parse_instance(&text, format)
}
