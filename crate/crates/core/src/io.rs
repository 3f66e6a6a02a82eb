//! Text formats: edge lists, factors, trails and DOT export.
//!
//! Edge list: first non-comment line `n m`, then `m` lines `u v` with
//! 0-based ids. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};
use crate::trails::{EdgeSet, Trail};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = it.next().ok_or_else(|| err(line, format!("missing {what}")))?;
        tok.parse().map_err(|_| err(line, format!("invalid {what} `{tok}`")))
    };
    let a = next("first number")?;
    let b = next("second number")?;
    if let Some(extra) = it.next() {
        return Err(err(line, format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

/// Reads `m` edges for a graph on `n` vertices.
fn parse_edges<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    n: usize,
    m: usize,
    last_line: usize,
) -> Result<EdgeSet, ParseError> {
    let mut set = EdgeSet::new(n);
    for i in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| err(last_line, format!("expected {m} edges, found {i}")))?;
        let (u, v) = parse_pair(line, text)?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(err(line, format!("self-loop at {u}")));
        }
        if !set.insert(u, v) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
    }
    Ok(set)
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let last_line = text.lines().count().max(1);
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| err(last_line, "missing header `n m`"))?;
    let (n, m) = parse_pair(line, header)?;
    if n > MAX_VERTICES {
        return Err(err(line, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }
    let edges = parse_edges(&mut lines, n, m, last_line)?;
    if let Some((line, text)) = lines.next() {
        return Err(err(line, format!("unexpected content `{text}` after {m} edges")));
    }
    Ok(Graph::from_edges(n, edges.edges()).expect("edges validated"))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// `factor k` followed by `k` lines `u v`.
pub fn write_factor(edges: &EdgeSet) -> String {
    let mut out = format!("factor {}\n", edges.len());
    for (u, v) in edges.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_factor(text: &str, n: usize) -> Result<EdgeSet, ParseError> {
    let last_line = text.lines().count().max(1);
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| err(last_line, "missing header `factor k`"))?;
    let k = header
        .strip_prefix("factor")
        .map(str::trim)
        .ok_or_else(|| err(line, "expected `factor k`"))?;
    let k: usize = k.parse().map_err(|_| err(line, format!("invalid edge count `{k}`")))?;
    let edges = parse_edges(&mut lines, n, k, last_line)?;
    if let Some((line, text)) = lines.next() {
        return Err(err(line, format!("unexpected content `{text}` after {k} edges")));
    }
    Ok(edges)
}

pub fn write_trail(t: &Trail) -> String {
    format!("{t}\n")
}

pub fn parse_trail(text: &str) -> Result<Trail, ParseError> {
    let last_line = text.lines().count().max(1);
    let mut lines = content_lines(text);
    let (line, body) = lines.next().ok_or_else(|| err(last_line, "missing trail line"))?;
    let vertices = body
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| err(line, format!("invalid vertex `{t}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some((line, text)) = lines.next() {
        return Err(err(line, format!("unexpected content `{text}`")));
    }
    Trail::new(vertices).map_err(|e| err(line, e.to_string()))
}

/// DOT rendering of `g`; factor edges are drawn bold, square-only factor
/// edges dashed.
pub fn to_dot(g: &Graph, factor: Option<&EdgeSet>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        let style = match factor {
            Some(f) if f.contains(u, v) => " [style=bold]",
            _ => "",
        };
        writeln!(out, "  {u} -- {v}{style};").unwrap();
    }
    if let Some(f) = factor {
        for (u, v) in f.edges().filter(|&(u, v)| !g.has_edge(u, v)) {
            writeln!(out, "  {u} -- {v} [style=\"bold,dashed\"];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
