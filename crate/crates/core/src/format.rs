//! Plain-text graph files.
//!
//! ```text
//! # optional comments anywhere
//! n m
//! u v          (m lines, 0 <= u < v < n)
//! label v text (optional, after the edges)
//! ```
//!
//! [`write_graph`] emits the canonical form: edges in lexicographic order, labels by vertex,
//! no comments.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    let mut head = header.split_whitespace();
    let n = parse_num(head.next(), line_no, "vertex count")?;
    let m = parse_num(head.next(), line_no, "edge count")?;
    if head.next().is_some() {
        return Err(parse_err(line_no, "header must be `n m`"));
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    let mut edges = Vec::with_capacity(m);
    let mut labels: Vec<Option<String>> = vec![None; n];
    for (line_no, line) in lines {
        if let Some(rest) = line.strip_prefix("label") {
            if edges.len() != m {
                return Err(parse_err(line_no, "label lines must follow all edges"));
            }
            let rest = rest.trim_start();
            let (id, text) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let v = parse_num(Some(id), line_no, "label vertex")?;
            if v >= n {
                return Err(parse_err(line_no, &format!("label vertex {v} out of range")));
            }
            if labels[v].is_some() {
                return Err(parse_err(line_no, &format!("duplicate label for vertex {v}")));
            }
            labels[v] = Some(text.trim().to_string());
            continue;
        }
        if edges.len() == m {
            return Err(parse_err(line_no, &format!("more than the declared {m} edges")));
        }
        let mut it = line.split_whitespace();
        let u = parse_num(it.next(), line_no, "edge endpoint")?;
        let v = parse_num(it.next(), line_no, "edge endpoint")?;
        if it.next().is_some() {
            return Err(parse_err(line_no, "edge lines must be `u v`"));
        }
        if !(u < v && v < n) {
            return Err(parse_err(line_no, &format!("edge `{u} {v}` violates 0 <= u < v < {n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse { line: 0, msg: format!("declared {m} edges, found {}", edges.len()) });
    }
    Graph::from_edges(n, edges)?.with_labels(labels)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    for (v, label) in g.labels().iter().enumerate() {
        if let Some(l) = label {
            let _ = writeln!(out, "label {v} {l}");
        }
    }
    out
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph_file(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    std::fs::write(path, write_graph(g))?;
    Ok(())
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, &format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, &format!("bad {what} {tok:?}")))
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse { line, msg: msg.to_string() }
}
