//! Line-oriented text format for ordered digraphs.
//!
//! ```text
//! # comment
//! vertices: 3
//! vertex u
//! vertex v
//! vertex w
//! edge 1 u w
//! edge 2 u v
//! edge 3 v w
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, OrderedDigraph};

pub fn parse_graph_file(path: impl AsRef<Path>) -> Result<OrderedDigraph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text)
}

pub fn parse_graph(text: &str) -> Result<OrderedDigraph> {
    let fail = |line: usize, message: String| Error::Parse { line, message };

    let mut declared: Option<usize> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut seen_vertices = BTreeSet::new();
    let mut seen_edges = BTreeSet::new();
    let mut edges: Vec<(u32, String, String)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertices:", n] => {
                if declared.is_some() {
                    return Err(fail(line, "repeated `vertices:` header".into()));
                }
                let n = n
                    .parse()
                    .map_err(|_| fail(line, format!("invalid vertex count `{n}`")))?;
                declared = Some(n);
            }
            ["vertex", label] => {
                let n = declared.ok_or_else(|| fail(line, "`vertex` before `vertices:` header".into()))?;
                if !edges.is_empty() {
                    return Err(fail(line, "`vertex` after the first `edge`".into()));
                }
                if vertices.len() == n {
                    return Err(fail(line, format!("more than the {n} declared vertices")));
                }
                if !seen_vertices.insert(label.to_string()) {
                    return Err(fail(line, format!("duplicate vertex label `{label}`")));
                }
                vertices.push(label.to_string());
            }
            ["edge", id, tail, head] => {
                let n = declared.ok_or_else(|| fail(line, "`edge` before `vertices:` header".into()))?;
                if vertices.len() != n {
                    return Err(fail(
                        line,
                        format!("{} vertices declared, {} listed", n, vertices.len()),
                    ));
                }
                let id: u32 = id
                    .parse()
                    .ok()
                    .filter(|&id| id > 0)
                    .ok_or_else(|| fail(line, format!("edge id `{id}` is not a positive integer")))?;
                if !seen_edges.insert(id) {
                    return Err(fail(line, format!("duplicate edge id {id}")));
                }
                for v in [tail, head] {
                    if !seen_vertices.contains(*v) {
                        return Err(fail(
                            line,
                            format!("edge {id}: endpoint `{v}` is not a declared vertex"),
                        ));
                    }
                }
                edges.push((id, tail.to_string(), head.to_string()));
            }
            _ => return Err(fail(line, format!("unrecognised line `{content}`"))),
        }
    }
    let n = declared.ok_or_else(|| fail(text.lines().count().max(1), "missing `vertices:` header".into()))?;
    if vertices.len() != n {
        return Err(fail(
            text.lines().count().max(1),
            format!("{} vertices declared, {} listed", n, vertices.len()),
        ));
    }
    OrderedDigraph::build(vertices, edges)
}

/// Renders `g` in the text format; vertices sorted by label, edges by id.
pub fn write_graph(g: &OrderedDigraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vertices: {}", g.vertex_count());
    for label in g.vertices() {
        let _ = writeln!(out, "vertex {label}");
    }
    for e in g.edges() {
        let _ = writeln!(
            out,
            "edge {} {} {}",
            e.id,
            g.vertex_label(e.tail),
            g.vertex_label(e.head)
        );
    }
    out
}

/// Space-separated ascending ids, the canonical output form.
pub fn format_ids<'a>(ids: impl IntoIterator<Item = &'a EdgeId>) -> String {
    ids.into_iter()
        .map(|id| id.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses ids separated by whitespace and/or commas.
pub fn parse_ids(text: &str) -> Result<BTreeSet<EdgeId>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .ok()
                .filter(|&v| v > 0)
                .map(EdgeId)
                .ok_or_else(|| Error::Precondition(format!("`{t}` is not an edge id")))
        })
        .collect()
}
