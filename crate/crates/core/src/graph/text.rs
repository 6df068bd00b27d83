//! Line-based graph format and its JSON mirror.
//!
//! ```text
//! # a pinned path
//! v 3
//! e 0 1
//! e 1 2 2
//! p 0 1
//! l 0 2
//! ```

use serde_json::{json, Value};

use super::{Multigraph, Pinning, Vertex};
use crate::error::{Error, Result};

/// A graph together with the optional pinning and labels from a file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphFile {
    pub graph: Multigraph,
    pub pinning: Pinning,
    pub labels: Vec<Vertex>,
}

impl GraphFile {
    pub fn plain(graph: Multigraph) -> Self {
        GraphFile {
            graph,
            ..GraphFile::default()
        }
    }
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

/// Parses the text format, or JSON if the input starts with `{`.
pub fn parse(input: &str) -> Result<GraphFile> {
    if input.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
        return from_json(&v);
    }
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut pins = Vec::new();
    let mut labels: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut words = body.split_whitespace();
        let tag = words.next().unwrap();
        let nums = words
            .map(|w| w.parse::<usize>().map_err(|e| parse_err(line, format!("{w:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        match (tag, nums.as_slice()) {
            ("v", [count]) => {
                if n.replace(*count).is_some() {
                    return Err(parse_err(line, "duplicate vertex count"));
                }
            }
            ("e", [u, v]) => edges.push((line, *u, *v, 1)),
            ("e", [u, v, m]) => edges.push((line, *u, *v, *m)),
            ("p", [v, s]) => pins.push((*v, *s)),
            ("l", [idx, v]) => labels.push((*idx, *v)),
            _ => return Err(parse_err(line, format!("unrecognised line {body:?}"))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing `v <n>` line".into()))?;
    let mut graph = Multigraph::new(n);
    for (line, u, v, m) in edges {
        if m == 0 {
            return Err(parse_err(line, "multiplicity must be positive"));
        }
        graph.add_edges(u, v, m).map_err(|e| parse_err(line, e))?;
    }
    build(graph, pins, labels)
}

fn build(graph: Multigraph, pins: Vec<(usize, usize)>, mut labels: Vec<(usize, usize)>) -> Result<GraphFile> {
    let n = graph.vertex_count();
    let mut pinning = Pinning::new();
    for (v, s) in pins {
        if v >= n {
            return Err(Error::Parse(format!("pinned vertex {v} out of range")));
        }
        if pinning.get(v).is_some_and(|t| t != s) {
            return Err(Error::Parse(format!("vertex {v} pinned twice")));
        }
        pinning.pin(v, s);
    }
    labels.sort_unstable();
    if labels.iter().enumerate().any(|(i, &(idx, _))| idx != i) {
        return Err(Error::Parse("labels must be numbered 0..k without gaps".into()));
    }
    let labels: Vec<Vertex> = labels.into_iter().map(|(_, v)| v).collect();
    // Reuse the labeled-graph validation.
    super::LabeledGraph::new(graph.clone(), labels.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(GraphFile {
        graph,
        pinning,
        labels,
    })
}

pub fn to_text(file: &GraphFile) -> String {
    let mut out = format!("v {}\n", file.graph.vertex_count());
    for (u, v, m) in file.graph.edges() {
        if m == 1 {
            out += &format!("e {u} {v}\n");
        } else {
            out += &format!("e {u} {v} {m}\n");
        }
    }
    for (v, s) in file.pinning.iter() {
        out += &format!("p {v} {s}\n");
    }
    for (i, v) in file.labels.iter().enumerate() {
        out += &format!("l {i} {v}\n");
    }
    out
}

/// `{"vertices": n, "edges": [[u, v, mult], ...], "pins": [[v, s], ...], "labels": [v, ...]}`
pub fn to_json(file: &GraphFile) -> Value {
    json!({
        "vertices": file.graph.vertex_count(),
        "edges": file.graph.edges().map(|(u, v, m)| json!([u, v, m])).collect::<Vec<_>>(),
        "pins": file.pinning.iter().map(|(v, s)| json!([v, s])).collect::<Vec<_>>(),
        "labels": file.labels,
    })
}

pub fn from_json(value: &Value) -> Result<GraphFile> {
    let bad = |m: &str| Error::Parse(format!("graph JSON: {m}"));
    let uint = |v: &Value| v.as_u64().map(|x| x as usize).ok_or_else(|| bad("expected a non-negative integer"));
    let n = uint(value.get("vertices").ok_or_else(|| bad("missing \"vertices\""))?)?;
    let mut graph = Multigraph::new(n);
    let list = |key: &str| -> Result<Vec<Value>> {
        match value.get(key) {
            None => Ok(Vec::new()),
            Some(Value::Array(a)) => Ok(a.clone()),
            Some(_) => Err(bad("expected an array")),
        }
    };
    for e in list("edges")? {
        let parts = e.as_array().ok_or_else(|| bad("edge must be an array"))?;
        let nums = parts.iter().map(uint).collect::<Result<Vec<_>>>()?;
        let (u, v, m) = match nums.as_slice() {
            [u, v] => (*u, *v, 1),
            [u, v, m] if *m > 0 => (*u, *v, *m),
            _ => return Err(bad("edge must be [u, v] or [u, v, mult>0]")),
        };
        graph.add_edges(u, v, m).map_err(|e| Error::Parse(e.to_string()))?;
    }
    let mut pins = Vec::new();
    for p in list("pins")? {
        let nums = p.as_array().ok_or_else(|| bad("pin must be an array"))?.iter().map(uint).collect::<Result<Vec<_>>>()?;
        match nums.as_slice() {
            [v, s] => pins.push((*v, *s)),
            _ => return Err(bad("pin must be [v, spin]")),
        }
    }
    let labels = list("labels")?.iter().map(uint).collect::<Result<Vec<_>>>()?;
    build(graph, pins, labels.into_iter().enumerate().collect())
}
