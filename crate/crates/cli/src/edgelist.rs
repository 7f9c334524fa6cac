//! Plain-text edge lists.
//!
//! The first content line holds the vertex count `n`. Every later non-empty
//! line holds one edge `u v` with `0 <= u < v < n`. A `#` starts a comment
//! running to the end of the line. Duplicate edges are rejected.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use conormal_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, EdgeListError> {
    Err(EdgeListError { line, message: message.into() })
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut n: Option<usize> = None;
    let mut edges = BTreeSet::new();
    let mut last = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last = line;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let Some(order) = n else {
            if fields.len() != 1 {
                return fail(line, "expected the vertex count on its own line");
            }
            match fields[0].parse::<usize>() {
                Ok(v) if v >= 1 => n = Some(v),
                _ => return fail(line, format!("bad vertex count {:?}", fields[0])),
            }
            continue;
        };
        let [u, v] = fields[..] else {
            return fail(line, "expected two vertex indices");
        };
        let (Ok(u), Ok(v)) = (u.parse::<usize>(), v.parse::<usize>()) else {
            return fail(line, "vertex indices must be non-negative integers");
        };
        if u >= v {
            return fail(line, format!("edge {u} {v} must satisfy u < v"));
        }
        if v >= order {
            return fail(line, format!("vertex {v} out of range for {order} vertices"));
        }
        if !edges.insert((u, v)) {
            return fail(line, format!("duplicate edge {u} {v}"));
        }
    }
    let Some(n) = n else {
        return fail(last.max(1), "missing vertex count");
    };
    Graph::from_edges(n, edges).map_err(|e| EdgeListError { line: 1, message: e.to_string() })
}

/// Canonical form: the vertex count, then one sorted edge per line.
pub fn write(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
