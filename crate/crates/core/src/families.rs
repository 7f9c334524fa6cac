//! Named graph families with canonical labellings, and recognisers for them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

fn join_sizes(parts: &[usize]) -> String {
    parts.iter().map(|p| format!("{p}")).collect::<Vec<_>>().join(",")
}

/// `P_n` with edges `{i, i+1}`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::input("path needs at least 1 vertex"));
    }
    Ok(Graph::from_fn(n, |u, v| v == u + 1).with_label(format!("path:{n}")))
}

/// `C_n`: the path plus `{n-1, 0}`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input("cycle needs at least 3 vertices"));
    }
    Ok(Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)).with_label(format!("cycle:{n}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::input("complete graph needs at least 1 vertex"));
    }
    Ok(Graph::from_fn(n, |_, _| true).with_label(format!("complete:{n}")))
}

/// The edgeless graph `N_n`.
pub fn null(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::input("null graph needs at least 1 vertex"));
    }
    Ok(Graph::empty(n).with_label(format!("null:{n}")))
}

/// `K_{1,leaves}` with the centre at vertex 0. Its order is `leaves + 1`.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves < 1 {
        return Err(Error::input("star needs at least 1 leaf"));
    }
    Ok(Graph::from_fn(leaves + 1, |u, _| u == 0).with_label(format!("star:{leaves}")))
}

/// `K_{k_1,...,k_r}` with part `i` occupying a consecutive index block.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::input("complete multipartite graph needs non-empty parts"));
    }
    let part_of: Vec<usize> = parts.iter().enumerate().flat_map(|(i, &k)| core::iter::repeat_n(i, k)).collect();
    Ok(Graph::from_fn(part_of.len(), |u, v| part_of[u] != part_of[v]).with_label(format!("kpartite:{}", join_sizes(parts))))
}

/// Order of `g` if it is a path.
pub fn as_path(g: &Graph) -> Option<usize> {
    let n = g.order();
    let ok = g.is_connected() && g.edge_count() + 1 == n && (0..n).all(|v| g.deg(v) <= 2);
    ok.then_some(n)
}

pub fn as_cycle(g: &Graph) -> Option<usize> {
    let n = g.order();
    (n >= 3 && g.is_connected() && (0..n).all(|v| g.deg(v) == 2)).then_some(n)
}

/// Leaf count of `g` if it is a star `K_{1,m}`.
pub fn as_star(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 2 || g.edge_count() != n - 1 {
        return None;
    }
    (0..n).any(|v| g.deg(v) == n - 1).then_some(n - 1)
}

pub fn as_null(g: &Graph) -> Option<usize> {
    g.is_edgeless().then_some(g.order())
}

/// Part sizes (ascending) if `g` is complete multipartite, i.e. its
/// complement is a disjoint union of cliques.
pub fn as_complete_multipartite(g: &Graph) -> Option<Vec<usize>> {
    let c = g.complement();
    let mut parts = Vec::new();
    for comp in c.components() {
        let k = comp.len();
        if comp.iter().any(|v| c.deg(v) + 1 != k) {
            return None;
        }
        parts.push(k);
    }
    parts.sort_unstable();
    Some(parts)
}
