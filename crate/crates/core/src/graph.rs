//! Immutable simple graphs stored as adjacency bit matrices.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::products::ProductIndex;
use crate::{Error, Permutation, Result};

const WORD_BITS: usize = 64;

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(at) => {
                self.0.insert(at, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.iter().filter(|&v| other.contains(v)).count()
    }

    pub(crate) fn check_range(&self, order: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= order => Err(Error::VertexOutOfRange { vertex: v, order }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwinKind {
    /// `N(u) = N(v)`: never adjacent to each other.
    False,
    /// `N[u] = N[v]`: always adjacent to each other.
    True,
}

/// Twin equivalence classes, ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    pub kind: TwinKind,
    pub classes: Vec<VertexSet>,
}

impl TwinPartition {
    /// Classes with at least two members.
    pub fn nontrivial(&self) -> impl Iterator<Item = &VertexSet> + '_ {
        self.classes.iter().filter(|c| c.len() > 1)
    }

    pub fn has_twins(&self) -> bool {
        self.nontrivial().next().is_some()
    }

    /// True when every class has at least two members.
    pub fn all_classes_nontrivial(&self) -> bool {
        self.classes.iter().all(|c| c.len() > 1)
    }

    pub fn class_of(&self, v: usize) -> Option<&VertexSet> {
        self.classes.iter().find(|c| c.contains(v))
    }
}

/// Graph diameter; disconnected graphs have an infinite diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Rows of the adjacency matrix are packed into `u64` words. The matrix is
/// symmetric with an empty diagonal; every constructor maintains that.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    label: Option<String>,
    index: Option<ProductIndex>,
}

/// Two graphs are equal when they have the same labelled adjacency matrix.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl Graph {
    pub(crate) fn empty(n: usize) -> Self {
        let stride = n.div_ceil(WORD_BITS).max(1);
        Graph {
            n,
            stride,
            rows: vec![0; n * stride],
            label: None,
            index: None,
        }
    }

    /// Builds the graph whose edges are the pairs `u < v` with `adjacent(u, v)`.
    pub(crate) fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected; repeated edges are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("a graph needs at least one vertex"));
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::input(alloc::format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.rows[v * self.stride + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub(crate) fn with_index(mut self, index: ProductIndex) -> Self {
        self.index = Some(index);
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// The mixed-radix layout, when this graph was built by a product.
    pub fn product_index(&self) -> Option<&ProductIndex> {
        self.index.as_ref()
    }

    /// Number of vertices, `|G|`.
    pub fn order(&self) -> usize {
        self.n
    }

    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    /// Adjacency test. Panics when either vertex is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.rows[u * self.stride + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub(crate) fn deg(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.deg(v))
    }

    /// `N(v)`.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(VertexSet(self.neighbors(v).collect()))
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        let mut set = self.open_neighborhood(v)?;
        set.insert(v);
        Ok(set)
    }

    pub fn is_dominating_vertex(&self, v: usize) -> Result<bool> {
        self.check(v)?;
        Ok(self.deg(v) + 1 == self.n)
    }

    pub fn dominating_vertices(&self) -> VertexSet {
        VertexSet((0..self.n).filter(|&v| self.deg(v) + 1 == self.n).collect())
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet((0..self.n).filter(|&v| self.deg(v) == 0).collect())
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// No edges at all (the null graph `N_n`).
    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }

    pub(crate) fn twin_key(&self, v: usize, kind: TwinKind) -> Vec<u64> {
        let mut key = self.row(v).to_vec();
        if kind == TwinKind::True {
            key[v / WORD_BITS] |= 1 << (v % WORD_BITS);
        }
        key
    }

    pub(crate) fn are_twins(&self, u: usize, v: usize, kind: TwinKind) -> bool {
        self.twin_key(u, kind) == self.twin_key(v, kind)
    }

    pub fn twin_partition(&self, kind: TwinKind) -> TwinPartition {
        let keys: Vec<Vec<u64>> = (0..self.n).map(|v| self.twin_key(v, kind)).collect();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        for v in 0..self.n {
            match reps.iter().position(|&r| keys[r] == keys[v]) {
                Some(c) => classes[c].push(v),
                None => {
                    reps.push(v);
                    classes.push(vec![v]);
                }
            }
        }
        TwinPartition {
            kind,
            classes: classes.into_iter().map(VertexSet).collect(),
        }
    }

    pub fn complement(&self) -> Graph {
        let g = Graph::from_fn(self.n, |u, v| !self.has_edge(u, v));
        match &self.label {
            Some(l) => g.with_label(alloc::format!("complement({l})")),
            None => g,
        }
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check(source)?;
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check(v)?;
        Ok(self.distances_from(u)?[v])
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).map(|d| d.iter().all(Option::is_some)).unwrap_or(true)
    }

    /// Maximum eccentricity, or [`Diameter::Infinite`] for disconnected graphs.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for v in 0..self.n {
            for d in self.distances_from(v).unwrap_or_default() {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Connected components, each sorted, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let comp: VertexSet = self
                .distances_from(s)
                .unwrap_or_default()
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            for v in comp.iter() {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by `set`, re-indexed in ascending order. The
    /// second component maps new indices back to old ones.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if set.is_empty() {
            return Err(Error::input("induced subgraph of an empty vertex set"));
        }
        set.check_range(self.n)?;
        let map = set.as_slice().to_vec();
        let g = Graph::from_fn(map.len(), |a, b| self.has_edge(map[a], map[b]));
        Ok((g, map))
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check(v)?;
        let keep: VertexSet = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep)?.0)
    }

    /// True when `map` is an isomorphism from `self` onto `other`.
    pub fn is_isomorphism(&self, other: &Graph, map: &Permutation) -> bool {
        if self.n != other.n || map.len() != self.n {
            return false;
        }
        let img = map.images();
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.has_edge(u, v) == other.has_edge(img[u], img[v])))
    }

    /// Preserves adjacency and non-adjacency.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        self.is_isomorphism(self, p)
    }
}
