//! Product constructions and the structural facts about co-normal products.
//!
//! Product vertices are flattened row-major: `(i, j)` of `G1 × G2` is
//! `i·|G2| + j`, and k-ary tuples use the same mixed-radix rule.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Diameter, Graph, VertexSet};
use crate::{Error, Limits, Result};

/// Mixed-radix layout of a product's vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIndex {
    orders: Vec<usize>,
}

impl ProductIndex {
    pub fn new(orders: Vec<usize>) -> Self {
        ProductIndex { orders }
    }

    pub fn factor_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn size(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn flat(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.orders.len());
        tuple.iter().zip(&self.orders).fold(0, |acc, (&t, &m)| acc * m + t)
    }

    pub fn tuple(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.orders.len()];
        for (slot, &m) in out.iter_mut().zip(&self.orders).rev() {
            *slot = flat % m;
            flat /= m;
        }
        out
    }

    pub fn coordinate(&self, flat: usize, factor: usize) -> usize {
        let stride: usize = self.orders[factor + 1..].iter().product();
        flat / stride % self.orders[factor]
    }
}

fn combined_label(name: &str, factors: &[&Graph]) -> Option<String> {
    let labels: Option<Vec<&str>> = factors.iter().map(|g| g.label()).collect();
    labels.map(|ls| format!("{name}({})", ls.join(",")))
}

fn finish(g: Graph, label: Option<String>) -> Graph {
    match label {
        Some(l) => g.with_label(l),
        None => g,
    }
}

/// Product constructors sharing one vertex cap.
#[derive(Clone, Copy, Debug)]
pub struct Products {
    pub cap: usize,
}

impl Default for Products {
    fn default() -> Self {
        Products { cap: Limits::DEFAULT_MAX_PRODUCT_VERTICES }
    }
}

impl From<&Limits> for Products {
    fn from(l: &Limits) -> Self {
        Products { cap: l.max_product_vertices }
    }
}

impl Products {
    fn size(&self, orders: &[usize]) -> Result<usize> {
        let requested = orders
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m))
            .unwrap_or(usize::MAX);
        if requested > self.cap {
            return Err(Error::SizeCap { requested, cap: self.cap });
        }
        Ok(requested)
    }

    /// `G1 * G2`: `(i,j) ~ (r,s)` iff `i ~ r` in `G1` or `j ~ s` in `G2`.
    pub fn conormal(&self, g1: &Graph, g2: &Graph) -> Result<Graph> {
        let (m1, m2) = (g1.order(), g2.order());
        let n = self.size(&[m1, m2])?;
        let g = Graph::from_fn(n, |u, v| g1.has_edge(u / m2, v / m2) || g2.has_edge(u % m2, v % m2));
        Ok(finish(g, combined_label("conormal", &[g1, g2])).with_index(ProductIndex::new(vec![m1, m2])))
    }

    /// Generalised co-normal product of `k ≥ 2` factors, each of order ≥ 2.
    pub fn conormal_k(&self, factors: &[Graph]) -> Result<Graph> {
        if factors.len() < 2 {
            return Err(Error::input("the co-normal product needs at least two factors"));
        }
        if let Some(g) = factors.iter().find(|g| g.order() < 2) {
            return Err(Error::input(format!(
                "every factor of a generalised co-normal product needs order >= 2, got {}",
                g.label().unwrap_or("a single-vertex graph")
            )));
        }
        let orders: Vec<usize> = factors.iter().map(Graph::order).collect();
        let n = self.size(&orders)?;
        let index = ProductIndex::new(orders);
        let tuples: Vec<Vec<usize>> = (0..n).map(|f| index.tuple(f)).collect();
        let g = Graph::from_fn(n, |u, v| {
            factors.iter().zip(tuples[u].iter().zip(&tuples[v])).any(|(g, (&a, &b))| g.has_edge(a, b))
        });
        let refs: Vec<&Graph> = factors.iter().collect();
        Ok(finish(g, combined_label("conormal", &refs)).with_index(index))
    }

    /// `G1[G2]`: `(i,j) ~ (r,s)` iff `i ~ r`, or `i = r` and `j ~ s`.
    pub fn lexicographic(&self, g1: &Graph, g2: &Graph) -> Result<Graph> {
        let (m1, m2) = (g1.order(), g2.order());
        let n = self.size(&[m1, m2])?;
        let g = Graph::from_fn(n, |u, v| {
            let (i, r) = (u / m2, v / m2);
            g1.has_edge(i, r) || (i == r && g2.has_edge(u % m2, v % m2))
        });
        Ok(finish(g, combined_label("lex", &[g1, g2])).with_index(ProductIndex::new(vec![m1, m2])))
    }

    /// `G1 ⊠ G2`: each coordinate equal or adjacent, at least one adjacent.
    pub fn strong(&self, g1: &Graph, g2: &Graph) -> Result<Graph> {
        let (m1, m2) = (g1.order(), g2.order());
        let n = self.size(&[m1, m2])?;
        let g = Graph::from_fn(n, |u, v| {
            let (i, r, j, s) = (u / m2, v / m2, u % m2, v % m2);
            let a = g1.has_edge(i, r);
            let b = g2.has_edge(j, s);
            (i == r && b) || (a && j == s) || (a && b)
        });
        Ok(finish(g, combined_label("strong", &[g1, g2])).with_index(ProductIndex::new(vec![m1, m2])))
    }

    /// `G1 + G2`: disjoint union plus every cross edge. `G1` keeps the low
    /// indices.
    pub fn join(&self, g1: &Graph, g2: &Graph) -> Result<Graph> {
        let m1 = g1.order();
        let n = m1 + g2.order();
        if n > self.cap {
            return Err(Error::SizeCap { requested: n, cap: self.cap });
        }
        let g = Graph::from_fn(n, |u, v| match (u < m1, v < m1) {
            (true, true) => g1.has_edge(u, v),
            (false, false) => g2.has_edge(u - m1, v - m1),
            _ => true,
        });
        Ok(finish(g, combined_label("join", &[g1, g2])))
    }
}

pub fn conormal(g1: &Graph, g2: &Graph) -> Result<Graph> {
    Products::default().conormal(g1, g2)
}

pub fn conormal_k(factors: &[Graph]) -> Result<Graph> {
    Products::default().conormal_k(factors)
}

pub fn lexicographic(g1: &Graph, g2: &Graph) -> Result<Graph> {
    Products::default().lexicographic(g1, g2)
}

pub fn strong(g1: &Graph, g2: &Graph) -> Result<Graph> {
    Products::default().strong(g1, g2)
}

pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    Products::default().join(g1, g2)
}

/// The fiber `𝒢(x)`: product vertices whose `factor` coordinate is `x`.
pub fn fiber(product: &Graph, factor: usize, x: usize) -> Result<VertexSet> {
    let index = product
        .product_index()
        .ok_or_else(|| Error::input("fiber of a graph that was not built as a product"))?;
    let orders = index.factor_orders();
    if factor >= orders.len() {
        return Err(Error::input(format!("factor {factor} out of range for a {}-factor product", orders.len())));
    }
    if x >= orders[factor] {
        return Err(Error::VertexOutOfRange { vertex: x, order: orders[factor] });
    }
    Ok((0..index.size()).filter(|&f| index.coordinate(f, factor) == x).collect())
}

/// Degree of `(i, j)` in `G1 * G2` from the factors alone:
/// `|G2|·deg(i) + (|G1| − deg(i))·deg(j)`.
pub fn conormal_degree(g1: &Graph, g2: &Graph, i: usize, j: usize) -> Result<usize> {
    let d1 = g1.degree(i)?;
    let d2 = g2.degree(j)?;
    Ok(g2.order() * d1 + (g1.order() - d1) * d2)
}

/// `N((i, j)) = N(i) × V(G2) ∪ N(i)^c × N(j)` as flat indices.
pub fn conormal_neighborhood(g1: &Graph, g2: &Graph, i: usize, j: usize) -> Result<VertexSet> {
    let n1 = g1.open_neighborhood(i)?;
    let n2 = g2.open_neighborhood(j)?;
    let m2 = g2.order();
    let mut out = Vec::new();
    for r in 0..g1.order() {
        if n1.contains(r) {
            out.extend((0..m2).map(|s| r * m2 + s));
        } else {
            out.extend(n2.iter().map(|s| r * m2 + s));
        }
    }
    Ok(out.into_iter().collect())
}

/// Connectivity of `G1 * G2` predicted from the factors: connected iff
/// `G2 = K_n (n ≥ 2)` with `G1` connected, or symmetrically, or both factors
/// have an edge and at least one has no isolated vertex.
pub fn predicted_connected(g1: &Graph, g2: &Graph) -> bool {
    let case1 = g2.order() >= 2 && g2.is_complete() && g1.is_connected();
    let case2 = g1.order() >= 2 && g1.is_complete() && g2.is_connected();
    let case3 = !g1.is_edgeless()
        && !g2.is_edgeless()
        && (g1.isolated_vertices().is_empty() || g2.isolated_vertices().is_empty());
    case1 || case2 || case3
}

/// Diameter of `G1 * G2` predicted by each applicable case (numbered 1–5).
///
/// Returns `None` unless both factors have order ≥ 2 and at least one is
/// non-complete. Case 1 is stated for a null second factor; by
/// commutativity it is also applied with the roles swapped.
pub fn predicted_diameters(g1: &Graph, g2: &Graph) -> Option<Vec<(u8, Diameter)>> {
    if g1.order() < 2 || g2.order() < 2 || (g1.is_complete() && g2.is_complete()) {
        return None;
    }
    let mut out = Vec::new();
    let two = Diameter::Finite(2);
    if g2.is_edgeless() {
        out.push((1, g1.diameter().max(two)));
    } else if g1.is_edgeless() {
        out.push((1, g2.diameter().max(two)));
    }
    let iso1 = !g1.isolated_vertices().is_empty();
    let iso2 = !g2.isolated_vertices().is_empty();
    if iso1 && iso2 {
        out.push((2, Diameter::Infinite));
    }
    if !iso1 && !iso2 {
        out.push((3, two));
    }
    let d2 = g2.diameter();
    if d2 <= two {
        out.push((4, two));
    }
    if d2 > two && !iso2 && !g1.is_edgeless() && iso1 {
        out.push((5, Diameter::Finite(3)));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, null, path, star};
    use crate::search::isomorphism;

    #[test]
    fn conormal_examples() {
        let k2 = complete(2).unwrap();
        assert_eq!(conormal(&k2, &k2).unwrap(), complete(4).unwrap());
        assert_eq!(conormal(&null(2).unwrap(), &null(3).unwrap()).unwrap(), null(6).unwrap());
        let (p3, p2) = (path(3).unwrap(), path(2).unwrap());
        let g = conormal(&p3, &p2).unwrap();
        // (centre of P3, endpoint of P2) = (1, 0) → flat index 2.
        assert_eq!(g.degree(2).unwrap(), 5);
        assert_eq!(conormal_degree(&p3, &p2, 1, 0).unwrap(), 5);
        assert_eq!(g.label(), Some("conormal(path:3,path:2)"));
    }

    #[test]
    fn conormal_k_examples() {
        let k2 = complete(2).unwrap();
        assert_eq!(conormal_k(&[k2.clone(), k2.clone(), k2.clone()]).unwrap(), complete(8).unwrap());
        let (p2, p3) = (path(2).unwrap(), path(3).unwrap());
        assert_eq!(conormal_k(&[p2.clone(), p3.clone()]).unwrap(), conormal(&p2, &p3).unwrap());
        assert!(conormal_k(&[p2.clone()]).is_err());
        assert!(conormal_k(&[p2, null(1).unwrap()]).is_err());
    }

    #[test]
    fn conormal_k_equals_iterated_binary() {
        let (a, b, c) = (path(3).unwrap(), null(2).unwrap(), star(2).unwrap());
        let k = conormal_k(&[a.clone(), b.clone(), c.clone()]).unwrap();
        let it = conormal(&conormal(&a, &b).unwrap(), &c).unwrap();
        assert_eq!(k, it);
    }

    #[test]
    fn lexicographic_examples() {
        let (n2, p2) = (null(2).unwrap(), path(2).unwrap());
        let g = lexicographic(&n2, &p2).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        let g = lexicographic(&p2, &n2).unwrap();
        assert!(isomorphism(&g, &cycle(4).unwrap()).is_some());
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn lexicographic_equals_conormal_for_complete_first_factor() {
        let g2 = path(3).unwrap();
        for m in 2..=3 {
            let km = complete(m).unwrap();
            assert_eq!(lexicographic(&km, &g2).unwrap(), conormal(&km, &g2).unwrap());
        }
    }

    #[test]
    fn strong_examples() {
        assert_eq!(strong(&complete(2).unwrap(), &complete(3).unwrap()).unwrap(), complete(6).unwrap());
        assert_eq!(strong(&path(2).unwrap(), &path(2).unwrap()).unwrap(), complete(4).unwrap());
    }

    #[test]
    fn join_examples() {
        let g = join(&null(1).unwrap(), &null(4).unwrap()).unwrap();
        assert_eq!(g, star(4).unwrap());
        let g = join(&null(2).unwrap(), &null(2).unwrap()).unwrap();
        assert!(isomorphism(&g, &cycle(4).unwrap()).is_some());
        assert_eq!(join(&complete(2).unwrap(), &complete(3).unwrap()).unwrap(), complete(5).unwrap());
    }

    #[test]
    fn size_cap() {
        let p = Products { cap: 10 };
        let err = p.conormal(&path(3).unwrap(), &path(4).unwrap()).unwrap_err();
        assert_eq!(err, Error::SizeCap { requested: 12, cap: 10 });
        assert!(p.join(&path(6).unwrap(), &path(6).unwrap()).is_err());
    }

    #[test]
    fn fibers() {
        let g = conormal(&path(3).unwrap(), &path(4).unwrap()).unwrap();
        assert_eq!(fiber(&g, 0, 0).unwrap(), VertexSet::from([0, 1, 2, 3]));
        let (sub, _) = g.induced_subgraph(&fiber(&g, 0, 0).unwrap()).unwrap();
        assert!(isomorphism(&sub, &path(4).unwrap()).is_some());
        let k2 = complete(2).unwrap();
        let g3 = conormal_k(&[k2.clone(), k2.clone(), k2]).unwrap();
        assert_eq!(fiber(&g3, 1, 1).unwrap(), VertexSet::from([2, 3, 6, 7]));
        assert!(fiber(&path(3).unwrap(), 0, 0).is_err());
        assert!(fiber(&g, 2, 0).is_err());
        assert!(fiber(&g, 0, 3).is_err());
    }

    #[test]
    fn product_index_roundtrip() {
        let idx = ProductIndex::new(vec![3, 2, 4]);
        for f in 0..idx.size() {
            let t = idx.tuple(f);
            assert_eq!(idx.flat(&t), f);
            for (k, &c) in t.iter().enumerate() {
                assert_eq!(idx.coordinate(f, k), c);
            }
        }
    }

    #[test]
    fn diameter_of_path_products() {
        let p4 = path(4).unwrap();
        assert_eq!(conormal(&p4, &p4).unwrap().diameter(), Diameter::Finite(2));
    }

    #[test]
    fn join_with_dominating_vertex_splits_product() {
        // G1 = star(2) has dominating vertex 0; G1*G2 is (G1-0)*G2 joined
        // with the fiber over 0, under the map sending (0,j) last.
        let g1 = star(2).unwrap();
        let g2 = path(3).unwrap();
        let whole = conormal(&g1, &g2).unwrap();
        let rest = conormal(&g1.remove_vertex(0).unwrap(), &g2).unwrap();
        let (fib, _) = whole.induced_subgraph(&fiber(&whole, 0, 0).unwrap()).unwrap();
        let joined = join(&rest, &fib).unwrap();
        let m2 = g2.order();
        let images: Vec<usize> = (0..whole.order())
            .map(|f| if f < m2 { rest.order() + f } else { f - m2 })
            .collect();
        let map = crate::Permutation::from_images(images).unwrap();
        assert!(whole.is_isomorphism(&joined, &map));
    }
}
