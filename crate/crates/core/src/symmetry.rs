//! Automorphism groups, orbits and stabilizers, plus the structured
//! automorphisms of co-normal products.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, TwinKind, VertexSet};
use crate::products::Products;
use crate::search::{isomorphism_with, Counter, TwinIds};
use crate::{Error, Limits, Permutation, Result};

pub use crate::search::StabilizerChain;

/// Stabilizer chain of the pointwise stabilizer of `fixed` in `Aut(g)`.
pub fn stabilizer_chain(g: &Graph, fixed: &VertexSet, limits: &Limits) -> Result<StabilizerChain> {
    fixed.check_range(g.order())?;
    StabilizerChain::build(g, fixed.as_slice(), &TwinIds::new(g), &mut Counter::new(limits))
}

/// An isomorphism `g → h`, if one exists. The witness is the first one met
/// by the backtracking order, so repeated calls agree.
pub fn are_isomorphic(g: &Graph, h: &Graph, limits: &Limits) -> Result<Option<Permutation>> {
    isomorphism_with(g, h, limits)
}

/// Partition of the vertex set into orbits, ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub orbits: Vec<VertexSet>,
}

impl OrbitPartition {
    fn from_roots(roots: &[usize]) -> Self {
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; roots.len()];
        for (v, &r) in roots.iter().enumerate() {
            if slot[r] == usize::MAX {
                slot[r] = orbits.len();
                orbits.push(Vec::new());
            }
            orbits[slot[r]].push(v);
        }
        OrbitPartition { orbits: orbits.into_iter().map(VertexSet::from).collect() }
    }

    pub fn orbit_of(&self, v: usize) -> Option<&VertexSet> {
        self.orbits.iter().find(|o| o.contains(v))
    }

    pub fn largest(&self) -> usize {
        self.orbits.iter().map(VertexSet::len).max().unwrap_or(0)
    }
}

/// A fully enumerated automorphism group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    n: usize,
    /// Sorted lexicographically by image; the identity comes first.
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl AutGroup {
    fn from_sorted(n: usize, elements: Vec<Permutation>) -> Self {
        let generators = greedy_generators(n, &elements);
        AutGroup { n, elements, generators }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Greedy generating set: each element not yet in the closure of the
    /// earlier choices, scanning elements in order.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn orbits(&self) -> OrbitPartition {
        let mut roots: Vec<usize> = (0..self.n).collect();
        for p in &self.elements {
            for v in 0..self.n {
                let w = p.apply(v);
                roots[w] = roots[w].min(v);
            }
        }
        // Every element is present, so one pass already reaches each orbit's least vertex.
        OrbitPartition::from_roots(&roots)
    }

    /// Elements fixing every vertex of `fixed`.
    pub fn stabilizer(&self, fixed: &VertexSet) -> Result<AutGroup> {
        fixed.check_range(self.n)?;
        let els = self.elements.iter().filter(|p| fixed.iter().all(|v| p.fixes(v))).cloned().collect();
        Ok(AutGroup::from_sorted(self.n, els))
    }
}

fn greedy_generators(n: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut closure: BTreeSet<Permutation> = BTreeSet::from([Permutation::identity(n)]);
    let mut gens: Vec<Permutation> = Vec::new();
    for e in elements {
        if closure.contains(e) {
            continue;
        }
        gens.push(e.clone());
        let mut queue: Vec<Permutation> = closure.iter().cloned().collect();
        while let Some(x) = queue.pop() {
            for g in &gens {
                let y = x.then(g);
                if closure.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
    }
    gens
}

/// Enumerates `Aut(g)` completely. Fails with a budget error when the group
/// has more than `limits.max_group_order` elements.
pub fn automorphisms(g: &Graph, limits: &Limits) -> Result<AutGroup> {
    let chain = stabilizer_chain(g, &VertexSet::new(), limits)?;
    if chain.order() > limits.max_group_order {
        return Err(Error::Budget { budget: "max-group-order", limit: limits.max_group_order });
    }
    let mut els = chain.elements();
    els.sort_unstable();
    Ok(AutGroup::from_sorted(g.order(), els))
}

pub fn group_order(g: &Graph, limits: &Limits) -> Result<u128> {
    Ok(stabilizer_chain(g, &VertexSet::new(), limits)?.order())
}

/// `|Stab(F)|` without enumerating the group.
pub fn stabilizer_order(g: &Graph, fixed: &VertexSet, limits: &Limits) -> Result<u128> {
    Ok(stabilizer_chain(g, fixed, limits)?.order())
}

/// Orbits of `Aut(g)`, computed from generators (no enumeration).
pub fn orbits(g: &Graph, limits: &Limits) -> Result<OrbitPartition> {
    let chain = stabilizer_chain(g, &VertexSet::new(), limits)?;
    Ok(OrbitPartition::from_roots(&chain.orbit_roots()))
}

pub fn is_rigid(g: &Graph, limits: &Limits) -> Result<bool> {
    Ok(group_order(g, limits)? == 1)
}

pub fn is_fixed_vertex(g: &Graph, v: usize, limits: &Limits) -> Result<bool> {
    g.degree(v)?;
    Ok(orbits(g, limits)?.orbit_of(v).is_some_and(|o| o.len() == 1))
}

/// `(i, j) ↦ (α(i), β(j))` on the flat index of an `m1 × m2` product.
pub fn pair_map(alpha: &Permutation, beta: &Permutation) -> Permutation {
    let m2 = beta.len();
    let images = (0..alpha.len() * m2).map(|f| alpha.apply(f / m2) * m2 + beta.apply(f % m2)).collect();
    Permutation::from_images_unchecked(images)
}

/// Splits a product permutation into `(α, β)` when it acts coordinate-wise.
pub fn split_pair(p: &Permutation, m1: usize, m2: usize) -> Option<(Permutation, Permutation)> {
    if p.len() != m1 * m2 {
        return None;
    }
    let alpha: Vec<usize> = (0..m1).map(|i| p.apply(i * m2) / m2).collect();
    let beta: Vec<usize> = (0..m2).map(|j| p.apply(j) % m2).collect();
    let alpha = Permutation::from_images(alpha).ok()?;
    let beta = Permutation::from_images(beta).ok()?;
    (pair_map(&alpha, &beta) == *p).then_some((alpha, beta))
}

fn verified(product: &Graph, p: Permutation) -> Result<Permutation> {
    if product.is_automorphism(&p) {
        Ok(p)
    } else {
        Err(Error::input(format!("{p} is not an automorphism of the product")))
    }
}

fn require_automorphism(g: &Graph, p: &Permutation, what: &str) -> Result<()> {
    if p.len() != g.order() {
        return Err(Error::input(format!("{what} has degree {} but the factor has order {}", p.len(), g.order())));
    }
    if !g.is_automorphism(p) {
        return Err(Error::input(format!("{what} = {p} is not an automorphism of its factor")));
    }
    Ok(())
}

/// `λ(i, j) = (α(i), β(j))` for `α ∈ Aut(G1)`, `β ∈ Aut(G2)`, checked
/// against `G1 * G2`.
pub fn pair_automorphism(g1: &Graph, g2: &Graph, alpha: &Permutation, beta: &Permutation) -> Result<Permutation> {
    require_automorphism(g1, alpha, "alpha")?;
    require_automorphism(g2, beta, "beta")?;
    let product = conormal_unbounded(g1, g2)?;
    verified(&product, pair_map(alpha, beta))
}

/// `λ(i, j) = (ψ(j), φ(i))` for isomorphisms `φ: G1 → G2`, `ψ: G2 → G1`.
pub fn flip_automorphism(g1: &Graph, g2: &Graph, phi: &Permutation, psi: &Permutation) -> Result<Permutation> {
    if g1.order() != g2.order() || !g1.is_isomorphism(g2, phi) || !g2.is_isomorphism(g1, psi) {
        return Err(Error::input("flip needs isomorphic factors and isomorphisms in both directions"));
    }
    let m = g1.order();
    let images = (0..m * m).map(|f| psi.apply(f % m) * m + phi.apply(f / m)).collect();
    verified(&conormal_unbounded(g1, g2)?, Permutation::from_images_unchecked(images))
}

/// Applies `ψ ∈ Aut(G2)` on the fiber over `anchor` and the identity
/// elsewhere. Returns the map when it is an automorphism of `G1 * G2`.
pub fn rotation_automorphism(g1: &Graph, g2: &Graph, anchor: usize, psi: &Permutation) -> Result<Option<Permutation>> {
    g1.degree(anchor)?;
    require_automorphism(g2, psi, "psi")?;
    let p = rotation_map(g1.order(), anchor, psi);
    Ok(conormal_unbounded(g1, g2)?.is_automorphism(&p).then_some(p))
}

pub(crate) fn rotation_map(m1: usize, anchor: usize, psi: &Permutation) -> Permutation {
    let m2 = psi.len();
    let images = (0..m1 * m2)
        .map(|f| if f / m2 == anchor { anchor * m2 + psi.apply(f % m2) } else { f })
        .collect();
    Permutation::from_images_unchecked(images)
}

fn conormal_unbounded(g1: &Graph, g2: &Graph) -> Result<Graph> {
    Products { cap: usize::MAX }.conormal(g1, g2)
}

/// Conditions (1)–(6) under which swapping product vertices `(i, j)` and
/// `(k, l)` is claimed to be an automorphism of `G1 * G2`.
pub fn interchange_conditions(g1: &Graph, g2: &Graph, (i, j): (usize, usize), (k, l): (usize, usize)) -> Vec<u8> {
    let dom1 = |v| g1.deg(v) + 1 == g1.order();
    let dom2 = |v| g2.deg(v) + 1 == g2.order();
    let f1 = g1.are_twins(i, k, TwinKind::False);
    let f2 = g2.are_twins(j, l, TwinKind::False);
    let t1 = g1.are_twins(i, k, TwinKind::True);
    let t2 = g2.are_twins(j, l, TwinKind::True);
    let mut out = Vec::new();
    let checks = [
        i == k && j != l && f2,
        i != k && j == l && f1,
        i == k && dom1(i) && j != l && t2,
        i != k && j == l && dom2(j) && t1,
        i != k && j != l && f1 && f2,
        i != k && dom1(i) && dom1(k) && j != l && dom2(j) && dom2(l),
    ];
    for (c, ok) in checks.iter().enumerate() {
        if *ok {
            out.push(c as u8 + 1);
        }
    }
    out
}

/// A pair of product vertices whose swap is an automorphism, or is claimed
/// to be by one of the interchange conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interchange {
    pub a: usize,
    pub b: usize,
    /// Conditions (1)–(6) that hold for the pair.
    pub conditions: Vec<u8>,
    /// Whether the transposition really is an automorphism.
    pub is_automorphism: bool,
}

/// Every unordered pair of `G1 * G2` vertices that is an interchange or
/// satisfies one of the interchange conditions, in lexicographic order.
pub fn interchange_pairs(g1: &Graph, g2: &Graph, limits: &Limits) -> Result<Vec<Interchange>> {
    let product = Products::from(limits).conormal(g1, g2)?;
    let (n, m2) = (product.order(), g2.order());
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let conditions = interchange_conditions(g1, g2, (a / m2, a % m2), (b / m2, b % m2));
            let is_automorphism = product.is_automorphism(&Permutation::transposition(n, a, b));
            if is_automorphism || !conditions.is_empty() {
                out.push(Interchange { a, b, conditions, is_automorphism });
            }
        }
    }
    Ok(out)
}

fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a tree")
}

/// First rigid tree on `n ≥ 2` vertices, scanning Prüfer sequences in
/// lexicographic order.
pub fn first_rigid_tree(n: usize, limits: &Limits) -> Result<Option<Graph>> {
    if n < 2 {
        return Err(Error::input("trees searched here need at least 2 vertices"));
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        let t = prufer_tree(n, &seq);
        if is_rigid(&t, limits)? {
            return Ok(Some(t.with_label(format!("rigidtree:{n}"))));
        }
        let Some(pos) = (0..len).rev().find(|&p| seq[p] + 1 < n) else {
            return Ok(None);
        };
        seq[pos] += 1;
        seq[pos + 1..].iter_mut().for_each(|s| *s = 0);
    }
}

/// First rigid graph on `n` vertices without a dominating vertex. Edge
/// subsets are scanned as bitmasks in increasing order, bit `k` standing for
/// the `k`-th pair `(u, v)`, `u < v`, in lexicographic order.
pub fn first_rigid_graph(n: usize, limits: &Limits) -> Result<Option<Graph>> {
    if !(2..=8).contains(&n) {
        return Err(Error::input("rigid graph search supports 2..=8 vertices"));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges)?;
        if g.dominating_vertices().is_empty() && is_rigid(&g, limits)? {
            return Ok(Some(g.with_label(format!("rigid:{n}"))));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, null, path, star};
    use crate::products::conormal;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(automorphisms(&complete(4).unwrap(), &lim()).unwrap().order(), 24);
        assert_eq!(automorphisms(&path(4).unwrap(), &lim()).unwrap().order(), 2);
        let g = conormal(&path(4).unwrap(), &path(5).unwrap()).unwrap();
        assert_eq!(automorphisms(&g, &lim()).unwrap().order(), 4);
    }

    #[test]
    fn group_layout() {
        let a = automorphisms(&cycle(4).unwrap(), &lim()).unwrap();
        assert!(a.elements()[0].is_identity());
        assert!(a.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(!a.generators().is_empty());
    }

    #[test]
    fn budget_error_names_the_budget() {
        let l = Limits { max_group_order: 100, ..lim() };
        let err = automorphisms(&complete(6).unwrap(), &l).unwrap_err();
        assert_eq!(err, Error::Budget { budget: "max-group-order", limit: 100 });
        let l = Limits { max_search_nodes: 3, ..lim() };
        assert!(group_order(&cycle(9).unwrap(), &l).unwrap_err().is_budget());
    }

    #[test]
    fn orbit_examples() {
        let o = orbits(&cycle(5).unwrap(), &lim()).unwrap();
        assert_eq!(o.orbits, vec![VertexSet::from([0, 1, 2, 3, 4])]);
        let o = orbits(&star(3).unwrap(), &lim()).unwrap();
        assert_eq!(o.orbits, vec![VertexSet::from([0]), VertexSet::from([1, 2, 3])]);
        let o = orbits(&path(5).unwrap(), &lim()).unwrap();
        assert_eq!(o.orbits, vec![VertexSet::from([0, 4]), VertexSet::from([1, 3]), VertexSet::from([2])]);
        let a = automorphisms(&path(5).unwrap(), &lim()).unwrap();
        assert_eq!(a.orbits(), o);
    }

    #[test]
    fn stabilizer_examples() {
        let a = automorphisms(&path(5).unwrap(), &lim()).unwrap();
        assert_eq!(a.stabilizer(&VertexSet::new()).unwrap(), a);
        let a = automorphisms(&path(4).unwrap(), &lim()).unwrap();
        assert!(a.stabilizer(&VertexSet::from([0])).unwrap().is_trivial());
        let a = automorphisms(&cycle(4).unwrap(), &lim()).unwrap();
        let s = a.stabilizer(&VertexSet::from([0])).unwrap();
        assert_eq!(s.order(), 2);
        assert!(s.elements()[1].fixes(2));
        assert!(a.stabilizer(&VertexSet::from([4])).is_err());
    }

    #[test]
    fn rigidity() {
        assert!(!is_rigid(&path(3).unwrap(), &lim()).unwrap());
        let t = first_rigid_tree(7, &lim()).unwrap().unwrap();
        assert!(is_rigid(&t, &lim()).unwrap());
        assert_eq!(t.order(), 7);
        // No tree on 6 or fewer vertices is rigid (beyond the trivial one).
        for n in 2..=6 {
            assert!(first_rigid_tree(n, &lim()).unwrap().is_none(), "n = {n}");
        }
        let g = conormal(&t, &t).unwrap();
        assert_eq!(group_order(&g, &lim()).unwrap(), 2);
        assert!(is_fixed_vertex(&star(3).unwrap(), 0, &lim()).unwrap());
        assert!(!is_fixed_vertex(&star(3).unwrap(), 1, &lim()).unwrap());
    }

    #[test]
    fn rigid_graph_search() {
        assert!(first_rigid_graph(5, &lim()).unwrap().is_none());
        let g = first_rigid_graph(6, &lim()).unwrap().unwrap();
        assert!(is_rigid(&g, &lim()).unwrap());
        assert!(g.dominating_vertices().is_empty());
    }

    #[test]
    fn pair_automorphisms() {
        let (p4, p5) = (path(4).unwrap(), path(5).unwrap());
        let id = pair_automorphism(&p4, &p5, &Permutation::identity(4), &Permutation::identity(5)).unwrap();
        assert!(id.is_identity());
        let rev: Permutation = "[3,2,1,0]".parse().unwrap();
        let lam = pair_automorphism(&p4, &p5, &rev, &Permutation::identity(5)).unwrap();
        assert!(conormal(&p4, &p5).unwrap().is_automorphism(&lam));
        assert!(pair_automorphism(&p4, &p5, &Permutation::identity(5), &Permutation::identity(5)).is_err());
        assert!(pair_automorphism(&p4, &p5, &"[1,0,2,3]".parse().unwrap(), &Permutation::identity(5)).is_err());
        assert_eq!(split_pair(&lam, 4, 5), Some((rev, Permutation::identity(5))));
    }

    #[test]
    fn flips() {
        let p2 = path(2).unwrap();
        let id = Permutation::identity(2);
        let f = flip_automorphism(&p2, &p2, &id, &id).unwrap();
        assert_eq!(f.images(), &[0, 2, 1, 3]);
        let t = first_rigid_tree(7, &lim()).unwrap().unwrap();
        let id7 = Permutation::identity(7);
        let f = flip_automorphism(&t, &t, &id7, &id7).unwrap();
        let group = automorphisms(&conormal(&t, &t).unwrap(), &lim()).unwrap();
        assert_eq!(group.elements(), &[Permutation::identity(49), f.clone()]);
        let sq = f.then(&f);
        assert!(split_pair(&sq, 7, 7).is_some());
        assert!(flip_automorphism(&path(3).unwrap(), &star(3).unwrap(), &Permutation::identity(3), &Permutation::identity(4)).is_err());
    }

    #[test]
    fn rotations() {
        let rev3: Permutation = "[2,1,0]".parse().unwrap();
        let rot = rotation_automorphism(&star(2).unwrap(), &path(3).unwrap(), 0, &rev3).unwrap();
        assert!(rot.is_some());
        let rev4: Permutation = "[3,2,1,0]".parse().unwrap();
        assert!(rotation_automorphism(&path(4).unwrap(), &path(4).unwrap(), 1, &rev4).unwrap().is_none());
        let swap = Permutation::transposition(3, 0, 2);
        assert!(rotation_automorphism(&path(4).unwrap(), &null(3).unwrap(), 1, &swap).unwrap().is_some());
        assert!(rotation_automorphism(&path(4).unwrap(), &null(3).unwrap(), 9, &swap).is_err());
    }

    #[test]
    fn interchanges() {
        let p2 = path(2).unwrap();
        let pairs = interchange_pairs(&p2, &p2, &lim()).unwrap();
        assert_eq!(pairs.len(), 6);
        assert!(pairs.iter().all(|p| p.is_automorphism && !p.conditions.is_empty()));
        assert!(pairs.iter().filter(|p| p.a / 2 != p.b / 2 && p.a % 2 != p.b % 2).all(|p| p.conditions.contains(&6)));

        let pairs = interchange_pairs(&path(4).unwrap(), &null(2).unwrap(), &lim()).unwrap();
        let got: Vec<(usize, usize)> = pairs.iter().map(|p| (p.a, p.b)).collect();
        assert_eq!(got, vec![(0, 1), (2, 3), (4, 5), (6, 7)]);
        assert!(pairs.iter().all(|p| p.is_automorphism && p.conditions == vec![1]));

        assert!(interchange_pairs(&path(4).unwrap(), &path(4).unwrap(), &lim()).unwrap().is_empty());
    }
}
