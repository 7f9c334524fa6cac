//! Backtracking kernel shared by isomorphism testing, automorphism groups
//! and fixing-set checks.
//!
//! Vertices carry ordered colours. Refinement splits every colour class by
//! the number of neighbours each vertex has in every class, ordering the new
//! classes by that count vector, until nothing splits. The procedure only
//! looks at colours, never at vertex labels, so any colour-preserving
//! isomorphism survives refinement. Searches individualise one vertex of the
//! first non-singleton class on each side and recurse.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::TwinKind;
use crate::{Error, Graph, Limits, Permutation, Result};

pub(crate) struct Counter {
    used: u64,
    limit: u64,
}

impl Counter {
    pub(crate) fn new(limits: &Limits) -> Self {
        Counter { used: 0, limit: limits.max_search_nodes }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::Budget { budget: "max-search-nodes", limit: self.limit as u128 });
        }
        Ok(())
    }
}

/// Twin class id per vertex (false and true twins merged; a vertex lies in
/// at most one non-trivial class of either kind).
pub(crate) struct TwinIds(Vec<usize>);

impl TwinIds {
    pub(crate) fn new(g: &Graph) -> Self {
        let mut id: Vec<usize> = (0..g.order()).collect();
        for kind in [TwinKind::False, TwinKind::True] {
            for class in g.twin_partition(kind).nontrivial() {
                let root = class.as_slice()[0];
                for v in class.iter() {
                    id[v] = root;
                }
            }
        }
        TwinIds(id)
    }

    pub(crate) fn same(&self, a: usize, b: usize) -> bool {
        self.0[a] == self.0[b]
    }
}

pub(crate) type Colors = Vec<u32>;

/// `fixed[i]` gets colour `i`; every other vertex shares the next colour.
pub(crate) fn initial(n: usize, fixed: &[usize]) -> Colors {
    let mut c = vec![fixed.len() as u32; n];
    for (i, &v) in fixed.iter().enumerate() {
        c[v] = i as u32;
    }
    c
}

pub(crate) fn color_count(c: &Colors) -> usize {
    c.iter().max().map_or(0, |&m| m as usize + 1)
}

/// Gives `v` its own colour, placed just before the rest of its old class.
pub(crate) fn individualize(c: &Colors, v: usize) -> Colors {
    let cv = c[v];
    c.iter()
        .enumerate()
        .map(|(u, &x)| match x {
            _ if u == v => cv,
            x if x < cv => x,
            x => x + 1,
        })
        .collect()
}

fn signatures(g: &Graph, c: &Colors, m: usize) -> Vec<u32> {
    let n = g.order();
    let stride = g.stride();
    let mut masks = vec![0u64; m * stride];
    for (v, &col) in c.iter().enumerate() {
        masks[col as usize * stride + v / 64] |= 1 << (v % 64);
    }
    let mut sig = Vec::with_capacity(n * (m + 1));
    for v in 0..n {
        sig.push(c[v]);
        let row = g.row(v);
        for col in 0..m {
            let mask = &masks[col * stride..(col + 1) * stride];
            let count: u32 = row.iter().zip(mask).map(|(a, b)| (a & b).count_ones()).sum();
            sig.push(count);
        }
    }
    sig
}

fn sorted_by_sig(sig: &[u32], n: usize, w: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by(|&a, &b| sig[a * w..(a + 1) * w].cmp(&sig[b * w..(b + 1) * w]));
    order
}

/// Refines two colourings in lockstep. Returns false as soon as their
/// colour statistics disagree, which rules out any colour-preserving
/// isomorphism between them.
pub(crate) fn refine_pair(g: &Graph, cg: &mut Colors, h: &Graph, ch: &mut Colors) -> bool {
    let n = g.order();
    loop {
        let m = color_count(cg);
        if m == n {
            return true;
        }
        let w = m + 1;
        let sg = signatures(g, cg, m);
        let sh = signatures(h, ch, m);
        let og = sorted_by_sig(&sg, n, w);
        let oh = sorted_by_sig(&sh, n, w);
        let mut next = 0u32;
        for i in 0..n {
            let a = &sg[og[i] * w..(og[i] + 1) * w];
            let b = &sh[oh[i] * w..(oh[i] + 1) * w];
            if a != b {
                return false;
            }
            if i > 0 && a != &sg[og[i - 1] * w..og[i - 1] * w + w] {
                next += 1;
            }
            cg[og[i]] = next;
            ch[oh[i]] = next;
        }
        if next as usize + 1 == m {
            return true;
        }
    }
}

pub(crate) fn refine(g: &Graph, c: &mut Colors) {
    let n = g.order();
    loop {
        let m = color_count(c);
        if m == n {
            return;
        }
        let w = m + 1;
        let sg = signatures(g, c, m);
        let order = sorted_by_sig(&sg, n, w);
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && sg[order[i] * w..(order[i] + 1) * w] != sg[order[i - 1] * w..order[i - 1] * w + w] {
                next += 1;
            }
            c[order[i]] = next;
        }
        if next as usize + 1 == m {
            return;
        }
    }
}

/// First colour (in colour order) held by more than one vertex.
pub(crate) fn first_nonsingleton(c: &Colors) -> Option<u32> {
    let m = color_count(c);
    let mut sizes = vec![0usize; m];
    for &x in c {
        sizes[x as usize] += 1;
    }
    sizes.iter().position(|&s| s > 1).map(|p| p as u32)
}

/// Searches for an isomorphism `g → h` carrying colour classes of `cg` onto
/// the same classes of `ch`. Candidates are tried in ascending vertex order,
/// so the first mapping found is deterministic. Candidates that are twins of
/// an already tried candidate in `h` are skipped: the twin transposition is
/// an automorphism of `h` preserving `ch`, so both branches are equivalent.
pub(crate) fn find_mapping(
    g: &Graph,
    h: &Graph,
    mut cg: Colors,
    mut ch: Colors,
    twins_h: &TwinIds,
    counter: &mut Counter,
) -> Result<Option<Permutation>> {
    counter.tick()?;
    if !refine_pair(g, &mut cg, h, &mut ch) {
        return Ok(None);
    }
    let n = g.order();
    let Some(target) = first_nonsingleton(&cg) else {
        let mut at = vec![0usize; n];
        for (w, &col) in ch.iter().enumerate() {
            at[col as usize] = w;
        }
        let map = Permutation::from_images_unchecked(cg.iter().map(|&col| at[col as usize]).collect());
        return Ok(g.is_isomorphism(h, &map).then_some(map));
    };
    let v = (0..n).find(|&u| cg[u] == target).expect("target colour is non-empty");
    let cg_v = individualize(&cg, v);
    let mut tried: Vec<usize> = Vec::new();
    for w in (0..n).filter(|&w| ch[w] == target) {
        if tried.iter().any(|&t| twins_h.same(t, w)) {
            continue;
        }
        tried.push(w);
        if let Some(p) = find_mapping(g, h, cg_v.clone(), individualize(&ch, w), twins_h, counter)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

pub(crate) fn isomorphism_with(g: &Graph, h: &Graph, limits: &Limits) -> Result<Option<Permutation>> {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut counter = Counter::new(limits);
    find_mapping(g, h, vec![0; n], vec![0; n], &TwinIds::new(h), &mut counter)
}

#[cfg(test)]
pub(crate) fn isomorphism(g: &Graph, h: &Graph) -> Option<Permutation> {
    isomorphism_with(g, h, &Limits::default()).unwrap()
}

/// Pointwise stabilizer of `fixed` as a base with transversals.
///
/// Level `i` holds the orbit of `base[i]` under the stabilizer of
/// `fixed ∪ base[..i]`, each orbit point paired with a group element carrying
/// `base[i]` to it. The group order is the product of the orbit lengths.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    n: usize,
    fixed: Vec<usize>,
    base: Vec<usize>,
    levels: Vec<Vec<(usize, Permutation)>>,
    generators: Vec<Permutation>,
    order: u128,
}

impl StabilizerChain {
    pub(crate) fn build(g: &Graph, fixed: &[usize], twins: &TwinIds, counter: &mut Counter) -> Result<Self> {
        let n = g.order();
        let mut prefix = fixed.to_vec();
        let mut chain = StabilizerChain {
            n,
            fixed: fixed.to_vec(),
            base: Vec::new(),
            levels: Vec::new(),
            generators: Vec::new(),
            order: 1,
        };
        loop {
            counter.tick()?;
            let mut c = initial(n, &prefix);
            refine(g, &mut c);
            let Some(target) = first_nonsingleton(&c) else { break };
            let cell: Vec<usize> = (0..n).filter(|&v| c[v] == target).collect();
            let b = cell[0];
            let cb = individualize(&c, b);
            let mut trans: Vec<Option<Permutation>> = vec![None; n];
            trans[b] = Some(Permutation::identity(n));
            let mut orbit = vec![b];
            let mut gens: Vec<Permutation> = Vec::new();
            for &w in &cell[1..] {
                if trans[w].is_some() {
                    continue;
                }
                let found = if twins.same(b, w) {
                    Some(Permutation::transposition(n, b, w))
                } else {
                    find_mapping(g, g, cb.clone(), individualize(&c, w), twins, counter)?
                };
                let Some(p) = found else { continue };
                gens.push(p);
                let mut i = 0;
                while i < orbit.len() {
                    let x = orbit[i];
                    for gen in &gens {
                        let y = gen.apply(x);
                        if trans[y].is_none() {
                            trans[y] = Some(trans[x].as_ref().expect("orbit point has a transversal").then(gen));
                            orbit.push(y);
                        }
                    }
                    i += 1;
                }
            }
            orbit.sort_unstable();
            chain.order = chain
                .order
                .checked_mul(orbit.len() as u128)
                .ok_or(Error::Budget { budget: "group-order-width", limit: u128::MAX })?;
            chain.levels.push(orbit.iter().map(|&x| (x, trans[x].take().expect("orbit point"))).collect());
            chain.generators.extend(gens);
            chain.base.push(b);
            prefix.push(b);
        }
        Ok(chain)
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// The pointwise-fixed set this chain stabilizes.
    pub fn fixed(&self) -> &[usize] {
        &self.fixed
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Automorphisms found while building the chain; together they generate
    /// the whole stabilizer.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Orbit of `base()[level]` under the stabilizer of everything before it.
    pub fn level_orbit(&self, level: usize) -> impl Iterator<Item = usize> + '_ {
        self.levels[level].iter().map(|(v, _)| *v)
    }

    /// Orbit id per vertex (the least vertex of its orbit).
    pub fn orbit_roots(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gen in &self.generators {
            for v in 0..self.n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gen.apply(v)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    /// Every group element, as `t_1 ∘ ... ∘ t_k` over the transversals.
    pub(crate) fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.n)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.len());
            for (_, t) in level {
                for e in &acc {
                    next.push(e.then(t));
                }
            }
            acc = next;
        }
        acc
    }
}
