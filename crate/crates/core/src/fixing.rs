//! Fixing sets and exact fixing numbers.
//!
//! The search never enumerates the automorphism group. It works on
//! stabilizer chains: a set `F` is fixing exactly when the chain for the
//! pointwise stabilizer of `F` has order 1.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, TwinKind, VertexSet};
use crate::search::{find_mapping, first_nonsingleton, individualize, initial, refine, Counter, TwinIds};
use crate::symmetry::StabilizerChain;
use crate::{Error, Limits, Permutation, Result};

/// Outcome of [`fixing_number`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixingResult {
    pub fix: usize,
    /// The lexicographically least fixing set of size `fix`.
    pub witness: VertexSet,
    /// `|Aut(G)|` before anything is fixed.
    pub group_order: u128,
}

/// A non-identity automorphism fixing every vertex of `fixed`, or `None`
/// when `fixed` is a fixing set.
pub fn surviving_automorphism(g: &Graph, fixed: &VertexSet, limits: &Limits) -> Result<Option<Permutation>> {
    fixed.check_range(g.order())?;
    let n = g.order();
    let twins = TwinIds::new(g);
    let mut counter = Counter::new(limits);
    let mut prefix = fixed.as_slice().to_vec();
    loop {
        counter.tick()?;
        let mut c = initial(n, &prefix);
        refine(g, &mut c);
        let Some(target) = first_nonsingleton(&c) else { return Ok(None) };
        let cell: Vec<usize> = (0..n).filter(|&v| c[v] == target).collect();
        let b = cell[0];
        let cb = individualize(&c, b);
        for &w in &cell[1..] {
            if twins.same(b, w) {
                return Ok(Some(Permutation::transposition(n, b, w)));
            }
            if let Some(p) = find_mapping(g, g, cb.clone(), individualize(&c, w), &twins, &mut counter)? {
                return Ok(Some(p));
            }
        }
        // b is fixed by the whole stabilizer, so fixing it changes nothing.
        prefix.push(b);
    }
}

pub fn is_fixing_set(g: &Graph, fixed: &VertexSet, limits: &Limits) -> Result<bool> {
    Ok(surviving_automorphism(g, fixed, limits)?.is_none())
}

/// All but the largest member of every non-trivial twin class.
///
/// Any fixing set misses at most one vertex of a twin class, since swapping
/// two missed twins is an automorphism. A minimum fixing set misses exactly
/// one, and swapping it with the largest member gives a smaller set in
/// lexicographic order, so the least minimum fixing set contains this set.
pub fn forced_twin_vertices(g: &Graph) -> VertexSet {
    let mut out = VertexSet::new();
    for kind in [TwinKind::False, TwinKind::True] {
        for class in g.twin_partition(kind).nontrivial() {
            let s = class.as_slice();
            for &v in &s[..s.len() - 1] {
                out.insert(v);
            }
        }
    }
    out
}

/// Exact fixing number with the lexicographically least witness.
///
/// The forced twin vertices are taken first. The remaining picks are chosen
/// in increasing order, each one the least vertex of a non-trivial orbit of
/// the current stabilizer. Any other choice can be moved by a stabilizer
/// element onto a lexicographically smaller fixing set of the same size.
/// The final pick must lie in a regular orbit, and a branch is cut once the
/// stabilizer is too large to be killed by the picks left.
pub fn fixing_number(g: &Graph, limits: &Limits) -> Result<FixingResult> {
    let n = g.order();
    let twins = TwinIds::new(g);
    let mut counter = Counter::new(limits);
    let group_order = StabilizerChain::build(g, &[], &twins, &mut counter)?.order();
    if group_order == 1 {
        return Ok(FixingResult { fix: 0, witness: VertexSet::new(), group_order });
    }
    let forced = forced_twin_vertices(g);
    let mut chosen = forced.as_slice().to_vec();
    for extra in 0..=n - forced.len() {
        if let Some(picks) = extend(g, &twins, &mut chosen, None, extra, &mut counter)? {
            let witness: VertexSet = forced.iter().chain(picks).collect();
            return Ok(FixingResult { fix: witness.len(), witness, group_order });
        }
    }
    unreachable!("fixing all vertices leaves only the identity")
}

fn extend(
    g: &Graph,
    twins: &TwinIds,
    chosen: &mut Vec<usize>,
    last: Option<usize>,
    remaining: usize,
    counter: &mut Counter,
) -> Result<Option<Vec<usize>>> {
    let chain = StabilizerChain::build(g, chosen, twins, counter)?;
    let order = chain.order();
    if remaining == 0 || order == 1 {
        return Ok((remaining == 0 && order == 1).then(Vec::new));
    }
    let roots = chain.orbit_roots();
    let mut size = vec![0u128; g.order()];
    for &r in &roots {
        size[r] += 1;
    }
    let largest = size.iter().copied().max().unwrap_or(1);
    let reach = (0..remaining).try_fold(1u128, |acc, _| acc.checked_mul(largest)).unwrap_or(u128::MAX);
    if order > reach {
        return Ok(None);
    }
    let start = last.map_or(0, |l| l + 1);
    for v in start..g.order() {
        if roots[v] != v || size[v] < 2 {
            continue;
        }
        if remaining == 1 {
            if size[v] == order {
                return Ok(Some(vec![v]));
            }
            continue;
        }
        chosen.push(v);
        let found = extend(g, twins, chosen, Some(v), remaining - 1, counter)?;
        chosen.pop();
        if let Some(mut rest) = found {
            rest.insert(0, v);
            return Ok(Some(rest));
        }
    }
    Ok(None)
}

/// Every minimum fixing set, in lexicographic order. Meant for small
/// graphs: each candidate subset costs one search node.
pub fn minimum_fixing_sets(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let fix = fixing_number(g, limits)?.fix;
    let n = g.order();
    let mut counter = Counter::new(limits);
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..fix).collect();
    loop {
        counter.tick()?;
        let set = VertexSet::from(idx.clone());
        if is_fixing_set(g, &set, limits)? {
            out.push(set);
        }
        let Some(pos) = (0..fix).rev().find(|&p| idx[p] < n - fix + p) else { break };
        idx[pos] += 1;
        for q in pos + 1..fix {
            idx[q] = idx[q - 1] + 1;
        }
    }
    Ok(out)
}

/// `(max(fix(G1), fix(G2)), |G1|·|G2| − 1)`.
pub fn fix_bounds_conormal(g1: &Graph, g2: &Graph, limits: &Limits) -> Result<(usize, usize)> {
    let lower = fixing_number(g1, limits)?.fix.max(fixing_number(g2, limits)?.fix);
    let upper = g1
        .order()
        .checked_mul(g2.order())
        .ok_or(Error::SizeCap { requested: usize::MAX, cap: limits.max_product_vertices })?
        - 1;
    Ok((lower, upper))
}
