//! Instance grids and the claim runner behind `verify` and `grid-report`.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use conormal_core::claims::{verify_claim, ClaimId, VerificationRecord};
use conormal_core::{Graph, Limits};
use rayon::prelude::*;

use crate::expr::parse;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GridSize {
    Small,
    Full,
}

const SMALL_POOL: &[&str] = &["path:2", "path:3", "path:4", "cycle:4", "star:3", "null:2", "kpartite:2,2"];

const FULL_POOL: &[&str] = &[
    "path:2", "path:3", "path:4", "path:5", "cycle:3", "cycle:4", "cycle:5", "star:3", "complete:4", "null:2",
    "null:3", "kpartite:2,2",
];

/// Rigid graphs, with and without a dominating vertex.
const RIGID_POOL: &[&str] = &["rigid:6", "rigidtree:7", "join(null:1,rigid:6)", "join(null:1,rigidtree:7)"];

/// Non-rigid partners for the rigid pool.
const RIGID_PARTNERS: &[&str] = &["path:4", "path:5", "cycle:5", "star:3", "null:2"];

fn unordered_pairs(pool: &[&str]) -> Vec<[String; 2]> {
    let mut out = Vec::new();
    for (i, a) in pool.iter().enumerate() {
        for b in &pool[i..] {
            out.push([a.to_string(), b.to_string()]);
        }
    }
    out
}

/// Factor pairs of a grid, deduplicated, in a fixed order.
pub fn instances(size: GridSize) -> Vec<[String; 2]> {
    let mut out = match size {
        GridSize::Small => return unordered_pairs(SMALL_POOL),
        GridSize::Full => unordered_pairs(FULL_POOL),
    };
    for s in 2..=6 {
        for t in 2..=6 {
            out.push([format!("path:{s}"), format!("path:{t}")]);
        }
    }
    let parts = ["kpartite:2,2", "kpartite:2,3", "kpartite:3,3"];
    let sizes = [4, 5, 6];
    for i in 0..3 {
        for j in i..3 {
            if sizes[i] * sizes[j] <= 30 {
                out.push([parts[i].to_string(), parts[j].to_string()]);
            }
        }
    }
    for (a, b) in [(2, 2), (2, 3), (3, 3)] {
        out.push([format!("star:{a}"), format!("star:{b}")]);
    }
    out.extend(unordered_pairs(RIGID_POOL));
    for r in RIGID_POOL {
        for p in RIGID_PARTNERS {
            out.push([r.to_string(), p.to_string()]);
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|pair| seen.insert(pair.clone()));
    out
}

/// Evaluates each distinct expression once.
fn graphs(exprs: impl IntoIterator<Item = String>, limits: &Limits) -> Result<HashMap<String, Graph>> {
    let mut out = HashMap::new();
    for e in exprs {
        if let std::collections::hash_map::Entry::Vacant(slot) = out.entry(e) {
            let g = parse(slot.key())?.eval(limits, Path::new("."))?;
            slot.insert(g);
        }
    }
    Ok(out)
}

/// Every registered claim on every instance of the grid, in registry order
/// within each instance. Instances run in parallel; the output order does
/// not depend on scheduling.
pub fn run_grid(size: GridSize, limits: &Limits) -> Result<Vec<VerificationRecord>> {
    let pairs = instances(size);
    let cache = graphs(pairs.iter().flatten().cloned(), limits)?;
    let tasks: Vec<(&[String; 2], ClaimId)> =
        pairs.iter().flat_map(|p| ClaimId::ALL.iter().map(move |&c| (p, c))).collect();
    Ok(tasks
        .par_iter()
        .map(|(pair, claim)| {
            let factors = [cache[&pair[0]].clone(), cache[&pair[1]].clone()];
            verify_claim(*claim, &factors, limits)
        })
        .collect())
}

/// Parses `k=v` pairs separated by commas.
pub fn parse_params(text: &str) -> Result<BTreeMap<String, usize>> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| anyhow!("parameter {item:?} is not of the form key=value"))?;
        let v: usize = v.trim().parse().with_context(|| format!("parameter {k} needs a non-negative integer"))?;
        if out.insert(k.trim().to_string(), v).is_some() {
            bail!("parameter {k} given twice");
        }
    }
    Ok(out)
}

/// Factor expressions implied by a claim's numeric parameters. Slots that
/// the parameters do not determine are left empty.
pub fn factors_from_params(claim: ClaimId, params: &BTreeMap<String, usize>) -> Result<[Option<String>; 2]> {
    let get = |k: &str| params.get(k).copied().ok_or_else(|| anyhow!("{claim} needs parameter {k}"));
    let keys: Vec<&str> = params.keys().map(String::as_str).collect();
    if keys.is_empty() {
        return Ok([None, None]);
    }
    let out = match claim {
        ClaimId::Thm3_4 => [Some(format!("path:{}", get("s")?)), Some(format!("path:{}", get("t")?))],
        ClaimId::Thm3_16 => [Some(format!("star:{}", get("m1")?)), Some(format!("star:{}", get("m2")?))],
        ClaimId::Cor3_14 => [Some(format!("path:{}", get("m1")?)), Some(format!("null:{}", get("m2")?))],
        ClaimId::Thm3_15 => [None, Some(format!("star:{}", get("m2")?))],
        ClaimId::Thm3_11 | ClaimId::Cor3_12 => [
            Some(format!("kpartite:{},{}", get("a")?, get("b")?)),
            Some(format!("kpartite:{},{}", get("c")?, get("d")?)),
        ],
        _ => bail!("{claim} takes no numeric parameters; pass --g1/--g2 instead"),
    };
    let allowed: &[&str] = match claim {
        ClaimId::Thm3_4 => &["s", "t"],
        ClaimId::Thm3_16 | ClaimId::Cor3_14 => &["m1", "m2"],
        ClaimId::Thm3_15 => &["m2"],
        _ => &["a", "b", "c", "d"],
    };
    if let Some(k) = keys.iter().find(|k| !allowed.contains(k)) {
        bail!("{claim} does not take parameter {k}");
    }
    Ok(out)
}
