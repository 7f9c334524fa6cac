//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails. Runs without the libtest harness so
//! the lines are never captured.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use conormal::expr::parse;
use conormal::grid::{instances, run_grid, GridSize};
use conormal_core::claims::{verify_claim, ClaimId, Verdict};
use conormal_core::families::{complete, complete_multipartite, cycle, null, path, star};
use conormal_core::fixing::fixing_number;
use conormal_core::products::{conormal, conormal_neighborhood, join, strong};
use conormal_core::symmetry::{
    are_isomorphic, automorphisms, first_rigid_graph, group_order, is_rigid, orbits, pair_automorphism,
};
use conormal_core::{Graph, Limits, VertexSet};

type Outcome = Result<String, String>;

/// Every product built during the run, with its factors, for the bound and
/// regular-orbit checks.
#[derive(Default)]
struct Products(BTreeMap<String, (Graph, Graph, Graph)>);

impl Products {
    fn add(&mut self, g1: &Graph, g2: &Graph) -> Graph {
        let p = conormal(g1, g2).unwrap();
        let key = p.label().unwrap().to_string();
        self.0.entry(key).or_insert_with(|| (g1.clone(), g2.clone(), p.clone()));
        p
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Duration, start: Instant) -> Result<String, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(format!("{took:.2?}"))
}

fn pool() -> Vec<Graph> {
    vec![
        path(2).unwrap(),
        path(3).unwrap(),
        path(4).unwrap(),
        path(5).unwrap(),
        cycle(3).unwrap(),
        cycle(4).unwrap(),
        cycle(5).unwrap(),
        star(3).unwrap(),
        complete(4).unwrap(),
        null(2).unwrap(),
        null(3).unwrap(),
        complete_multipartite(&[2, 2]).unwrap(),
    ]
}

fn fix(g: &Graph) -> usize {
    fixing_number(g, &Limits::default()).unwrap().fix
}

fn path_grid(products: &mut Products) -> Outcome {
    let l = Limits::default();
    let start = Instant::now();
    let mut counts = BTreeMap::new();
    for s in 2..=6 {
        for t in 2..=6 {
            let (g1, g2) = (path(s).unwrap(), path(t).unwrap());
            products.add(&g1, &g2);
            let r = verify_claim(ClaimId::Thm3_4, &[g1, g2], &l);
            *counts.entry(r.verdict.as_str()).or_insert(0) += 1;
            if [(2, 2), (2, 3), (3, 3)].contains(&(s, t)) {
                ensure(r.verdict == Verdict::Confirmed, || format!("anchor ({s},{t}) is {}", r.verdict))?;
            }
            match r.verdict {
                Verdict::Confirmed => {}
                Verdict::Discrepant => {
                    ensure(r.witness_is_valid(&l), || format!("({s},{t}) has no valid witness"))?;
                }
                v => return Err(format!("({s},{t}) gave {v}")),
            }
        }
    }
    Ok(format!("{counts:?} in {}", timed(Duration::from_secs(60), start)?))
}

fn degree_identities(products: &mut Products) -> Outcome {
    let start = Instant::now();
    let pool = pool();
    let mut vertices = 0;
    for g1 in &pool {
        for g2 in &pool {
            let p = products.add(g1, g2);
            let (m1, m2) = (g1.order(), g2.order());
            for i in 0..m1 {
                for j in 0..m2 {
                    let v = i * m2 + j;
                    let (di, dj) = (g1.degree(i).unwrap(), g2.degree(j).unwrap());
                    ensure(p.degree(v).unwrap() == m2 * di + m1 * dj - di * dj, || format!("degree at {v} of {p:?}"))?;
                    let mut expected = VertexSet::new();
                    for k in 0..m1 {
                        for x in 0..m2 {
                            let inside = g1.has_edge(i, k) || (!g1.has_edge(i, k) && g2.has_edge(j, x));
                            if inside {
                                expected.insert(k * m2 + x);
                            }
                        }
                    }
                    ensure(p.open_neighborhood(v).unwrap() == expected, || format!("neighborhood at {v}"))?;
                    ensure(conormal_neighborhood(g1, g2, i, j).unwrap() == expected, || format!("formula at {v}"))?;
                    vertices += 1;
                }
            }
        }
    }
    Ok(format!("{vertices} vertices in {}", timed(Duration::from_secs(10), start)?))
}

fn duality(products: &mut Products) -> Outcome {
    let l = Limits::default();
    let pool = pool();
    let mut checked = 0;
    for g1 in &pool {
        for g2 in &pool {
            if g1.order() * g2.order() > 30 {
                continue;
            }
            let p = products.add(g1, g2);
            let s = strong(&g1.complement(), &g2.complement()).unwrap();
            let c = p.complement();
            ensure(c.order() == s.order() && c.edges().eq(s.edges()), || format!("graphs differ for {:?}", p.label()))?;
            ensure(fix(&p) == fix(&s), || format!("fixing numbers differ for {:?}", p.label()))?;
            let r = verify_claim(ClaimId::Thm3_1, &[g1.clone(), g2.clone()], &l);
            ensure(r.verdict == Verdict::Confirmed, || format!("{} on {}", r.verdict, r.instance))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs"))
}

fn bounds_and_regular_orbits(products: &Products) -> Outcome {
    let l = Limits::default();
    for (name, (g1, g2, p)) in &products.0 {
        let (f1, f2) = (fix(g1), fix(g2));
        let r = fixing_number(p, &l).unwrap();
        ensure(f1.max(f2) <= r.fix && r.fix < p.order().max(2), || format!("{name}: {f1},{f2} vs {}", r.fix))?;
        if r.group_order > 1 {
            let regular = orbits(p, &l).unwrap().largest() as u128 == r.group_order;
            ensure((r.fix == 1) == regular, || format!("{name}: fix {} but regular orbit {regular}", r.fix))?;
        }
    }
    Ok(format!("{} products", products.0.len()))
}

fn multipartite(products: &mut Products) -> Outcome {
    let l = Limits::default();
    let mut checked = 0;
    for a in 2..=3 {
        for b in 2..=3 {
            for c in 2..=3 {
                for d in 2..=3 {
                    if (a + b) * (c + d) > 30 {
                        continue;
                    }
                    let g1 = complete_multipartite(&[a, b]).unwrap();
                    let g2 = complete_multipartite(&[c, d]).unwrap();
                    let p = products.add(&g1, &g2);
                    let expected = (a + b) * (c + d) - 4;
                    ensure(fix(&p) == expected, || format!("({a},{b},{c},{d}) gave {} not {expected}", fix(&p)))?;
                    for claim in [ClaimId::Thm3_11, ClaimId::Cor3_12] {
                        let r = verify_claim(claim, &[g1.clone(), g2.clone()], &l);
                        ensure(r.verdict == Verdict::Confirmed, || format!("{claim} {} on {}", r.verdict, r.instance))?;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} instances, K(2,2)*K(2,2) = 12"))
}

fn stars(products: &mut Products) -> Outcome {
    let l = Limits::default();
    for (m1, m2) in [(2, 2), (2, 3), (3, 3)] {
        let (g1, g2) = (star(m1).unwrap(), star(m2).unwrap());
        let p = products.add(&g1, &g2);
        let expected = m1 * m2 + m1 + m2 - 3;
        ensure(fix(&p) == expected, || format!("stars ({m1},{m2}) gave {}", fix(&p)))?;
        let r = verify_claim(ClaimId::Thm3_16, &[g1, g2], &l);
        ensure(r.verdict == Verdict::Confirmed, || format!("({m1},{m2}) {}", r.verdict))?;
    }
    let s = fix(&products.add(&star(2).unwrap(), &star(2).unwrap()));
    let p = fix(&products.add(&path(3).unwrap(), &path(3).unwrap()));
    ensure(s == 5 && p == 5, || format!("star value {s}, path value {p}"))?;
    Ok("(2,2)=5 (2,3)=8 (3,3)=12".into())
}

fn rigidity(products: &mut Products) -> Outcome {
    let l = Limits::default();
    let rigid = first_rigid_graph(6, &l).unwrap().ok_or("no rigid graph on 6 vertices")?;
    ensure(is_rigid(&rigid, &l).unwrap(), || "search returned a non-rigid graph".into())?;
    let tree = parse("rigidtree:7").unwrap().eval(&l, Path::new(".")).unwrap();
    let pool = vec![rigid.clone(), tree, path(4).unwrap(), cycle(5).unwrap(), star(3).unwrap(), null(2).unwrap()];
    for g1 in &pool {
        for g2 in &pool {
            let p = products.add(g1, g2);
            let iso = are_isomorphic(g1, g2, &l).unwrap().is_some();
            let expected = is_rigid(g1, &l).unwrap() && is_rigid(g2, &l).unwrap() && !iso;
            ensure(is_rigid(&p, &l).unwrap() == expected, || format!("rigidity of {:?}", p.label()))?;
            let r = verify_claim(ClaimId::Thm2_18, &[g1.clone(), g2.clone()], &l);
            ensure(r.verdict == Verdict::Confirmed, || format!("Thm2.18 {} on {}", r.verdict, r.instance))?;
        }
    }
    for g in &pool[..2] {
        let p = products.add(g, g);
        ensure(group_order(&p, &l).unwrap() == 2, || format!("{:?} group order", p.label()))?;
        let r = verify_claim(ClaimId::Thm2_17, &[g.clone(), g.clone()], &l);
        ensure(r.verdict == Verdict::Confirmed, || format!("Thm2.17 {}", r.verdict))?;
    }
    let joined = join(&null(1).unwrap(), &rigid).unwrap();
    ensure(is_rigid(&joined, &l).unwrap() && joined.is_dominating_vertex(0).unwrap(), || "join is not rigid".into())?;
    ensure(is_rigid(&joined.remove_vertex(0).unwrap(), &l).unwrap(), || "deletion is not rigid".into())?;
    let r = verify_claim(ClaimId::Prop3_2, &[joined], &l);
    ensure(r.verdict == Verdict::Confirmed, || format!("Prop3.2 {}", r.verdict))?;
    Ok(format!("rigid graph with {} edges", rigid.edge_count()))
}

fn group_properties(products: &mut Products) -> Outcome {
    let l = Limits::default();
    let start = Instant::now();
    let pool = pool();
    let groups: Vec<_> = pool.iter().map(|g| automorphisms(g, &l).unwrap()).collect();
    for (g, group) in pool.iter().zip(&groups) {
        let n = g.order();
        for p in group.elements() {
            let preserved = (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == g.has_edge(p.apply(u), p.apply(v))));
            ensure(preserved, || format!("{p} is not an automorphism of {:?}", g.label()))?;
        }
        let complement = automorphisms(&g.complement(), &l).unwrap();
        ensure(complement.elements() == group.elements(), || format!("complement of {:?}", g.label()))?;
        let orbs = group.orbits();
        for v in 0..n {
            let stab = group.stabilizer(&VertexSet::from([v])).unwrap().order();
            ensure(group.order() == orbs.orbit_of(v).unwrap().len() * stab, || format!("orbit-stabilizer at {v}"))?;
        }
    }
    for (g1, a1) in pool.iter().zip(&groups) {
        for (g2, a2) in pool.iter().zip(&groups) {
            let p = products.add(g1, g2);
            let order = group_order(&p, &l).unwrap();
            ensure((a1.order() * a2.order()) as u128 <= order, || format!("order bound on {:?}", p.label()))?;
            let m2 = g2.order();
            for alpha in a1.elements() {
                for beta in a2.elements() {
                    let pair = pair_automorphism(g1, g2, alpha, beta).unwrap();
                    ensure(p.is_automorphism(&pair), || format!("pair map on {:?}", p.label()))?;
                    for i in (0..g1.order()).filter(|&i| alpha.fixes(i)) {
                        for j in (0..m2).filter(|&j| beta.fixes(j)) {
                            ensure(pair.fixes(i * m2 + j), || "stabilizer embedding".into())?;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{} graphs in {}", pool.len(), timed(Duration::from_secs(60), start)?))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for k in 0..2 {
        let file = dir.path().join(format!("run{k}.jsonl"));
        let o = Command::new(env!("CARGO_BIN_EXE_conormal"))
            .args(["--format", "jsonl", "grid-report", "--grid", "small", "--out"])
            .arg(&file)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(matches!(o.status.code(), Some(0 | 1)), || format!("exit status {:?}", o.status))?;
        let written = std::fs::read(&file).map_err(|e| e.to_string())?;
        ensure(written == o.stdout, || "file and stdout differ".into())?;
        outputs.push(written);
    }
    ensure(outputs[0] == outputs[1], || "runs differ".into())?;
    Ok(format!("{} identical lines", outputs[0].iter().filter(|&&b| b == b'\n').count()))
}

fn full_grid(products: &mut Products) -> Outcome {
    let l = Limits::default();
    let records = run_grid(GridSize::Full, &l).map_err(|e| e.to_string())?;
    let applies = |claim: ClaimId, note: Option<&str>| {
        records.iter().any(|r| {
            r.claim == claim
                && r.verdict != Verdict::HypothesisNotMet
                && note.is_none_or(|n| r.note.as_deref() == Some(n))
        })
    };
    let wanted = [
        (ClaimId::Thm3_6, Some("case 3")),
        (ClaimId::Thm3_7, None),
        (ClaimId::Thm3_9, None),
        (ClaimId::Thm3_13, None),
        (ClaimId::Thm3_15, None),
    ];
    for (claim, note) in wanted {
        ensure(applies(claim, note), || format!("no applicable {claim} record"))?;
    }
    for s in 2..=6 {
        for t in 2..=6 {
            let instance = format!("conormal(path:{s},path:{t})");
            let found = records.iter().any(|r| r.claim == ClaimId::Thm3_4 && r.instance == instance);
            ensure(found, || format!("no record for {instance}"))?;
        }
    }
    let discrepant: Vec<_> = records.iter().filter(|r| r.verdict == Verdict::Discrepant).collect();
    for r in &discrepant {
        ensure(r.witness_is_valid(&l), || format!("{} on {} lacks a valid witness", r.claim, r.instance))?;
    }
    let cache: BTreeMap<String, Graph> = instances(GridSize::Full)
        .into_iter()
        .flatten()
        .map(|e| {
            let g = parse(&e).unwrap().eval(&l, Path::new(".")).unwrap();
            (e, g)
        })
        .collect();
    for [a, b] in instances(GridSize::Full) {
        products.add(&cache[&a], &cache[&b]);
    }
    Ok(format!("{} records, {} discrepant with valid witnesses", records.len(), discrepant.len()))
}

fn main() {
    let mut products = Products::default();
    let mut results: Vec<(u8, &str, Outcome)> = vec![
        (1, "path product grid", path_grid(&mut products)),
        (2, "degree and neighbourhood identities", degree_identities(&mut products)),
        (3, "complement duality", duality(&mut products)),
        (5, "complete multipartite formula", multipartite(&mut products)),
        (6, "star formula", stars(&mut products)),
        (7, "rigidity suite", rigidity(&mut products)),
        (8, "group properties", group_properties(&mut products)),
        (9, "determinism", determinism()),
        (10, "full grid coverage", full_grid(&mut products)),
    ];
    results.insert(3, (4, "fixing bounds and regular orbits", bounds_and_regular_orbits(&products)));
    let mut failed = 0;
    for (n, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all {} acceptance criteria passed", results.len());
}
