use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use conormal::expr::{parse, EvalError};
use conormal::grid::{factors_from_params, parse_params, run_grid, GridSize};
use conormal::{edgelist, report};
use conormal_core::claims::{verify_claim, ClaimId, Verdict};
use conormal_core::fixing::fixing_number;
use conormal_core::symmetry::{orbits, stabilizer_chain};
use conormal_core::{Graph, Limits, VertexSet};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

/// Co-normal products, automorphism groups and fixing numbers.
#[derive(Parser)]
#[command(name = "conormal", version)]
struct Cli {
    /// Largest vertex count a product may have.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_PRODUCT_VERTICES)]
    max_product_vertices: usize,
    /// Largest group that may be enumerated element by element.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_GROUP_ORDER)]
    max_group_order: u128,
    /// Backtracking nodes allowed per search.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_SEARCH_NODES)]
    max_search_nodes: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the vertex count and edge list of an expression.
    Build {
        expr: String,
        /// Also write the graph as an edge-list file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the automorphism group order and generators.
    Aut { expr: String },
    /// Print the orbit partition.
    Orbits { expr: String },
    /// Print the fixing number and the least minimum fixing set.
    Fix { expr: String },
    /// Check one claim on one instance.
    Verify {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        g1: Option<String>,
        #[arg(long)]
        g2: Option<String>,
        /// Numeric parameters such as `s=2,t=5`.
        #[arg(long)]
        params: Option<String>,
    },
    /// Run every claim over an instance grid.
    GridReport {
        #[arg(long, value_enum, default_value_t = GridSize::Small)]
        grid: GridSize,
        /// Write the JSON-lines report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(expr: &str, limits: &Limits) -> Result<Graph> {
    let e = parse(expr)?;
    Ok(e.eval(limits, Path::new("."))?)
}

fn set_list(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.as_slice().to_vec()).collect()
}

fn run(cli: Cli) -> Result<ExitCode> {
    let limits = Limits {
        max_product_vertices: cli.max_product_vertices,
        max_group_order: cli.max_group_order,
        max_search_nodes: cli.max_search_nodes,
    };
    let jsonl = cli.format == Format::Jsonl;
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Build { expr, out: file } => {
            let g = load(&expr, &limits)?;
            if let Some(path) = file {
                std::fs::write(&path, edgelist::write(&g)).with_context(|| format!("writing {}", path.display()))?;
            }
            let edges: Vec<(usize, usize)> = g.edges().collect();
            if jsonl {
                writeln!(out, "{}", json!({"graph": g.label(), "n": g.order(), "edges": edges}))?;
            } else {
                writeln!(out, "graph = {}", g.label().unwrap_or(&expr))?;
                writeln!(out, "n = {}", g.order())?;
                writeln!(out, "edges = {}", edges.len())?;
                for (u, v) in edges {
                    writeln!(out, "{u} {v}")?;
                }
            }
        }
        Command::Aut { expr } => {
            let g = load(&expr, &limits)?;
            let chain = stabilizer_chain(&g, &VertexSet::new(), &limits)?;
            let gens: Vec<String> = chain.generators().iter().map(ToString::to_string).collect();
            if jsonl {
                writeln!(out, "{}", json!({"graph": g.label(), "order": chain.order().to_string(), "generators": gens}))?;
            } else {
                writeln!(out, "order = {}", chain.order())?;
                writeln!(out, "generators = {}", gens.len())?;
                for p in gens {
                    writeln!(out, "{p}")?;
                }
            }
        }
        Command::Orbits { expr } => {
            let g = load(&expr, &limits)?;
            let o = orbits(&g, &limits)?;
            if jsonl {
                writeln!(out, "{}", json!({"graph": g.label(), "orbits": set_list(&o.orbits)}))?;
            } else {
                writeln!(out, "orbits = {}", o.orbits.len())?;
                for orbit in &o.orbits {
                    writeln!(out, "{orbit}")?;
                }
            }
        }
        Command::Fix { expr } => {
            let g = load(&expr, &limits)?;
            let r = fixing_number(&g, &limits)?;
            if jsonl {
                let j = json!({
                    "graph": g.label(),
                    "fix": r.fix,
                    "witness": r.witness.as_slice(),
                    "group_order": r.group_order.to_string(),
                });
                writeln!(out, "{j}")?;
            } else {
                writeln!(out, "fix = {}", r.fix)?;
                writeln!(out, "witness = {}", r.witness)?;
                writeln!(out, "group order = {}", r.group_order)?;
            }
        }
        Command::Verify { claim, g1, g2, params } => {
            let claim: ClaimId = claim.parse()?;
            let params = parse_params(params.as_deref().unwrap_or(""))?;
            let [p1, p2] = factors_from_params(claim, &params)?;
            let exprs: Vec<String> = [g1.or(p1), g2.or(p2)].into_iter().flatten().collect();
            if exprs.is_empty() {
                bail!("{claim} needs --g1 (and usually --g2) or --params");
            }
            let factors = exprs.iter().map(|e| load(e, &limits)).collect::<Result<Vec<_>>>()?;
            let record = verify_claim(claim, &factors, &limits);
            if jsonl {
                writeln!(out, "{}", report::json_line(&record))?;
            } else {
                write!(out, "{}", report::table(std::slice::from_ref(&record)))?;
            }
            return Ok(match record.verdict {
                Verdict::Discrepant => ExitCode::from(1),
                Verdict::BudgetExceeded => ExitCode::from(3),
                _ => ExitCode::SUCCESS,
            });
        }
        Command::GridReport { grid, out: file } => {
            let records = run_grid(grid, &limits)?;
            let lines = report::jsonl(&records);
            if let Some(path) = file {
                std::fs::write(&path, &lines).with_context(|| format!("writing {}", path.display()))?;
            }
            if jsonl {
                out.write_all(lines.as_bytes())?;
            } else {
                out.write_all(report::table(&records).as_bytes())?;
            }
            let count = |v: Verdict| records.iter().filter(|r| r.verdict == v).count();
            eprintln!(
                "{} records: {} confirmed, {} discrepant, {} hypothesis-not-met, {} budget-exceeded",
                records.len(),
                count(Verdict::Confirmed),
                count(Verdict::Discrepant),
                count(Verdict::HypothesisNotMet),
                count(Verdict::BudgetExceeded),
            );
            if count(Verdict::Discrepant) > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn is_budget(err: &anyhow::Error) -> bool {
    let core_budget = |e: &conormal_core::Error| {
        matches!(e, conormal_core::Error::Budget { .. } | conormal_core::Error::SizeCap { .. })
    };
    err.chain().any(|cause| {
        cause.downcast_ref::<conormal_core::Error>().is_some_and(core_budget)
            || matches!(cause.downcast_ref::<EvalError>(), Some(EvalError::Graph(e)) if core_budget(e))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            if is_budget(&err) {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
