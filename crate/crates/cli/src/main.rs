use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use codegree_cli::{default_manifest, read_manifest, run_suite, CliError, GroupSpec, RunOptions};
use codegree_core::codegree::{cod_nonlinear, cod_relative};
use codegree_core::{character_table, classify_with_table, prime_graph, CodegreeReport, Group, DEFAULT_ORDER_BOUND};

#[derive(Parser)]
#[command(name = "codegree", version, about = "Character tables, codegrees and coprime-codegree classification of permutation groups")]
struct Cli {
    /// Largest group order that will be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_BOUND)]
    bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table.
    Table { spec: Vec<String> },
    /// Print codegrees per character and the sets cod(G), cod(G|G').
    Codegrees { spec: Vec<String> },
    /// Print the prime graph of cod(G|N).
    Graph {
        /// `GPRIME` for the derived subgroup, or `N=<order>` for the unique
        /// normal subgroup of that order. Without it the graph of cod(G) is used.
        #[arg(long)]
        relative: Option<String>,
        spec: Vec<String>,
    },
    /// Classify the group and print its certificate as JSON.
    Classify { spec: Vec<String> },
    /// Run the full verification pipeline over a manifest.
    Verify {
        /// Manifest file; defaults to the shipped corpus.
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn build(words: &[String], bound: usize) -> Result<Group, CliError> {
    GroupSpec::parse(&words.join(" "))?.build(bound)
}

fn set_string(s: &BTreeSet<u64>) -> String {
    let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Table { spec } => {
            let g = build(&spec, cli.bound)?;
            let t = character_table(&g)?;
            let sizes: Vec<String> = g.classes().iter().map(|c| c.size().to_string()).collect();
            let orders: Vec<String> = g.classes().iter().map(|c| c.rep_order.to_string()).collect();
            println!("order {}  classes {}", g.order(), sizes.len());
            println!("sizes:  {}", sizes.join("  "));
            println!("orders: {}", orders.join("  "));
            for i in 0..t.num_rows() {
                let row: Vec<String> = t.values()[i].iter().map(|v| v.to_string()).collect();
                println!("X.{:<3} {}", i + 1, row.join("  "));
            }
        }
        Command::Codegrees { spec } => {
            let g = build(&spec, cli.bound)?;
            let t = character_table(&g)?;
            let report = CodegreeReport::new(&t, &[])?;
            println!("{}", serde_json::to_string_pretty(&report).expect("serializes"));
        }
        Command::Graph { relative, spec } => {
            let g = build(&spec, cli.bound)?;
            let t = character_table(&g)?;
            let set = match relative.as_deref() {
                None => codegree_core::codegree::cod_all(&t)?,
                Some("GPRIME") => cod_nonlinear(&t)?,
                Some(other) => {
                    let order: usize = other
                        .strip_prefix("N=")
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| CliError::Spec(other.into(), "expected GPRIME or N=<order>".into()))?;
                    let candidates: Vec<_> = g.normal_subgroups().iter().filter(|n| n.order() == order).collect();
                    if candidates.len() != 1 {
                        return Err(CliError::Spec(
                            other.into(),
                            format!("{} normal subgroups of order {order}", candidates.len()),
                        ));
                    }
                    cod_relative(&t, candidates[0])?
                }
            };
            let graph = prime_graph(&set);
            println!("set        {}", set_string(&set));
            println!("vertices   {}", set_string(&graph.vertices));
            let edges: Vec<String> = graph.edges.iter().map(|(p, q)| format!("{p}-{q}")).collect();
            println!("edges      {}", edges.join(" "));
            let comps: Vec<String> = graph.components.iter().map(set_string).collect();
            println!("components {} {}", graph.num_components(), comps.join(" "));
        }
        Command::Classify { spec } => {
            let g = build(&spec, cli.bound)?;
            let t = character_table(&g)?;
            let cert = classify_with_table(&t)?;
            println!("{}", serde_json::to_string_pretty(&cert).expect("serializes"));
            return Ok(cert.passed());
        }
        Command::Verify { manifest, jobs, json } => {
            let entries = match manifest {
                Some(path) => read_manifest(&path)?,
                None => default_manifest(),
            };
            let options = RunOptions { bound: cli.bound, jobs, ..Default::default() };
            let report = run_suite(&entries, &options)?;
            for r in &report.groups {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let detail = match (&r.error, &r.certificate) {
                    (Some(e), _) => e.clone(),
                    (None, Some(c)) => format!("order {} cod(G|G') {} {:?}", c.order, set_string(&c.cod_nonlinear), c.branch),
                    (None, None) => String::new(),
                };
                println!("{status} {:<24} {detail}", r.name);
            }
            let s = &report.summary;
            println!(
                "{} groups, {} passed, {} failed, {} star groups, {} violations",
                s.groups,
                s.passed,
                s.failed,
                s.star_groups,
                s.classification_violations + s.converse_violations
            );
            if let Some(path) = json {
                fs::write(&path, report.to_json() + "\n").map_err(|source| CliError::Io { path, source })?;
            }
            return Ok(report.all_passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
