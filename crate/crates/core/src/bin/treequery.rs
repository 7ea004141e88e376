use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use treequery::graphs::Spanning;
use treequery::harness::{self, Adversary, Input, LabelSource, Method, SweepConfig};
use treequery::{io, Error, Result};

#[derive(Parser)]
#[command(name = "treequery", version, about = "Query selection and mincut prediction on trees and graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Select a query set and write it as a query-set file.
    Select {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Predict every label from the labels of a query set.
    Predict {
        #[arg(long)]
        tree: PathBuf,
        /// Query-set file as written by `select`.
        #[arg(long)]
        queries: PathBuf,
        /// Labels of the query set, `node ±1` per line.
        #[arg(long)]
        labels: PathBuf,
        /// Full labeling; prints `mistakes=<m>` on stderr.
        #[arg(long)]
        truth: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a grid of experiments and write one CSV row per grid point.
    Sweep {
        #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
        tree: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Budgets: `4`, `1-9`, `2..=6`, `1,2,8` or `all`.
        #[arg(long, default_value = "all")]
        budget: String,
        #[arg(long = "K", default_value_t = 1)]
        k: usize,
        /// Comma-separated methods.
        #[arg(long, default_value = "sel", value_delimiter = ',')]
        method: Vec<Method>,
        #[arg(long, default_value = "random", conflicts_with = "labels")]
        adversary: Adversary,
        /// Fixed true labels instead of an adversary.
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long, default_value = "bfs")]
        spanning: Spanning,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Seeds per grid point.
        #[arg(long, default_value_t = 1)]
        seeds: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Objective curve for `sel_star`; defaults to `<out>.curve.csv`.
        #[arg(long)]
        curve: Option<PathBuf>,
    },
    /// Extract a spanning tree from a graph.
    Spanning {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "bfs")]
        spanning: Spanning,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the mistake-bound chains by brute force.
    Verify {
        /// Tree to check; without it a built-in suite of paths and stars runs.
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long, default_value = "2,4")]
        budget: String,
        #[arg(long = "K", default_value_t = 3)]
        k: usize,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Select { tree, budget, out } => {
            let t = io::read_tree(tree)?;
            emit(&out, &harness::cmd_select(&t, budget)?)?;
        }
        Command::Predict {
            tree,
            queries,
            labels,
            truth,
            out,
        } => {
            let t = io::read_tree(tree)?;
            let l_plus = io::read_closure(queries, t.n())?;
            let seen = io::read_labels(labels, t.n())?;
            let truth = truth.map(|p| io::read_labels(p, t.n())).transpose()?;
            let (text, m) = harness::cmd_predict(&t, &l_plus, &seen, truth.as_ref())?;
            emit(&out, &text)?;
            if let Some(m) = m {
                eprintln!("mistakes={m}");
            }
        }
        Command::Sweep {
            tree,
            graph,
            budget,
            k,
            method,
            adversary,
            labels,
            spanning,
            seed,
            seeds,
            out,
            curve,
        } => {
            let (input, id) = match (tree, graph) {
                (Some(p), _) => (Input::Tree(io::read_tree(&p)?), p),
                (None, Some(p)) => (Input::Graph(io::read_graph(&p)?), p),
                (None, None) => unreachable!("clap requires one input"),
            };
            let n = input.n();
            let labels = match labels {
                Some(p) => {
                    let y = io::read_labels(p, n)?;
                    y.require_total()?;
                    LabelSource::Fixed(y)
                }
                None => LabelSource::Adversary(adversary),
            };
            let cfg = SweepConfig {
                id: id.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned()),
                methods: method.clone(),
                budgets: harness::parse_grid(&budget, n)?,
                k,
                labels,
                seed,
                seeds,
                spanning,
            };
            let rows = harness::sweep(&input, &cfg)?;
            emit(&out, &harness::to_csv(&rows))?;
            if let (true, Input::Tree(t)) = (method.contains(&Method::SelStar), &input) {
                let (t_star, text) = harness::curve_csv(t, k);
                eprintln!("t*={t_star}");
                let path = curve.or_else(|| out.as_ref().map(|o| o.with_extension("curve.csv")));
                if let Some(p) = path {
                    fs::write(p, text)?;
                }
            }
        }
        Command::Spanning {
            graph,
            spanning,
            seed,
            out,
        } => {
            let g = io::read_graph(graph)?;
            emit(&out, &harness::cmd_spanning(&g, spanning, seed)?)?;
        }
        Command::Verify { tree, budget, k } => {
            let report = match tree {
                Some(p) => {
                    let t = io::read_tree(p)?;
                    harness::cmd_verify(&t, &harness::parse_grid(&budget, t.n())?, k)?
                }
                None => harness::verify_suite(k)?,
            };
            println!(
                "checks={} competitors={} violations={}",
                report.checks,
                report.competitors,
                report.violations.len()
            );
            for v in &report.violations {
                println!("violation: {v}");
            }
            if !report.is_clean() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    e.exit_code() as u8
}
