use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lptlab::hunt::{hunt_chordal_lpt2, HuntConfig, HuntOutcome, HuntState};
use lptlab::input::read_graph;
use lptlab::suite::{catalog, run_suite, SuiteConfig, SuiteName, DEFAULT_SEED};
use lptlab::{HarnessError, Result};
use lptlab_core::bpg::find_strong_ordering;
use lptlab_core::catalog::{canonical_form, enumerate_trees, GraphClass, MAX_CANONICAL_N};
use lptlab_core::graph6::write_graph6;
use lptlab_core::paths::{enumerate_longest_paths_with_budget, to_dot, DEFAULT_BUDGET};
use lptlab_core::substar::{enumerate_models, intersection_graph, HostTree, MAX_STARS};
use lptlab_core::transversal::{lpt_from_paths, LptReport};
use lptlab_core::treedecomp::{exact_treewidth, to_td_format};
use lptlab_core::VertexSet;

/// Hosts used by `gen --class substar`.
const GEN_HOST_MAX: usize = 6;

#[derive(Parser)]
#[command(name = "lptlab", version, about = "Longest-path transversals of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// L, lpt, a minimum transversal and a Gallai vertex, as JSON.
    Lpt {
        /// graph6 string or a file (graph6 or `n m` edge list)
        graph: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exact treewidth with an optimal decomposition in PACE .td format.
    Tw { graph: String },
    /// Sweep a catalog and check every statement of a suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: SuiteName,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// One graph per isomorphism class instead of every labeled graph.
        #[arg(long)]
        dedup: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Run on a named graph (walther, bpg-fig2, p4) instead of the catalog.
        #[arg(long)]
        fixture: Option<String>,
    },
    /// Print connected graphs of a class on exactly N vertices as graph6.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GenClass::All)]
        class: GenClass,
    },
    /// Search for a counterexample, resuming from a state file.
    Hunt {
        #[arg(value_enum)]
        target: HuntTarget,
        #[arg(long)]
        resume: PathBuf,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Edge masks to examine before pausing.
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Graphviz rendering.
    Dot {
        graph: String,
        /// Draw every longest path and fill a minimum transversal.
        #[arg(long)]
        highlight_longest: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenClass {
    Chordal,
    Bpg,
    Substar,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum HuntTarget {
    #[value(name = "chordal-lpt2")]
    ChordalLpt2,
}

fn parse_suite(s: &str) -> std::result::Result<SuiteName, String> {
    s.parse().map_err(|e: HarnessError| e.to_string())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Lpt { graph, budget } => {
            let g = read_graph(&graph)?;
            let report = LptReport::compute(&g, budget)?;
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
        }
        Command::Tw { graph } => {
            let g = read_graph(&graph)?;
            let (tw, td) = exact_treewidth(&g)?;
            writeln!(out, "c treewidth {tw}")?;
            write!(out, "{}", to_td_format(&td, g.n()))?;
        }
        Command::Verify { suite, n_max, dedup, jobs, seed, budget, out: json_path, csv, fixture } => {
            let cfg = SuiteConfig { suite, n_max, dedup, jobs, seed, budget, fixture, out: json_path, csv };
            let report = run_suite(&cfg)?;
            let json = report.to_json()?;
            match &cfg.out {
                Some(path) => std::fs::write(path, &json)?,
                None => out.write_all(json.as_bytes())?,
            }
            if let Some(path) = &cfg.csv {
                report.write_csv(BufWriter::new(File::create(path)?))?;
            }
            let c = report.counters;
            eprintln!(
                "{}: {} records, {} checks, {} theorem violations, {} internal errors, {} budget errors, {:.2?}",
                report.suite,
                c.records,
                c.checks,
                c.theorem_violations,
                c.internal_errors,
                c.budget_errors,
                report.wall_time
            );
            out.flush()?;
            return Ok(report.exit_code() as u8);
        }
        Command::Gen { n, class } => {
            for g6 in generate(n, class)? {
                writeln!(out, "{g6}")?;
            }
        }
        Command::Hunt { target: HuntTarget::ChordalLpt2, resume, n_max, limit, budget } => {
            let mut state = HuntState::load_or_new(&resume)?;
            let outcome = hunt_chordal_lpt2(&mut state, HuntConfig { n_max, budget, limit }, |s| s.save(&resume))?;
            let summary = format!("examined {} masks, {} connected chordal", state.examined, state.chordal_connected);
            return Ok(match outcome {
                HuntOutcome::Found { graph6, lpt } => {
                    writeln!(out, "{graph6}")?;
                    eprintln!("found lpt {lpt}; {summary}");
                    1
                }
                HuntOutcome::Exhausted => {
                    eprintln!("none up to {n_max} vertices; {summary}");
                    0
                }
                HuntOutcome::Paused => {
                    eprintln!("paused at n = {}, mask {}; {summary}", state.n, state.mask);
                    0
                }
            });
        }
        Command::Dot { graph, highlight_longest } => {
            let g = read_graph(&graph)?;
            let (paths, marked) = if highlight_longest {
                let lps = enumerate_longest_paths_with_budget(&g, DEFAULT_BUDGET)?;
                let witness = if g.is_connected() { lpt_from_paths(&g, &lps)?.witness } else { VertexSet::EMPTY };
                (lps.paths, witness)
            } else {
                (Vec::new(), VertexSet::EMPTY)
            };
            write!(out, "{}", to_dot(&g, &paths, marked))?;
        }
    }
    out.flush()?;
    Ok(0)
}

fn generate(n: usize, class: GenClass) -> Result<Vec<String>> {
    if !(1..=MAX_CANONICAL_N).contains(&n) {
        return Err(HarnessError::Config(format!("n must lie in 1..={MAX_CANONICAL_N}")));
    }
    let graphs: Vec<_> = match class {
        GenClass::All => catalog(GraphClass::All, n..=n, true).collect(),
        GenClass::Chordal => catalog(GraphClass::Chordal, n..=n, true).collect(),
        GenClass::Bpg => {
            let mut keep = Vec::new();
            for g in catalog(GraphClass::Bipartite, n..=n, true) {
                if find_strong_ordering(&g)?.is_some() {
                    keep.push(g);
                }
            }
            keep
        }
        GenClass::Substar => {
            if n > MAX_STARS {
                return Err(HarnessError::Config(format!("at most {MAX_STARS} stars")));
            }
            let mut seen = std::collections::BTreeMap::new();
            for m in 1..=GEN_HOST_MAX {
                for tree in enumerate_trees(m)? {
                    let host = HostTree::from_graph(tree)?;
                    for model in enumerate_models(&host, n, false)? {
                        let g = intersection_graph(&model)?;
                        if g.is_connected() {
                            let form = canonical_form(&g)?;
                            seen.entry(form).or_insert_with(|| form.to_graph());
                        }
                    }
                }
            }
            seen.into_values().collect()
        }
    };
    graphs.iter().map(|g| write_graph6(g).map_err(HarnessError::from)).collect()
}
