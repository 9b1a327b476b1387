use std::process::ExitCode;

use clap::{Parser, Subcommand};

use uptail::SolverConfig;
use uptail_cli::{examples, exit, load_graph, plant, report, simulate, CliError};

#[derive(Parser)]
#[command(name = "uptail", version, about = "Upper-tail bounds for subgraph counts in directed random graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Both variational bounds for one digraph.
    Bounds {
        /// Edge-list file or built-in name (e.g. `cycle:4`, `gap:5`).
        #[arg(long)]
        graph: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long, default_value_t = SolverConfig::default().tol)]
        tol: f64,
        #[arg(long, default_value_t = SolverConfig::default().grid)]
        grid: usize,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the worked examples; exits nonzero if any row fails.
    #[command(name = "paper-examples")]
    Examples {
        #[arg(long)]
        json: bool,
    },
    /// Convergence of the planted hub and clique graphons as p shrinks.
    PlantVerify {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        delta: f64,
        #[arg(long, num_args = 1.., value_delimiter = ',', default_values_t = [1e-2, 1e-3, 1e-4])]
        p_list: Vec<f64>,
    },
    /// Monte Carlo upper tail in G(n, p), with exact values where known.
    Simulate {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Bounds { graph, delta, tol, grid, json: as_json } => {
            let d = load_graph(&graph)?;
            let cfg = SolverConfig { tol, grid, ..SolverConfig::default() };
            let r = report::analyze(&graph, &d, delta, cfg)?;
            Ok(if as_json { json(&r) } else { report::render_text(&r) })
        }
        Command::Examples { json: as_json } => {
            let rows = examples::example_rows(&SolverConfig::default())?;
            let failed = rows.iter().filter(|r| !r.pass).count();
            print!("{}", if as_json { json(&rows) } else { examples::render_table(&rows) });
            if failed > 0 {
                return Err(CliError::ExamplesFailed(failed));
            }
            Ok(String::new())
        }
        Command::PlantVerify { graph, delta, p_list } => {
            let d = load_graph(&graph)?;
            let rows = plant::plant_rows(&d, delta, &p_list, &SolverConfig::default())?;
            plant::render_csv(&graph, delta, &rows)
        }
        Command::Simulate { graph, n, p, delta, samples, seed, json: as_json } => {
            let d = load_graph(&graph)?;
            let r = simulate::simulate(&graph, &d, n, p, delta, samples, seed)?;
            Ok(if as_json { json(&r) } else { simulate::render_text(&r) })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::from(exit::OK as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
