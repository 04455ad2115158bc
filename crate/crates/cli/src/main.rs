use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hamsquare::catalog::square_cycle_complement;
use hamsquare::closure::k_closure;
use hamsquare::enumerate::{count_by_size, for_each_member, minimal_forbidden_cores, Budget};
use hamsquare::iso::embed_subgraph;
use hamsquare::spectral::spectral_radius;
use hamsquare::squareham::{contains_square_hamilton, edge_extremal, spectral_extremal, CandidateSource, Method};
use hamsquare::graph6;
use hamsquare_cli::io::graph_arg;
use hamsquare_cli::report::{export_report, Format};
use hamsquare_cli::{RunConfig, Session, Target};
use serde_json::json;

#[derive(Parser)]
#[command(name = "hamsquare", version, about = "Exhaustive checks for square Hamiltonian cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification target and write its report.
    Verify {
        /// Target name, comma-separated names, or `all`.
        target: String,
        #[command(flatten)]
        opts: RunOpts,
        #[arg(long, value_enum, default_value = "markdown")]
        format: OutFormat,
    },
    /// List verification targets.
    Targets,
    /// Largest graphs of order n without a square Hamiltonian cycle.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "edges")]
        objective: Objective,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Does the pattern embed in the complement of C_n^2?
    Embed {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        host_order: usize,
    },
    /// Does the graph contain the square of a Hamiltonian cycle?
    Contains {
        graph: String,
        #[arg(long, value_enum, default_value = "complement-embedding")]
        method: MethodArg,
    },
    /// The k-closure of a graph.
    Closure {
        graph: String,
        #[arg(long)]
        k: usize,
    },
    /// Spectral radius of a graph.
    Spectral {
        graph: String,
        #[arg(long, default_value_t = hamsquare::spectral::DEFAULT_TOL)]
        tol: f64,
    },
    /// Count, or list in graph6, graphs with t edges and at most n non-isolated vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        max_members: Option<u64>,
    },
    /// Minimal graphs with at most t edges not embedding in the complement of C_n^2.
    Cores {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t_max: usize,
    },
}

#[derive(Args, Clone)]
struct RunOpts {
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    t_max: Option<usize>,
    #[arg(long, default_value_t = hamsquare::spectral::DEFAULT_TOL)]
    tol: f64,
    /// Gadget file; an empty value disables gadgets.
    #[arg(long, env = hamsquare::catalog::GADGETS_ENV)]
    gadgets: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = 6)]
    split_depth: usize,
    /// Subtree index to resume from, as printed by a partial run.
    #[arg(long, default_value_t = 0)]
    resume_from: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    budget_seconds: Option<u64>,
    #[arg(long)]
    max_members: Option<u64>,
}

impl RunOpts {
    fn config(&self) -> RunConfig {
        RunConfig {
            n_min: self.n_min,
            n_max: self.n_max,
            t_max: self.t_max,
            max_members: self.max_members,
            max_seconds: self.budget_seconds,
            tol: self.tol,
            gadgets: self.gadgets.clone(),
            workers: self.workers,
            split_depth: self.split_depth,
            resume_from: self.resume_from,
            out_dir: self.out.clone(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum Objective {
    Edges,
    Mu,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    ComplementEmbedding,
    DirectSearch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Verify { target, opts, format } => {
            let targets: Vec<Target> =
                if target == "all" { Target::ALL.to_vec() } else { target.split(',').map(str::parse).collect::<Result<_>>()? };
            let mut session = Session::new(opts.config())?;
            let fmt = match format {
                OutFormat::Json => Format::Json,
                OutFormat::Markdown => Format::Markdown,
            };
            let mut worst = 0;
            for t in targets {
                let report = session.run(t)?;
                println!("{}", export_report(&report, fmt));
                worst = worst.max(report.status.exit_code());
            }
            Ok(worst as u8)
        }
        Command::Targets => {
            for t in Target::ALL {
                let (lo, hi) = t.default_range();
                println!("{:<20} n = {lo}..={hi}  {}", t.name(), t.clause());
            }
            Ok(0)
        }
        Command::Extremal { n, objective, opts } => {
            let config = opts.config();
            config.validate()?;
            let report = match objective {
                Objective::Edges => edge_extremal(n, config.t_max.unwrap_or(n.saturating_sub(2)), &config.budget())?,
                Objective::Mu => spectral_extremal(
                    n,
                    config.tol,
                    CandidateSource::Sweep { budget: &config.budget(), options: &config.parallel() },
                )?,
            };
            let codes: Vec<String> =
                report.extremal_complements.members().map(|m| graph6::encode(&m.graph.without_isolated())).collect();
            print_json(&json!({
                "n": n,
                "optimum": report.optimum,
                "extremal_complements": codes,
                "pruning_bound_used": report.pruning_bound_used,
                "certificate_valid": report.certificate_valid,
                "instances_examined": report.instances_examined,
            }));
            Ok(0)
        }
        Command::Embed { pattern, host_order } => {
            let p = graph_arg(&pattern)?;
            let host = square_cycle_complement(host_order)?;
            let w = embed_subgraph(&p, &host)?;
            print_json(&json!({ "embeds": w.is_present(), "mapping": w.mapping }));
            Ok(0)
        }
        Command::Contains { graph, method } => {
            let g = graph_arg(&graph)?;
            let m = match method {
                MethodArg::ComplementEmbedding => Method::ComplementEmbedding,
                MethodArg::DirectSearch => Method::DirectSearch,
            };
            print_json(&serde_json::to_value(contains_square_hamilton(&g, m)?)?);
            Ok(0)
        }
        Command::Closure { graph, k } => {
            let g = graph_arg(&graph)?;
            let c = k_closure(&g, k);
            print_json(&json!({
                "complete": c.graph.is_complete(),
                "closure": graph6::encode(&c.graph),
                "joined": c.joined,
            }));
            Ok(0)
        }
        Command::Spectral { graph, tol } => {
            let g = graph_arg(&graph)?;
            print_json(&serde_json::to_value(spectral_radius(&g, tol)?)?);
            Ok(0)
        }
        Command::Enumerate { n, t, list, max_members } => {
            let budget = Budget { max_members, max_time: None };
            if list {
                for_each_member(n, t, &budget, |node| println!("{}", graph6::encode(&node.graph())))?;
            } else {
                let counts = count_by_size(n, t, &budget)?;
                print_json(&json!({ "n": n, "t": t, "count": counts[t], "by_size": counts }));
            }
            Ok(0)
        }
        Command::Cores { n, t_max } => {
            if t_max + 2 > n {
                bail!("t_max must be at most n - 2");
            }
            let cores = minimal_forbidden_cores(n, t_max, &Budget::unlimited())?;
            for m in cores.members() {
                println!("{}", graph6::encode(&m.graph.without_isolated()));
            }
            Ok(0)
        }
    }
}
