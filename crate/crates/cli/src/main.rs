use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use obstacle_cli::commands::{
    cmd_bounds, cmd_census, cmd_minimize, cmd_ordertype_gap, cmd_perturb, cmd_search, cmd_slab, cmd_sot,
    cmd_verify, BoundsArgs, CensusArgs, MinimizeArgs, OrderTypeGapArgs, PerturbArgs, SearchArgs, SlabArgs,
    SotArgs, VerifyArgs,
};
use obstacle_cli::report::write_atomic;
use obstacle_cli::{CliError, Report};

/// Experiments on obstacle representations of graphs.
///
/// Exit codes: 0 success, 1 I/O or other failure, 2 schema error,
/// 3 precondition failure, 4 budget exhausted.
#[derive(Parser, Debug)]
#[command(name = "obstacle", version)]
struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Add wall-clock timings to the report (makes it run-dependent).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that the obstacles realize the graph.
    Verify(VerifyArgs),
    /// Fewest face obstacles for the given embedding.
    Minimize(MinimizeArgs),
    /// Search random embeddings for few obstacles.
    Search(SearchArgs),
    /// Super-order type of one point sequence, or a comparison of two.
    Sot(SotArgs),
    /// Move points until the sequence is simple.
    Perturb(PerturbArgs),
    /// Per-slab minima against the whole instance.
    Slab(SlabArgs),
    /// Count distinct super-order types among random simple sequences.
    Census(CensusArgs),
    /// Numbers of the slab and counting arguments.
    Bounds(BoundsArgs),
    /// Look for equal order types with different minima.
    OrdertypeGap(OrderTypeGapArgs),
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Minimize(a) => cmd_minimize(a),
        Command::Search(a) => cmd_search(a),
        Command::Sot(a) => cmd_sot(a),
        Command::Perturb(a) => cmd_perturb(a),
        Command::Slab(a) => cmd_slab(a),
        Command::Census(a) => cmd_census(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::OrdertypeGap(a) => cmd_ordertype_gap(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli).and_then(|report| {
        let ms = cli.timings.then(|| start.elapsed().as_secs_f64() * 1000.0);
        let text = report.to_json(ms);
        for a in &report.artifacts {
            write_atomic(&a.path, &a.contents)?;
        }
        match &cli.out {
            Some(path) => write_atomic(path, &text),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("obstacle: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
