//! `invdeg`: command-line front end for the multidegree, ML-degree and
//! verification routines of `invdeg-core`.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use invdeg_core::symbolic::{VerifyMode, DEFAULT_SYMBOLIC_CAP};
use invdeg_core::Error;

use commands::VerifyParams;
use report::{Format, Report};

/// Above this size the 2ⁿ subset enumeration dominates the running time.
const LARGE_N_WARNING: usize = 22;

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "invdeg", version, about = "Exact multidegrees, SDP degrees and ML-degrees for inverse symmetric matrices")]
struct Cli {
    /// Worker threads (defaults to all available cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of ψ_i and ψ_{i,j}.
    Psi {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// β, C(Σ), C(Γ) and the multidegree identity check.
    Multidegree {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// ML-degree table, or φ(·,d) for a fixed d.
    Mldeg(MldegArgs),
    /// Verification suite for the inverse-graph equations.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["n_max", "d"])))]
struct MldegArgs {
    /// Tabulate φ(n,d) for all n ≤ N and all d.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n_max: Option<u64>,
    /// Fix the dimension d.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    d: Option<u64>,
    /// Interpolate φ(·,d) as a polynomial in n.
    #[arg(long, requires = "d")]
    poly: bool,
    /// Number of consecutive n for the finite-difference check (default d + 3).
    #[arg(long, requires = "d")]
    window: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Numeric,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Numeric)]
    mode: ModeArg,
    /// Random points sampled in numeric checks.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest n for symbolic computations.
    #[arg(long, default_value_t = DEFAULT_SYMBOLIC_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    symbolic_cap: u64,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::PolynomialityViolated { .. } | Error::NonzeroResidual { .. } => EXIT_VERIFICATION,
        Error::InvalidArgument(_) | Error::DimensionOutOfRange { .. } => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn run(cli: &Cli) -> invdeg_core::Result<Report> {
    match &cli.command {
        Command::Psi { n } => commands::psi(*n as usize),
        Command::Multidegree { n } => {
            let n = *n as usize;
            if n > LARGE_N_WARNING {
                eprintln!("warning: n = {n} enumerates 2^{n} subsets and may take a long time");
            }
            commands::multidegree(n)
        }
        Command::Mldeg(a) => match (a.n_max, a.d) {
            (Some(n_max), _) => commands::ml_rows(n_max as usize),
            (None, Some(d)) => {
                let d = d as usize;
                commands::ml_single_dimension(d, a.poly, a.window.unwrap_or(d + 3))
            }
            (None, None) => unreachable!("clap enforces the target group"),
        },
        Command::Verify(a) => {
            let mode = match a.mode {
                ModeArg::Symbolic => VerifyMode::Symbolic,
                ModeArg::Numeric => VerifyMode::Numeric,
            };
            commands::verify(&VerifyParams {
                n: a.n as usize,
                mode,
                trials: a.trials as usize,
                seed: a.seed,
                symbolic_cap: a.symbolic_cap as usize,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads as usize)
            .build_global()
        {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    }

    match run(&cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(report.render(cli.format).as_bytes());
            let _ = stdout.flush();
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                for c in report.checks.iter().filter(|c| !c.pass) {
                    eprintln!("check failed: {}: {}", c.name, c.detail);
                }
                ExitCode::from(EXIT_VERIFICATION)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
