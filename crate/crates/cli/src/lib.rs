//! Command-line surface: channel conversion, verification, tomography
//! simulation/reconstruction and fixed-matrix dumps over a stable JSON
//! interchange format.

pub mod commands;
pub mod document;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CmdResult, Representation, Scheme};

#[derive(Parser)]
#[command(
    name = "vecq",
    version,
    about = "Quantum channel representations and process tomography"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReprArg {
    Kraus,
    Choi,
    Superop,
}

impl From<ReprArg> for Representation {
    fn from(r: ReprArg) -> Self {
        match r {
            ReprArg::Kraus => Representation::Kraus,
            ReprArg::Choi => Representation::Choi,
            ReprArg::Superop => Representation::Superop,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Spt,
    Aapt,
    Eapt,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Spt => Scheme::Spt,
            SchemeArg::Aapt => Scheme::Aapt,
            SchemeArg::Eapt => Scheme::Eapt,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Convert a channel document between representations.
    Convert {
        #[arg(long, value_enum)]
        from: ReprArg,
        #[arg(long, value_enum)]
        to: ReprArg,
        /// Input document path, or - for stdin.
        #[arg(long = "in")]
        input: String,
        /// Output document path, or - for stdout.
        #[arg(long)]
        out: String,
        /// Kraus-extraction eigenvalue cutoff (default: 1e-12 * tr D).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Check CP, TP and unitality; prints a JSON report.
    Verify {
        #[arg(long = "in")]
        input: String,
        /// Verification tolerance (default 1e-10).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Simulate measurement data or reconstruct a channel from it.
    Tomo {
        #[command(subcommand)]
        action: TomoAction,
    },
    /// Write SWAP/reshuffle matrices or the maximally entangled state.
    Dump {
        #[command(subcommand)]
        what: DumpWhat,
    },
}

#[derive(Subcommand)]
enum TomoAction {
    /// Run a channel document through a tomography experiment.
    Simulate {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        /// Channel document path, or - for stdin.
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        out: String,
        /// Sample multinomial frequencies instead of exact probabilities
        /// (spt only).
        #[arg(long)]
        shots: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run document providing inputs and POVM (spt); defaults to the
        /// built-in presets for the channel dimension.
        #[arg(long)]
        fixtures: Option<String>,
    },
    /// Invert a run document back to a superoperator document.
    Reconstruct {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        out: String,
        /// Verification tolerance for the attached report (default 1e-10).
        #[arg(long)]
        tol: Option<f64>,
        /// Solve with a truncated pseudo-inverse instead of failing on
        /// ill-conditioned sets.
        #[arg(long)]
        pseudo_inverse: bool,
    },
}

#[derive(Subcommand)]
enum DumpWhat {
    /// SWAP matrix S(r, p).
    Swap {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Reshuffling matrix R(p, q, r, s).
    Reshuffle {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Maximally entangled state on a d x d bipartite space.
    Bell {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

fn dispatch(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Convert {
            from,
            to,
            input,
            out,
            tol,
        } => commands::cmd_convert(from.into(), to.into(), &input, &out, tol),
        Command::Verify { input, tol } => commands::cmd_verify(&input, tol),
        Command::Tomo { action } => match action {
            TomoAction::Simulate {
                scheme,
                input,
                out,
                shots,
                seed,
                fixtures,
            } => commands::cmd_tomo_simulate(
                scheme.into(),
                &input,
                &out,
                shots,
                seed,
                fixtures.as_deref(),
            ),
            TomoAction::Reconstruct {
                scheme,
                input,
                out,
                tol,
                pseudo_inverse,
            } => commands::cmd_tomo_reconstruct(scheme.into(), &input, &out, tol, pseudo_inverse),
        },
        Command::Dump { what } => match what {
            DumpWhat::Swap { r, p, out } => commands::cmd_dump_swap(r, p, &out),
            DumpWhat::Reshuffle { p, q, r, s, out } => {
                commands::cmd_dump_reshuffle(p, q, r, s, &out)
            }
            DumpWhat::Bell { d, out } => commands::cmd_dump_bell(d, &out),
        },
    }
}

/// Parses arguments and runs the command, returning the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}
