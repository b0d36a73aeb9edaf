//! `quintrin`: exact computations with quintic trinomials from the command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or input error,
//! 3 a computation was inconclusive at the configured precision.

mod commands;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use config::{Overrides, RunConfig, THREADS_ENV};

#[derive(Parser, Debug)]
#[command(name = "quintrin", version, about = "Quintic trinomials with a root in a fixed quintic field")]
struct Cli {
    /// `key = value` file with run settings.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Coordinate bound for point searches.
    #[arg(long = "height", global = true, value_name = "H")]
    height_bound: Option<u64>,
    /// Working precision for root isolation, in bits.
    #[arg(long = "precision", global = true, value_name = "BITS")]
    precision_bits: Option<u32>,
    /// Largest denominator accepted by rational reconstruction.
    #[arg(long, global = true, value_name = "N")]
    denominator_bound: Option<String>,
    /// Primes below this bound feed the Galois heuristic.
    #[arg(long, global = true, value_name = "P")]
    prime_bound: Option<u64>,
    /// Worker threads; overrides the environment variable.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Write results here instead of standard output.
    #[arg(long, short, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Equivalence class, discriminant, irreducibility and Galois heuristic of x^5 + a x + b.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Equations of the curve attached to a quintic field.
    Curve(FieldArgs),
    /// Bounded search for points on the curve; one JSON record per line.
    Search(FieldArgs),
    /// Certified search for a root of f in Q[x]/(g).
    RootInField {
        /// Ascending coefficients of the field polynomial, e.g. "-18,0,0,0,0,1".
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Ascending coefficients of the polynomial to solve.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Members of the explicit trinomial families.
    Family {
        kind: FamilyKind,
        #[arg(long, allow_hyphen_values = true)]
        param: String,
    },
    #[command(subcommand)]
    Surface(SurfaceCommand),
    #[command(subcommand)]
    Elliptic(EllipticCommand),
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct FieldArgs {
    /// Field Q[x]/(x^5 + t x + t).
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Field Q[x]/(g), ascending coefficients.
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyKind {
    Weber,
    Dihedral,
    Sw2,
    Pair,
}

#[derive(Subcommand, Debug)]
enum SurfaceCommand {
    /// Membership, recovered t and curve consistency of a point.
    Check {
        /// Comma-separated a,b,c,d (rationals allowed).
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Point on one of the rational curves R1..R5.
    Curve {
        #[arg(long)]
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
}

#[derive(Subcommand, Debug)]
enum EllipticCommand {
    /// Invariants of a Weierstrass curve given as "a4,a6" or "a1,a2,a3,a4,a6".
    Info {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
    },
    /// Quadratic twist relation between two curves, or the twist of one curve by d.
    Twist {
        #[arg(long, allow_hyphen_values = true)]
        e1: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "d", required_unless_present = "d")]
        e2: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Run the full reproduction suite and print a pass/fail table.
    Paper,
}

/// Command failure, mapped to an exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Failed(String),
    Inconclusive(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Failed(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Inconclusive(_) => 3,
        }
    }
}

impl From<quintrin_core::Error> for Failure {
    fn from(e: quintrin_core::Error) -> Self {
        use quintrin_core::Error as E;
        match e {
            E::NeedPrecision { .. } => Failure::Inconclusive(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let flags = Overrides {
        height_bound: cli.height_bound,
        precision_bits: cli.precision_bits,
        denominator_bound: cli.denominator_bound,
        prime_bound: cli.prime_bound,
        threads: cli.threads,
        output: cli.output,
    };
    let cfg = RunConfig::load(cli.config.as_deref(), std::env::var(THREADS_ENV).ok(), flags).map_err(Failure::Usage)?;
    if let Some(n) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Failed(format!("thread pool: {e}")))?;
    }
    let mut out: Box<dyn Write> = match &cfg.output {
        Some(path) => Box::new(std::io::BufWriter::new(
            std::fs::File::create(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    };
    let result = commands::dispatch(cli.command, &cfg, &mut out);
    out.flush().map_err(|e| Failure::Failed(e.to_string()))?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Failed(m) => eprintln!("failed: {m}"),
                Failure::Inconclusive(m) => eprintln!("inconclusive: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
