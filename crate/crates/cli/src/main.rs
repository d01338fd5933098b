mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

/// Jet-scheme invariants of determinantal loci.
#[derive(Parser, Debug)]
#[command(name = "jetloci", version)]
struct Cli {
    /// Output format; only JSON is stable.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

/// A matrix from a file, an inline literal, or standard input.
#[derive(Args, Debug, Clone)]
pub struct MatrixInput {
    /// Read the matrix (text or JSON format) from this file.
    #[arg(long, conflicts_with = "matrix")]
    file: Option<PathBuf>,
    /// Inline matrix text; `;` separates lines.
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BnArgs {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    l: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smith-type normal form U A V = D.
    Snf {
        #[command(flatten)]
        input: MatrixInput,
    },
    /// Partition type of a matrix, with minor-vanishing by size.
    Type {
        #[command(flatten)]
        input: MatrixInput,
    },
    /// Jet membership in W^r_d under the determinantal model.
    Member {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        r: u32,
        /// Auxiliary degree; inferred from the matrix shape when absent.
        #[arg(long)]
        e: Option<u32>,
    },
    /// Section count sum_{k<=j+1} n_k of a type, or of a matrix's type
    /// checked against its kernel.
    H0 {
        /// Partition literal such as "(1,2)@3"; a matrix is read otherwise.
        #[arg(long = "type")]
        lambda: Option<String>,
        /// Level j (default: cap - 1).
        #[arg(long)]
        level: Option<u32>,
        #[command(flatten)]
        input: MatrixInput,
    },
    /// Log canonical threshold: closed form for (g,d,r,l), or the jet
    /// formula from jet-locus dimensions.
    Lct {
        #[arg(long, requires_all = ["d", "r", "l"], conflicts_with_all = ["ambient", "jet_dims"])]
        g: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
        /// Ambient dimension for the jet formula.
        #[arg(long, requires = "jet_dims")]
        ambient: Option<u32>,
        /// Jet-locus dimensions at m = 0, 1, ...
        #[arg(long, value_delimiter = ',', requires = "ambient", allow_hyphen_values = true)]
        jet_dims: Option<Vec<i64>>,
    },
    /// Dimension bounds.
    Bounds {
        #[command(subcommand)]
        which: BoundsCommand,
    },
    /// Enumerate a matrix jet space over F_p and check every criterion.
    Census {
        /// One or more primes; two or more exhaustive runs add an exponent fit.
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<u64>,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        m: u32,
        /// Minor size; every legal size when absent.
        #[arg(long)]
        s: Option<usize>,
        /// Sample this many matrices instead of enumerating.
        #[arg(long)]
        random: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        shards: Option<usize>,
        /// Maximum matrices per run (overrides JETLOCI_BUDGET).
        #[arg(long)]
        budget: Option<u128>,
        /// Print per-type counts as CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Multiplicity of the n x n determinant at the zero matrix.
    Mult {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 8)]
        horizon: u32,
        /// Levels with at most this many arcs are enumerated.
        #[arg(long, default_value_t = 4096)]
        exhaustive_limit: u128,
    },
    /// Check the square-sum identity on every partition in range.
    Identity {
        #[arg(long)]
        l_max: usize,
        #[arg(long)]
        part_max: u32,
    },
    /// Tag singularities from jet dimensions over the singular locus.
    Classify {
        /// Ambient dimension (divisor) or dimension (lci).
        #[arg(long, required_unless_present = "theta_g")]
        n: Option<u32>,
        /// Dimensions at m = 1, 2, ...
        #[arg(long, value_delimiter = ',', conflicts_with = "theta_g", allow_hyphen_values = true)]
        dims: Vec<i64>,
        #[arg(long, value_enum, default_value = "divisor")]
        kind: Kind,
        /// Use the theta divisor of a genus-g curve instead of --n/--dims.
        #[arg(long)]
        theta_g: Option<u32>,
        #[arg(long, requires = "theta_g")]
        hyperelliptic: bool,
        #[arg(long, default_value_t = 5)]
        horizon: u32,
    },
}

#[derive(Subcommand, Debug)]
enum BoundsCommand {
    /// Maximized singular-fiber bound of the theta divisor.
    ThetaFiber {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        m: u32,
    },
    /// Bound on one type stratum of theta-divisor jets.
    ThetaStratum {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        m: u32,
        #[arg(long = "type")]
        lambda: String,
    },
    /// Bound on one type stratum of W^r_d jets.
    Stratum {
        #[command(flatten)]
        bn: BnArgs,
        #[arg(long)]
        m: u32,
        #[arg(long = "type")]
        lambda: String,
        /// Petri defects d_1, d_2, ...
        #[arg(long, value_delimiter = ',')]
        defects: Vec<u32>,
        /// Flag signature kappa_1, kappa_2, ...
        #[arg(long, value_delimiter = ',')]
        signature: Option<Vec<usize>>,
    },
    /// Martens bound on dim W^r_d.
    Martens {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        hyperelliptic: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Divisor,
    Lci,
}

/// Failure with its exit status.
pub enum Failure {
    /// Domain error from the library: exit 1.
    Domain(String),
    /// Unreadable or malformed input: exit 2.
    Usage(String),
}

impl From<jetloci::Error> for Failure {
    fn from(e: jetloci::Error) -> Self {
        match e {
            jetloci::Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(cli.command, cli.format) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
