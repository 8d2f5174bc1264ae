use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "torsor", version, about = "Exact Fourier analysis of weighted finite abelian groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fourier transform of a weighted group.
    Ft(Input),
    /// Inverse transform of dual weights (fails if the result is not rational).
    Ift(Input),
    /// Drop the trivial-character component.
    Reduce(Input),
    /// Iterated direct sum of weighted groups.
    Sum {
        #[arg(long = "input", required = true, num_args = 1)]
        inputs: Vec<PathBuf>,
    },
    /// Multiset of maximal special subgroups.
    Ms(Input),
    /// Count lens-space summands in a weighted group.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        /// Candidates as `p:q[,p:q...]`.
        #[arg(long, value_delimiter = ',', required = true)]
        lens: Vec<String>,
    },
    /// Invariants of a single lens space.
    Lens {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, value_enum)]
        emit: Emit,
    },
    /// Classify all lens spaces with p <= pmax.
    ClassifyLens {
        #[arg(long)]
        pmax: u64,
    },
    /// Alexander polynomial operations.
    #[command(subcommand)]
    Alex(Alex),
}

#[derive(Args, Debug)]
pub struct Input {
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    /// Transformed torsion.
    Dual,
    /// Reduced d-invariants as a weighting.
    Time,
    /// The integer weighting f_{p,q}.
    F,
}

#[derive(Subcommand, Debug)]
pub enum Alex {
    /// Alexander polynomial of the (p,q) torus knot.
    Torus {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Whether the torus polynomial divides the given one.
    Divides {
        /// Coefficients, constant term first.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        poly: Vec<i64>,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Transformed torsion of n-surgery and its zero set.
    Surgery {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        poly: Vec<i64>,
        #[arg(long)]
        n: u64,
    },
}
