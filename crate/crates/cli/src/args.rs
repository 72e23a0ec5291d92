use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

/// Largest modulus accepted by `msect`, `s-section` and the verify sweeps.
pub const MAX_M: i64 = 64;
/// Largest number of series terms any command will print or compare.
pub const MAX_TERMS: usize = 1000;
/// Largest `|index|` for index sweeps and triangle rows.
pub const MAX_N: i64 = 200;
/// Largest `|r|`, `|s|` bound for signature grids.
pub const MAX_R: i64 = 10;

#[derive(Parser, Debug)]
#[command(name = "msection", version, about = "Exact m-section of Horadam sequences")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Number of series terms to print or compare.
    #[arg(long, global = true)]
    pub n_terms: Option<usize>,

    /// Seed for randomized sweeps; without it every sweep is a fixed grid.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Never touch the network, even if fetching is enabled.
    #[arg(long, global = true)]
    pub offline: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Seeds, signature and generating function of part l (default: every part)
    /// of the m-section of H(p,q;r,s;n).
    #[command(allow_negative_numbers = true)]
    Msect {
        p: BigInt,
        q: BigInt,
        r: BigInt,
        s: BigInt,
        m: i64,
        l: Option<i64>,
    },
    /// Generating function and first terms of H(p,q;r,s;n).
    #[command(allow_negative_numbers = true)]
    Ogf { p: BigInt, q: BigInt, r: BigInt, s: BigInt },
    /// Generating function of S(m·n + l, y) (default: every l).
    SSection { m: i64, l: Option<i64> },
    /// Run an identity sweep.
    Verify(VerifyArgs),
    /// Rows 0..=N of the Lucas-polynomial triangle T(n,k).
    Triangle {
        #[arg(default_value_t = 10)]
        rows: usize,
    },
    /// Compare a generated sequence with an OEIS term file.
    ///
    /// Generators: h:P,Q,R,S  h01:R,S  msect:P,Q,R,S,M,L  c-sign:S  triangle  s-coeffs  r-coeffs
    OeisCheck(OeisArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Cassini,
    Bisection,
    Master,
    SSection,
    H01Section,
    AltBisection,
    VandermondeCross,
    Triangle,
    QMatrix,
    GhmlFromGsml,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Largest modulus m.
    #[arg(long)]
    pub m_max: Option<i64>,
    /// Smallest index n.
    #[arg(long, allow_negative_numbers = true)]
    pub n_min: Option<i64>,
    /// Largest index n.
    #[arg(long)]
    pub n_max: Option<i64>,
    /// Bound on |r| and |s| for signature grids.
    #[arg(long)]
    pub r_max: Option<i64>,
    /// Number of random generating functions for `vandermonde-cross` with `--seed`.
    #[arg(long, default_value_t = 25)]
    pub samples: usize,
}

#[derive(Args, Debug)]
pub struct OeisArgs {
    /// Sequence id, e.g. A014445 or a14445.
    pub a_number: String,
    /// What to compare against the term file (run with --help for the syntax).
    pub generator: String,
    /// Fixture terms to skip before comparing.
    #[arg(long, default_value_t = 0)]
    pub skip: usize,
    /// Allow downloading missing term files.
    #[arg(long, env = "MSECTION_OEIS_FETCH")]
    pub fetch: bool,
    /// Cache directory for downloaded term files.
    #[arg(long, env = "MSECTION_OEIS_CACHE")]
    pub cache_dir: Option<PathBuf>,
}
