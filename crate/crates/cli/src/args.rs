use std::path::PathBuf;

use as_census::field::DEFAULT_ENUMERATION_CAP;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "as-census", version, about = "Exact p-rank statistics for Artin-Schreier covers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Args, Debug)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for independent computations (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Cap on the size of any exhaustive enumeration.
    #[arg(long, env = "AS_CENSUS_BUDGET", default_value_t = DEFAULT_ENUMERATION_CAP, global = true)]
    pub budget: u64,

    /// Decimal places for rendered decimals.
    #[arg(long, default_value_t = 6, global = true)]
    pub precision: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the partitions indexing the p-rank strata.
    Partitions {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = FamilyArg::Omega)]
        family: FamilyArg,
    },
    /// Limiting p-rank densities.
    #[command(subcommand)]
    Density(DensityCmd),
    /// Exact finite-field proportions next to their limits.
    Converge {
        /// Geometric mode: fixed prime, q = p^k for each listed k.
        #[arg(long, requires = "q_exponents")]
        p: Option<u64>,
        #[arg(long)]
        d: u32,
        #[arg(long, value_delimiter = ',', conflicts_with = "primes")]
        q_exponents: Vec<u32>,
        /// Arithmetic mode: census over each prime field.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        /// Only report this r.
        #[arg(long)]
        r: Option<u32>,
    },
    /// Count admissible functions over F_{p^n}.
    Census {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// A single multiplicity vector as a partition of d + 2, e.g. 5+3+2.
        #[arg(long)]
        kappa: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Constructive)]
        mode: ModeArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum DensityCmd {
    /// M_p(r+1, d+2) / M_p(d+2), the large-q limit.
    Geometric {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u32,
    },
    /// T(r+1, d+2) / T(d+2), the large-p limit.
    Arithmetic {
        #[arg(long)]
        d: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Omega,
    Theta,
    Mp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Constructive,
    Naive,
    Both,
}
