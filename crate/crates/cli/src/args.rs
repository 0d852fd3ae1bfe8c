use clap::{Parser, Subcommand, ValueEnum};

use penta5_core::congruence::DEFAULT_BUDGET;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "penta5",
    version,
    about = "Exact q-series checks for k-colored partition congruences modulo powers of 5"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest coefficient index `A n + B` examined by congruence checks.
    #[arg(long, global = true, env = "PENTA5_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand an expression to a number of terms.
    Expand {
        expr: String,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(0..))]
        terms: i64,
        /// Reduce coefficients into [0, M).
        #[arg(long = "mod", value_parser = clap::value_parser!(u64).range(2..))]
        modulus: Option<u64>,
    },
    /// Check an identity "lhs == rhs" coefficientwise.
    VerifyIdentity {
        identity: String,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(i64).range(0..))]
        terms: i64,
        #[arg(long = "mod", value_parser = clap::value_parser!(u64).range(2..))]
        modulus: Option<u64>,
    },
    /// Check p_-k(A n + B) ≡ 0 (mod 5^alpha) for n = 0..=count.
    VerifyCongruence {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long = "a", value_parser = clap::value_parser!(u64).range(1..))]
        modulus: u64,
        #[arg(long = "b")]
        residue: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        alpha: u32,
        #[arg(long, default_value_t = 200)]
        count: u64,
    },
    /// Run a theorem driver: 1.1, 1.2, 1.3, mod25, watson, corollary, gf4.1, gf4.4, gf4.6 or all.
    Theorem {
        id: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        alpha_max: u32,
        #[arg(long, default_value_t = 1)]
        r_max: u32,
        /// Largest n per instance; the budget applies as well.
        #[arg(long)]
        count: Option<u64>,
        /// Rows of the generating-function theorems.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        j_max: u32,
        /// Terms compared for the generating-function theorems.
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
    },
    /// Print a window of m, a, b or c.
    Matrix {
        family: String,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        cols: u32,
        /// Print 5-adic valuations instead of entries.
        #[arg(long)]
        valuations: bool,
    },
    /// Keep the exponents ≡ r (mod m) of an expansion.
    Huff {
        expr: String,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        modulus: u32,
        #[arg(long, default_value_t = 0)]
        residue: u32,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(i64).range(0..))]
        terms: i64,
        /// Also divide out q^r and substitute q^m -> q.
        #[arg(long)]
        collapse: bool,
    },
    /// Scan residues B mod m with 5^alpha | p_-k(m n + B) for all n <= count.
    Search {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k_min: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        alpha: u32,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(2..))]
        modulus: u64,
        #[arg(long, default_value_t = 400)]
        count: u64,
    },
    /// Random consistency checks of the arithmetic core.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: u32,
    },
}
