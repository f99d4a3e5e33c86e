use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "luqikeng", version, about = "Zeros of the Bergman kernel of Fock-Bargmann-Hartogs domains")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    /// Worker threads; defaults to the number of logical CPUs.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Width of reported root enclosures, as `p/q` or a decimal such as `1e-9`.
    #[arg(long, global = true, default_value = "1/1000000")]
    pub width: String,
    /// Leave the `generated_at` field out of JSON output.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    /// Upper bound on m when searching for m_0(n).
    #[arg(long, global = true, env = "LUQIKENG_MCAP", hide_env_values = true)]
    pub m_cap: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of A_{n,m}, lowest degree first.
    Anm(IndexArgs),
    /// Certified enclosures of every root of A_{n,m}.
    Roots(IndexArgs),
    /// m_0(n), the least m for which D_{n,m} is Lu Qi-Keng.
    M0(M0Args),
    /// m_0(n) for n = 1..15 as a two-row CSV table.
    Table1,
    /// Root ordering relation between two polynomials (does g interlace or alternate f).
    Interlace(InterlaceArgs),
    /// Structural identities and interlacing theorems on a grid; exit 1 on any violation.
    Verify(VerifyArgs),
    /// m_0(n) against f(n) = nearest integer of (n+1) ln(n+1), and r_{n,m} for small m.
    Conjectures(ConjecturesArgs),
    /// Evaluate the Bergman kernel of D_{n,m} at a pair of points.
    KernelEval(KernelArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct IndexArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
}

#[derive(Debug, Clone, Args)]
pub struct M0Args {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_from: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_to: u32,
    /// Include every verdict below m_0 in the output.
    #[arg(long)]
    pub certify: bool,
}

#[derive(Debug, Clone, Args)]
pub struct InterlaceArgs {
    /// f as `n:m` for A_{n,m}, or `c0,c1,...` for an integer polynomial.
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    /// g, in the same notation as f.
    #[arg(long, allow_hyphen_values = true)]
    pub g: String,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub m_max: u32,
    /// Shift one coefficient, `n:m:i[:delta]`, to exercise the failure path.
    #[arg(long, hide = true)]
    pub corrupt: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ConjecturesArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
}

#[derive(Debug, Clone, Args)]
pub struct KernelArgs {
    #[command(flatten)]
    pub index: IndexArgs,
    /// Weight mu; a value in the points file takes precedence.
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    /// JSON file with mu, z, zeta, z_prime, zeta_prime (complex numbers as
    /// [re, im]), or an array of such objects.
    #[arg(long, conflicts_with_all = ["pair", "zero_witness"])]
    pub points: Option<PathBuf>,
    /// The same JSON given inline.
    #[arg(long, conflicts_with = "zero_witness")]
    pub pair: Option<String>,
    /// Use the pair on which K vanishes, built from the largest root of A_{n,m}.
    #[arg(long)]
    pub zero_witness: bool,
    /// Cross-check against the power series.
    #[arg(long)]
    pub oracle: bool,
}
