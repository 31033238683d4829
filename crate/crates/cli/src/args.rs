use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "pgraph",
    version,
    about = "Power graphs of Z_m x Z_n and their exact spectra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// How characteristic polynomials are computed.
    #[arg(long, value_enum, default_value_t = Method::Auto, global = true)]
    pub method: Method,

    #[arg(long = "output-format", value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long = "output", global = true)]
    pub output: Option<PathBuf>,

    /// Refuse groups with more elements than this.
    #[arg(long = "max-order", default_value_t = 20_000, global = true)]
    pub max_order: u64,

    /// Residual used when a closed-form spectrum is reported.
    #[arg(long, value_enum, default_value_t = Residual::Oracle, global = true)]
    pub residual: Residual,

    /// Suppress diagnostics on stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,

    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    pub threads: usize,

    /// Accepted for compatibility; nothing here is random.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List cyclic subgroups.
    Subgroups(Pair),
    /// Emit the adjacency structure.
    Graph(Pair),
    /// Emit the quotient matrix of the generator-class partition.
    Quotient(Pair),
    /// Exact characteristic polynomial.
    Charpoly(Pair),
    /// Eigenvalues with multiplicities.
    Spectrum(Pair),
    /// Cross-check every method and invariant for one group.
    Verify(Pair),
    /// Run the cross-checks over a rectangle of groups.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Pair {
    pub m: u64,
    pub n: u64,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Inclusive range such as `1..8`.
    #[arg(long)]
    pub m: Span,
    #[arg(long)]
    pub n: Span,
    /// Write 0 in the millis column so output is reproducible.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Direct,
    Quotient,
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Residual {
    Oracle,
    Printed,
}

/// Nonempty inclusive range of positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: u64,
    pub hi: u64,
}

impl Span {
    pub fn values(&self) -> RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
            None => (s, s),
        };
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad bound {t:?}: {e}"))
        };
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo == 0 {
            return Err("ranges start at 1".into());
        }
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Span { lo, hi })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("1..8".parse(), Ok(Span { lo: 1, hi: 8 }));
        assert_eq!("2..=3".parse(), Ok(Span { lo: 2, hi: 3 }));
        assert_eq!("5".parse(), Ok(Span { lo: 5, hi: 5 }));
        assert!("3..2".parse::<Span>().is_err());
        assert!("0..2".parse::<Span>().is_err());
        assert!("a..2".parse::<Span>().is_err());
    }

    #[test]
    fn parses_flags_after_subcommand() {
        let cli = Cli::try_parse_from([
            "pgraph",
            "charpoly",
            "3",
            "6",
            "--method",
            "quotient",
            "--output-format",
            "json",
        ])
        .unwrap();
        assert_eq!(cli.global.method, Method::Quotient);
        assert_eq!(cli.global.format, Format::Json);
        assert_eq!(cli.global.max_order, 20_000);
    }
}
