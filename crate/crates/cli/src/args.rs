use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mono_core::{FieldSpec, Method};

#[derive(Debug, Parser)]
#[command(
    name = "mono",
    version,
    about = "Largest monomial subideals, monomial closures and Betti tables"
)]
pub struct Cli {
    /// Output style: human-readable text or one record per line.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Ideal file to read.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,

    /// Name of the ideal inside the file.
    #[arg(long, value_name = "NAME")]
    pub ideal: String,
}

#[derive(Debug, Args)]
pub struct FieldOverride {
    /// Replace the field declared in the file (QQ, ZZ/p or p).
    #[arg(long, value_name = "FIELD")]
    pub field: Option<FieldSpec>,
}

#[derive(Debug, Args)]
pub struct Ceiling {
    /// Degree ceiling for the Artinian pure-power searches.
    #[arg(long, env = "MONO_DEGREE_CEILING", default_value_t = mono_core::mono::DEFAULT_DEGREE_CEILING)]
    pub ceiling: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of mono(I), the largest monomial subideal.
    Mono {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldOverride,
        /// Algorithm to report.
        #[arg(long, default_value = "gb", value_parser = parse_method)]
        method: Method,
        #[command(flatten)]
        ceiling: Ceiling,
        /// Attach explicit cofactors proving each generator lies in I.
        #[arg(long)]
        certify: bool,
        /// Skip the three-way agreement check on Artinian input.
        #[arg(long)]
        no_cross_check: bool,
    },
    /// Minimal generators of Mono(I), the smallest monomial ideal containing I.
    Upper {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldOverride,
    },
    /// Graded Betti table of R/I.
    Betti {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldOverride,
        /// Highest internal degree to compute (required unless I is Artinian).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// mono(I) next to I: Betti tables, regularity, levelness, socle degrees.
    Compare {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldOverride,
        /// Highest internal degree to compute (required unless I is Artinian).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Equal-colon witnesses and the Gorenstein verdict for a monomial ideal.
    Witness {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldOverride,
        /// Largest degree searched (default: top standard degree).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// mono(I) over several prime fields (and QQ), with the differences.
    Charscan {
        #[command(flatten)]
        source: Source,
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<u64>,
        /// Include QQ as the first row.
        #[arg(long)]
        qq: bool,
    },
    /// mono(I) by exhaustive membership tests (Artinian I only).
    Oracle {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldOverride,
        #[command(flatten)]
        ceiling: Ceiling,
    },
    /// Seeded randomized property suites.
    #[command(hide = true)]
    Selftest {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = mono_core::selftest::DEFAULT_INSTANCES)]
        instances: usize,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}
