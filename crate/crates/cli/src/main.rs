//! `hga`: batch front-end over `hga-core`. Every command reads one JSON
//! document, runs one computation and writes one JSON report.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Report, Status};

#[derive(Parser, Debug)]
#[command(name = "hga", version, about = "Homotopy G-algebras, twisting elements and deformations over GF(2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: Config,
}

/// Truncations and run settings shared by all commands.
#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Input document (JSON).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Report destination; standard output when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Truncation T of twisting elements (components m^3..m^T).
    #[arg(long = "trunc-T", global = true, default_value_t = 6)]
    pub trunc_t: usize,
    /// Largest brace arity K in axiom sweeps.
    #[arg(long = "arity-K", global = true, default_value_t = 3)]
    pub arity_k: usize,
    /// Word length L of bar constructions.
    #[arg(long = "bar-L", global = true, default_value_t = 4)]
    pub bar_l: usize,
    /// Order N of star products.
    #[arg(long = "order-N", global = true, default_value_t = 4)]
    pub order_n: usize,
    /// Arity window of A(∞) checks.
    #[arg(long, global = true, default_value_t = 6)]
    pub window: usize,
    /// Largest n in HH^{n,2-n} for formality.
    #[arg(long, global = true, default_value_t = 6)]
    pub nmax: usize,
    /// Total operand arity bound in axiom sweeps.
    #[arg(long, global = true, default_value_t = 5)]
    pub weight: usize,
    /// Node budget of obstruction searches.
    #[arg(long, global = true, default_value_t = hga_core::twist::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Sampling seed; never affects exact checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Version {
    V1,
    V2,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructKind {
    Quantize,
    Trivialize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Carrier {
    Stasheff,
    Formal,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Structural validation of every section of the input.
    Validate,
    /// dg algebra laws of `algebra`.
    VerifyDga,
    /// dg coalgebra laws of `coalgebra`.
    VerifyDgc,
    /// Truncated bar construction of `algebra`.
    Bar {
        /// Accept algebras that are not connected and 1-reduced.
        #[arg(long)]
        non_reduced: bool,
    },
    /// Truncated cobar construction of `coalgebra`.
    Cobar,
    /// Brown's condition for the universal twisting cochains.
    VerifyBrown {
        #[arg(long)]
        non_reduced: bool,
    },
    /// hGa axioms and low-dimensional identities of the Hochschild braces.
    VerifyHga,
    /// Lie identities of the bracket induced by cup_1.
    VerifyLie,
    /// Multiplication on the bar construction of the Hochschild hGa.
    BarBialgebra {
        /// Letters are all cochains of arity at most this.
        #[arg(long, default_value_t = 1)]
        letter_arity: usize,
    },
    /// dim HH^{m,n}.
    Hochschild {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: i32,
    },
    /// Twisting condition of `twist`.
    CheckTwist {
        #[arg(value_enum, default_value_t = Version::V1)]
        version: Version,
    },
    /// `gauge * twist`.
    Act,
    /// Perturbation of `twist` at level n by `cochain`.
    Perturb {
        #[arg(long)]
        level: usize,
    },
    /// Obstruction class of the next extension step.
    Obstruct {
        #[arg(value_enum)]
        kind: ObstructKind,
    },
    /// Extends a class of the first level to a twisting element.
    Quantize {
        #[arg(long, value_enum, default_value_t = Carrier::Stasheff)]
        carrier: Carrier,
        /// Class coordinates as a bit string; overrides the document's `class`.
        #[arg(long)]
        class: Option<String>,
    },
    /// Searches a gauge killing `twist` (or moving it to `target`).
    Trivialize,
    /// Associativity of `star` order by order.
    CheckStar,
    /// Gauge equation between `star` and `star_prime` via `gauge_series`.
    CheckGauge,
    /// `star` as a formal twisting element.
    StarToTwist,
    /// A(∞) relations of `ainf`.
    CheckAinf,
    /// Morphism relations of `morphism: ainf -> ainf_target`.
    CheckAinfMorphism,
    /// Bar construction of `ainf`.
    AinfBar,
    /// Isomorphism, weak equivalence or neither.
    ClassifyMorphism,
    /// `ainf` over `algebra` as a twisting element.
    StasheffToTwist,
    /// HH^{n,2-n} for 3 <= n <= nmax.
    Formality,
    /// HH^2, HH^3 and quantization verdicts for star products.
    GerstenhaberReport,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::VerifyDga => "verify-dga",
            Command::VerifyDgc => "verify-dgc",
            Command::Bar { .. } => "bar",
            Command::Cobar => "cobar",
            Command::VerifyBrown { .. } => "verify-brown",
            Command::VerifyHga => "verify-hga",
            Command::VerifyLie => "verify-lie",
            Command::BarBialgebra { .. } => "bar-bialgebra",
            Command::Hochschild { .. } => "hochschild",
            Command::CheckTwist { .. } => "check-twist",
            Command::Act => "act",
            Command::Perturb { .. } => "perturb",
            Command::Obstruct { .. } => "obstruct",
            Command::Quantize { .. } => "quantize",
            Command::Trivialize => "trivialize",
            Command::CheckStar => "check-star",
            Command::CheckGauge => "check-gauge",
            Command::StarToTwist => "star-to-twist",
            Command::CheckAinf => "check-ainf",
            Command::CheckAinfMorphism => "check-ainf-morphism",
            Command::AinfBar => "ainf-bar",
            Command::ClassifyMorphism => "classify-morphism",
            Command::StasheffToTwist => "stasheff-to-twist",
            Command::Formality => "formality",
            Command::GerstenhaberReport => "gerstenhaber-report",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report: Report = commands::run(&cli.command, &cli.config);
    let code = report.status.exit_code();
    let text = report.to_json();
    match &cli.config.output {
        Some(path) => {
            if let Err(e) = report::write_atomically(path, &text) {
                eprintln!("hga: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            let _ = writeln!(std::io::stdout(), "{text}");
        }
    }
    if report.status == Status::InputError {
        if let Some(e) = &report.error {
            eprintln!("hga: {e}");
        }
    }
    ExitCode::from(code)
}
