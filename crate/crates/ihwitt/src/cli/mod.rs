//! Command-line front end behind the `ihw` binary.
//!
//! Every command produces a [`RunReport`], printed either as a human table
//! or, with `--json`, as a deterministic JSON document.

mod commands;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::catalog::CatalogError;
use crate::exactalg::AlgebraError;
use crate::formulas::FormulaError;
use crate::ihcore::IhError;
use crate::simplicial::ComplexError;
use crate::witt::WittError;

pub use commands::execute;
pub use report::{render_human, ResultLevel, RunReport, RunResult, WittColumn};

/// `ihw`: intersection homology, the Witt condition and Witt bordism.
#[derive(Clone, Debug, Parser)]
#[command(name = "ihw", version, about)]
pub struct Cli {
    /// Emit the machine-readable report instead of the human table.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Where a space comes from.
#[derive(Clone, Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SpaceSource {
    /// Built-in space name (see `ihw catalog manifest`).
    #[arg(long)]
    pub catalog: Option<String>,
    /// Space description file.
    #[arg(long)]
    pub space: Option<PathBuf>,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Intersection homology table of a space.
    Compute {
        #[command(flatten)]
        source: SpaceSource,
        /// `0`, `m`, `n`, `t` or `p:v2,v3,...`.
        #[arg(long, default_value = "m")]
        perversity: String,
        /// Comma-separated coefficient rings: `Q`, `Z`, `Zp:<p>`, `Fq:<p>:<m>`.
        #[arg(long, default_value = "Q", value_delimiter = ',')]
        coeff: Vec<String>,
        /// Refuse inputs that are not pseudomanifolds.
        #[arg(long)]
        strict: bool,
        /// Subdivide once before computing.
        #[arg(long)]
        normalize_triangulation: bool,
    },
    /// Witt condition verdict per coefficient field.
    WittCheck {
        #[command(flatten)]
        source: SpaceSource,
        #[arg(long, default_value = "Q", value_delimiter = ',')]
        coeff: Vec<String>,
        /// Examine every simplex link, not one per stratum component.
        #[arg(long)]
        check_all_links: bool,
        #[arg(long)]
        normalize_triangulation: bool,
    },
    /// Witt class of a symmetric bilinear form.
    WittClass {
        /// Gram matrix file, `I<n>` for the identity, or `catalog:<name>`.
        #[arg(long)]
        matrix: String,
        /// Field to classify over.
        #[arg(long)]
        field: String,
    },
    /// Bordism groups of Z_p-Witt spaces, optionally of a space.
    Bordism {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        /// Space description file; its integral homology feeds the splitting.
        #[arg(long)]
        space: Option<PathBuf>,
        /// Built-in space instead of a file.
        #[arg(long, conflicts_with = "space")]
        catalog: Option<String>,
    },
    /// Catalog listing.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Clone, Debug, Subcommand)]
pub enum CatalogAction {
    /// Name, dimension, cost class and provenance summary of every entry.
    Manifest,
}

/// Failures of a command, each with a stable exit code.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CliError {
    /// Malformed command line or input document.
    #[error("{0}")]
    Parse(String),
    /// The perversity is invalid for this space.
    #[error("{0}")]
    Perversity(String),
    /// Input is not a pseudomanifold.
    #[error("not a pseudomanifold: {}", .0.join("; "))]
    NotPseudomanifold(Vec<String>),
    /// The form to classify is degenerate.
    #[error("degenerate form")]
    Degenerate,
    /// Any other failure.
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Perversity(_) => 3,
            CliError::NotPseudomanifold(_) => 4,
            CliError::Degenerate => 5,
            CliError::Other(_) => 1,
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::CoefficientSyntax(_) | AlgebraError::NotPrime(_) | AlgebraError::NotPrimePower(_) => {
                CliError::Parse(e.to_string())
            }
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::Parse(_) => CliError::Parse(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<IhError> for CliError {
    fn from(e: IhError) -> Self {
        match e {
            IhError::InvalidPerversity(_) | IhError::MissingPerversity(_) => CliError::Perversity(e.to_string()),
            IhError::Algebra(a) => a.into(),
            IhError::Complex(c) => c.into(),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<WittError> for CliError {
    fn from(e: WittError) -> Self {
        match e {
            WittError::Degenerate => CliError::Degenerate,
            WittError::NotPseudomanifold(f) => CliError::NotPseudomanifold(f),
            WittError::Syntax(_) | WittError::NotSquare | WittError::NotSymmetric => CliError::Parse(e.to_string()),
            WittError::Algebra(a) => a.into(),
            WittError::Ih(i) => i.into(),
            WittError::Complex(c) => c.into(),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::MissingPerversity(_) => CliError::Perversity(e.to_string()),
            FormulaError::Algebra(a) => a.into(),
            FormulaError::Ih(i) => i.into(),
            FormulaError::Witt(w) => w.into(),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::UnknownName(_) => CliError::Parse(e.to_string()),
            CatalogError::Complex(c) => c.into(),
            CatalogError::Ih(i) => i.into(),
            CatalogError::Witt(w) => w.into(),
            other => CliError::Other(other.to_string()),
        }
    }
}

/// Output of one invocation: text for stdout, text for stderr, exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => Outcome {
            stdout: if cli.json {
                report.to_json() + "\n"
            } else {
                render_human(&report)
            },
            stderr: String::new(),
            code: 0,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}
