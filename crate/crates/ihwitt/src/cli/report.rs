use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::catalog::ManifestEntry;
use crate::exactalg::{AbelianGroup, CoefficientSpec};
use crate::ihcore::IHTable;
use crate::witt::{WittClass, WittReport};

/// How a homology table was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultLevel {
    /// From the allowable chain complex.
    Chain,
    /// From the closed-form engines.
    Formula,
}

/// One column of a Witt verdict table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittColumn {
    pub coefficients: CoefficientSpec,
    pub report: WittReport,
}

/// One requested result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RunResult {
    Homology {
        perversity: Vec<i64>,
        level: ResultLevel,
        /// False if a closed-form transition term was not modelled.
        verified: bool,
        table: IHTable,
    },
    Witt {
        oriented: bool,
        irreducible: bool,
        columns: Vec<WittColumn>,
    },
    WittClass {
        dimension: usize,
        class: WittClass,
        order: Option<u64>,
        /// Diagonal entries of a canonical representative (finite fields).
        representative: Option<Vec<String>>,
    },
    Bordism {
        n: usize,
        p: u32,
        /// `Ω_n` of a point.
        coefficient_group: AbelianGroup,
        /// Splitting evaluated on the given space.
        space_group: Option<AbelianGroup>,
    },
    Manifest {
        entries: Vec<ManifestEntry>,
    },
}

/// Everything one command produced.
///
/// Wall-clock time is kept out of the serialized form so identical inputs
/// give byte-identical JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    /// Canonical form of the command line.
    pub command: String,
    /// SHA-256 of the input document, or of `catalog:<name>`.
    pub input_digest: Option<String>,
    /// Space name or file path.
    pub space: Option<String>,
    pub results: Vec<RunResult>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Plain-text rendering.
pub fn render_human(report: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "$ ihw {}", report.command);
    if let Some(space) = &report.space {
        let _ = writeln!(out, "space: {space}");
    }
    for r in &report.results {
        match r {
            RunResult::Homology {
                perversity,
                level,
                verified,
                table,
            } => {
                let p: Vec<String> = perversity.iter().map(i64::to_string).collect();
                let _ = write!(
                    out,
                    "perversity ({}) coefficients {}:",
                    p.join(","),
                    table.coefficients.short_name()
                );
                let _ = writeln!(
                    out,
                    "{}",
                    match (level, verified) {
                        (ResultLevel::Chain, _) => "",
                        (ResultLevel::Formula, true) => " [closed form]",
                        (ResultLevel::Formula, false) => " [closed form, transition term unverified]",
                    }
                );
                for (i, g) in table.degrees.iter().enumerate() {
                    if table.coefficients.is_field() {
                        let _ = writeln!(out, "  IH_{i} = {}", g.rank);
                    } else {
                        let _ = writeln!(out, "  IH_{i} = {g}");
                    }
                }
            }
            RunResult::Witt {
                oriented,
                irreducible,
                columns,
            } => {
                let _ = writeln!(
                    out,
                    "oriented: {}  irreducible: {}",
                    yes_no(*oriented),
                    yes_no(*irreducible)
                );
                for c in columns {
                    let verdict = if c.report.witt_condition { "pass" } else { "fail" };
                    let _ = writeln!(out, "  {:<4} {verdict}", c.coefficients.short_name());
                    for s in c.report.strata.iter().filter(|s| !s.passes) {
                        let _ = writeln!(
                            out,
                            "       stratum of dim {} at {:?}: link IH_{} has dim {}",
                            s.stratum_dim, s.simplex, s.middle_degree, s.link_middle_dim
                        );
                    }
                }
            }
            RunResult::WittClass {
                dimension,
                class,
                order,
                representative,
            } => {
                let _ = writeln!(out, "form of rank {dimension}: {class}");
                let _ = writeln!(out, "  trivial: {}", yes_no(class.is_identity()));
                match order {
                    Some(o) => {
                        let _ = writeln!(out, "  order: {o}");
                    }
                    None => {
                        let _ = writeln!(out, "  order: infinite");
                    }
                }
                if let Some(rep) = representative {
                    let _ = writeln!(out, "  representative: <{}>", rep.join(", "));
                }
            }
            RunResult::Bordism {
                n,
                p,
                coefficient_group,
                space_group,
            } => {
                let _ = writeln!(out, "Omega_{n} (Z{p}-Witt) = {coefficient_group}");
                if let Some(g) = space_group {
                    let _ = writeln!(out, "Omega_{n}(space) = {g}");
                }
            }
            RunResult::Manifest { entries } => {
                let _ = writeln!(
                    out,
                    "{:<12} {:>3} {:<8} {:<8} {:>4} {:>4} {:>4}  description",
                    "name", "dim", "kind", "cost", "lit", "std", "der"
                );
                for e in entries {
                    let cost = serde_json::to_value(e.cost).expect("enum serializes");
                    let _ = writeln!(
                        out,
                        "{:<12} {:>3} {:<8} {:<8} {:>4} {:>4} {:>4}  {}",
                        e.name,
                        e.dimension,
                        e.kind,
                        cost.as_str().unwrap_or(""),
                        e.literature,
                        e.standard,
                        e.derived,
                        e.description
                    );
                }
            }
        }
    }
    let _ = writeln!(out, "({} ms)", report.elapsed_ms);
    out
}
