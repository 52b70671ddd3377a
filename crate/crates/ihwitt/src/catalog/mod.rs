//! Built-in spaces with their expected intersection homology, Witt verdicts
//! and, where known, intersection forms.
//!
//! Small spaces are triangulated explicitly. Spaces too large to triangulate
//! are given as [`FormulaSpace`] recipes for the closed-form engines.

mod data;
mod entries;
mod spaces;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::CoefficientSpec;
use crate::formulas::FormulaSpace;
use crate::ihcore::IhError;
use crate::simplicial::{ComplexError, StratifiedComplex};
use crate::witt::{witt_invariants, AnyForm, WittClass, WittError};

pub use entries::{catalog_entry, catalog_names, CatalogEntry, Expectation, Expected, WittExpectation};
pub use spaces::{
    complex_projective_plane, cp2_connected_sum, cycle, genus_two_surface, klein_bottle, lens_space, lens_times_circle,
    projective_plane, sphere, suspended_lens_times_circle, torus, two_circles, vertex_links,
};

/// Errors from catalog lookups and constructions.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    /// No entry with this name.
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    /// The entry carries no intersection form.
    #[error("no intersection form recorded for `{0}`")]
    NoPairingData(String),
    /// A constructed space failed its built-in homology check.
    #[error("validation failed: {0}")]
    Validation(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Ih(#[from] IhError),
    #[error(transparent)]
    Witt(#[from] WittError),
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Stated in the literature for this example.
    Literature,
    /// Standard facts (manifold homology, vacuous conditions).
    Standard,
    /// Computed here by independent means.
    Derived,
}

/// Rough cost of building and computing an entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CostClass {
    Instant,
    Seconds,
    Stretch,
}

/// A built catalog entry.
#[derive(Clone, Debug)]
pub enum Built {
    Complex(StratifiedComplex),
    Formula(FormulaSpace),
}

impl Built {
    pub fn complex(self) -> Option<StratifiedComplex> {
        match self {
            Built::Complex(x) => Some(x),
            Built::Formula(_) => None,
        }
    }

    pub fn formula(self) -> Option<FormulaSpace> {
        match self {
            Built::Formula(f) => Some(f),
            Built::Complex(_) => None,
        }
    }
}

/// Builds an entry by name.
pub fn catalog_build(name: &str) -> Result<Built, CatalogError> {
    (catalog_entry(name)?.build)()
}

/// Builds an entry that must be a triangulated space.
pub fn catalog_complex(name: &str) -> Result<StratifiedComplex, CatalogError> {
    catalog_build(name)?
        .complex()
        .ok_or_else(|| CatalogError::Validation(format!("`{name}` is formula-level only")))
}

/// Witt class of the recorded intersection form of an entry over `coeff`.
pub fn witt_class_of_catalog_space(name: &str, coeff: &CoefficientSpec) -> Result<WittClass, CatalogError> {
    let entry = catalog_entry(name)?;
    let gram = entry
        .gram
        .ok_or_else(|| CatalogError::NoPairingData(name.to_string()))?;
    let form = AnyForm::from_integers(&gram, coeff)?;
    Ok(witt_invariants(&form)?)
}

/// One line of the catalog manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub description: String,
    pub dimension: usize,
    /// `complex` or `formula`.
    pub kind: String,
    pub cost: CostClass,
    pub expectations: usize,
    pub literature: usize,
    pub standard: usize,
    pub derived: usize,
    pub has_intersection_form: bool,
}

/// Machine-readable listing of every entry.
pub fn manifest() -> Vec<ManifestEntry> {
    catalog_names()
        .iter()
        .map(|name| {
            let e = catalog_entry(name).expect("listed names resolve");
            let provs: Vec<Provenance> = e
                .expected
                .iter()
                .map(|x| x.provenance)
                .chain(e.witt.iter().map(|w| w.provenance))
                .collect();
            let count = |p: Provenance| provs.iter().filter(|&&q| q == p).count();
            ManifestEntry {
                name: e.name.to_string(),
                description: e.description.to_string(),
                dimension: e.dimension,
                kind: if e.formula_level { "formula" } else { "complex" }.to_string(),
                cost: e.cost,
                expectations: provs.len(),
                literature: count(Provenance::Literature),
                standard: count(Provenance::Standard),
                derived: count(Provenance::Derived),
                has_intersection_form: e.gram.is_some(),
            }
        })
        .collect()
}
