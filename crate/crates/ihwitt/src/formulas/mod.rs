//! Closed-form intersection homology of cones, suspensions, compactified
//! disk bundles and products with manifolds, plus the bordism splitting.
//!
//! These serve as oracles for the chain-level engine and as calculators for
//! spaces too large to triangulate.

mod closed_forms;
mod space;
mod splitting;

use thiserror::Error;

use crate::exactalg::{AlgebraError, CoefficientSpec};
use crate::ihcore::IhError;
use crate::witt::WittError;

pub use closed_forms::{
    compactified_bundle_formula, cone_formula, kunneth, reduce_coefficients, suspension_formula, BundleTable,
};
pub use space::{FormulaResult, FormulaSpace};
pub use splitting::omega_splitting;

/// Errors from the closed-form engines.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    /// The perversity has no value at this codimension.
    #[error("perversity undefined at codimension {0}")]
    MissingPerversity(usize),
    /// Tables over different coefficient rings were combined.
    #[error("tables over {0} and {1} cannot be combined")]
    MixedCoefficients(CoefficientSpec, CoefficientSpec),
    /// The formula needs field coefficients.
    #[error("field coefficients are required")]
    NotAField,
    /// Input homology is not that of a closed manifold of the stated shape.
    #[error("invalid input table: {0}")]
    InvalidTable(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ih(#[from] IhError),
    #[error(transparent)]
    Witt(#[from] WittError),
}
