//! The Witt condition on links, Witt groups of finite fields and their
//! invariants, and the resulting bordism groups.

mod bordism;
mod classes;
mod condition;
mod forms;

use thiserror::Error;

use crate::exactalg::{AlgebraError, CoefficientSpec};
use crate::ihcore::IhError;
use crate::simplicial::ComplexError;

pub use bordism::bordism_group;
pub use classes::{
    diagonal_class, finite_invariants, isotropic_vector, rational_invariants, restriction_kernel, restriction_map,
    witt_elements, witt_group, witt_invariants, WittClass, WittGroupDescr, WittStructure, WittValue,
};
pub use condition::{characteristic_reduction_check, witt_condition_check, StratumWitt, WittReport};
pub use forms::{parse_gram, AnyForm, BilinearForm, Diagonalization, GramEntry};

/// Errors from form classification and Witt condition checks.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum WittError {
    /// The Gram matrix has zero determinant.
    #[error("degenerate form")]
    Degenerate,
    /// Rows of unequal length or a non-square matrix.
    #[error("Gram matrix is not square")]
    NotSquare,
    /// The Gram matrix differs from its transpose.
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    /// Diagonalization is unavailable in characteristic two.
    #[error("diagonalization needs characteristic other than 2")]
    CharacteristicTwo,
    /// The operation needs a field.
    #[error("a field is required")]
    NotAField,
    /// The operation needs a finite field.
    #[error("a finite field is required")]
    NotFinite,
    /// The operation needs a prime field.
    #[error("{0} is not a prime field")]
    NotPrimeField(CoefficientSpec),
    /// Classes over different fields were combined.
    #[error("classes over {0} and {1} cannot be combined")]
    FieldMismatch(CoefficientSpec, CoefficientSpec),
    /// Exhaustive search bounds exceeded.
    #[error("search over dimension {dim} and field order {order} exceeds the brute force bound")]
    SearchTooLarge { dim: usize, order: u32 },
    /// The space is not a pseudomanifold.
    #[error("not a pseudomanifold: {}", .0.join("; "))]
    NotPseudomanifold(Vec<String>),
    /// Malformed matrix input.
    #[error("{0}")]
    Syntax(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ih(#[from] IhError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
