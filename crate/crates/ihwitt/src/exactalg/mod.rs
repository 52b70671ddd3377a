//! Exact linear algebra over the rationals, prime fields, finite extension
//! fields and the integers.
//!
//! Everything is exact: rationals and integers use arbitrary precision, finite
//! fields use residue or table arithmetic. Matrices are sparse and column
//! major, which suits simplicial boundary operators.

mod coeff;
mod elim;
mod field;
mod group;
mod snf;
mod sparse;

use thiserror::Error;

pub use coeff::{CoefficientSpec, FieldKind};
pub use elim::{
    echelonize_integral, kernel_basis, kernel_basis_integral, rank, rank_integral, reduce_columns,
    reduce_columns_integral, EchelonBasis, Reduction,
};
pub use field::{make_field, rational_to_finite, Field, FiniteField, Integers, Rationals, Ring};
pub use group::AbelianGroup;
pub use snf::{smith_normal_form, smith_normal_form_int, SnfResult};
pub use sparse::{axpy, entry, scale, IntMatrix, SparseMatrix, SparseVec};

/// Errors from field construction and exact linear algebra.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    /// The characteristic is not a prime number.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// A field order that is not a prime power.
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    /// Extension degree must be at least one.
    #[error("invalid extension degree {0}")]
    InvalidExtensionDegree(u32),
    /// Field too large for table arithmetic.
    #[error("field of order {p}^{m} is too large")]
    FieldTooLarge { p: u32, m: u32 },
    /// A field was required but the integers were given.
    #[error("the integers are not a field")]
    NotAField,
    /// A finite field was required.
    #[error("a finite field is required")]
    NotFinite,
    /// Unrecognised coefficient syntax.
    #[error("cannot parse coefficient ring `{0}`")]
    CoefficientSyntax(String),
}

/// Rank of an integer matrix after extension of scalars to `coeff`.
///
/// Over the integers this is the rank over the rationals.
pub fn rank_over(m: &IntMatrix, coeff: &CoefficientSpec) -> Result<usize, AlgebraError> {
    match coeff {
        CoefficientSpec::Integers => Ok(smith_normal_form_int(m).rank()),
        _ => Ok(crate::with_field!(coeff.field()?, f => rank(&f, &m.over(&f)))),
    }
}

/// Dimension of the null space of an integer matrix over a field.
pub fn nullity_over(m: &IntMatrix, coeff: &CoefficientSpec) -> Result<usize, AlgebraError> {
    Ok(m.cols() - rank_over(m, coeff)?)
}
