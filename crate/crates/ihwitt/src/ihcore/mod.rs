//! Perversities, allowable chains and intersection homology over fields and
//! over the integers.
//!
//! Over a field the dimensions come from ranks of restricted boundary
//! matrices ([`ih_homology`]). [`intersection_chain_complex`] builds the
//! chain complex with explicit bases instead, which is also the route used
//! over the integers.

mod chains;
mod homology;
mod perversity;
mod reports;
mod table;

use thiserror::Error;

use crate::exactalg::AlgebraError;
use crate::simplicial::ComplexError;

pub use chains::{
    allowable_simplices, integral_intersection_chain_complex, intersection_chain_complex,
    intersection_chain_complex_over, AnyChainComplex, IntersectionChainComplex,
};
pub use homology::{chain_group_dims, ih_homology, is_allowable, ordinary_homology};
pub use perversity::{middle_perversities, Perversity};
pub use reports::{torsion_free_check, uct_violation_report, LinkTorsion, TorsionFreeReport, UctDegree, UctReport};
pub use table::{DegreeGroup, IHTable};

/// Errors from intersection homology computations.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum IhError {
    /// Values violate `p(2) = 0` or `p(k) ≤ p(k+1) ≤ p(k) + 1`.
    #[error("invalid perversity: {0}")]
    InvalidPerversity(String),
    /// The perversity has no value at this codimension.
    #[error("perversity undefined at codimension {0}")]
    MissingPerversity(usize),
    /// A simplex was tested in the wrong degree.
    #[error("simplex {simplex:?} does not have dimension {degree}")]
    WrongDegree { simplex: Vec<u32>, degree: usize },
    /// A torsion coefficient does not fit in 64 bits.
    #[error("torsion coefficient too large")]
    TorsionOverflow,
    /// A consistency check inside the chain construction failed.
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
