//! Simplicial complexes, filtrations, pseudomanifold checks and the standard
//! constructions (cone, suspension, product, connected sum, link,
//! barycentric subdivision).

mod complex;
mod constructions;
mod format;
mod orientation;
mod stratified;
mod validate;

use thiserror::Error;

pub use complex::{build_complex, facet, is_subset, Simplex, SimplicialComplex};
pub use constructions::{
    barycentric_subdivision, cone, connected_sum, join, product, quotient, simplicial_link, suspension,
};
pub use format::{parse_space, write_space, SpaceFile};
pub use orientation::{orient, Orientation};
pub use stratified::{StratifiedComplex, StratumComponent};
pub use validate::{verify_pseudomanifold, PseudomanifoldReport};

/// Errors raised while building or transforming complexes.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    /// A simplex with no vertices.
    #[error("empty simplex")]
    EmptySimplex,
    /// A simplex listing the same vertex twice.
    #[error("simplex {0:?} repeats a vertex")]
    RepeatedVertex(Vec<u32>),
    /// The operation needs a nonempty complex.
    #[error("empty complex")]
    EmptyComplex,
    /// A skeleton generator is not a simplex of the complex.
    #[error("simplex {0:?} is not in the complex")]
    NotInComplex(Vec<u32>),
    /// A skeleton `X^i` contains a simplex of dimension above `i`.
    #[error("skeleton X^{level} contains {simplex:?} of larger dimension")]
    SkeletonTooLarge { level: usize, simplex: Vec<u32> },
    /// A skeleton index at or above the complex dimension.
    #[error("skeleton X^{level} is not a proper skeleton of a {dim}-dimensional complex")]
    SkeletonOutOfRange { level: usize, dim: usize },
    /// Levels are not monotone under taking faces.
    #[error("filtration is not by subcomplexes at {0:?}")]
    NotSubcomplex(Vec<u32>),
    /// A stratum contains a simplex not on any simplex of the stratum's dimension.
    #[error("stratum of dimension {level} is not pure at {simplex:?}")]
    ImpureStratum { level: usize, simplex: Vec<u32> },
    /// Declared and actual dimensions disagree.
    #[error("dimension mismatch: expected {0}, found {1}")]
    DimensionMismatch(usize, usize),
    /// A factor or summand must be a closed pseudomanifold.
    #[error("expected a closed pseudomanifold")]
    NotClosedManifold,
    /// The link of a maximal simplex is empty.
    #[error("link of {0:?} is empty")]
    EmptyLink(Vec<u32>),
    /// Join factors share vertex labels.
    #[error("vertex sets overlap")]
    OverlappingVertices,
    /// A group quotient failed to be a simplicial complex.
    #[error("quotient is not a simplicial complex")]
    QuotientNotSimplicial,
    /// Malformed space description.
    #[error("cannot parse space: {0}")]
    Parse(String),
}
