//! Intersection homology of stratified simplicial pseudomanifolds over the
//! rationals, prime fields, finite fields and the integers, the Witt
//! condition on links, and Witt group and Witt bordism arithmetic.
//!
//! The modules layer as follows: [`exactalg`] (exact linear algebra),
//! [`simplicial`] (complexes and filtrations), [`ihcore`] (allowable chains
//! and their homology), [`formulas`] (closed forms used as oracles),
//! [`witt`] (forms, classes and the link condition), [`catalog`] (built-in
//! spaces with expected values) and [`cli`] (the `ihw` front end).

pub mod catalog;
pub mod cli;
pub mod exactalg;
pub mod formulas;
pub mod ihcore;
pub mod simplicial;
pub mod witt;
