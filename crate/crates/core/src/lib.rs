//! Exact computations with central and affine hyperplane (multi)arrangements.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is computed over
//! the rationals with arbitrary precision: intersection posets and
//! characteristic polynomials, graded pieces of the module of logarithmic
//! derivations `D(A, m)`, Saito-style freeness certificates, the canonical
//! extension `E(A, m)` of a locally A2 multiarrangement and the interpolation
//! between extended Shi and Catalan arrangements of ADE root systems.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arrangement;
pub mod coxeter;
mod error;
pub mod exact;
pub mod freeness;
pub mod lattice;
pub mod structure;


pub use arrangement::{Arrangement, Flat, Hyperplane, Multiarrangement};
pub use error::Error;
pub use exact::{MultiPoly, RatMatrix, Rational, UniPoly};
pub use lattice::{CharPoly, IntersectionPoset};


pub type Result<T, E = Error> = core::result::Result<T, E>;
