//! Exact-arithmetic toolkit for enumerative Galois theory.

pub mod classify;
pub mod cli;
pub mod census;
pub mod error;
pub mod geom;
pub mod mpoly;
pub mod poly;
pub mod scalar;
pub mod symres;

pub use error::{Error, Result};
pub use poly::IntPoly;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Dense polynomial over the integers.
pub type ZPoly = poly::Poly<BigInt>;
/// Dense polynomial over the rationals.
pub type QPoly = poly::Poly<BigRational>;
/// Sparse multivariate polynomial over the integers.
pub type ZMPoly = mpoly::MPoly<BigInt>;
