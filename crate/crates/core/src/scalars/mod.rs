//! Exact rational functions over the Gaussian rationals.

mod field;
mod gauss;
mod gcd;
mod poly;
mod ratfn;
mod symbol;
mod text;

pub use field::{Field, ITenth, QuadExt, Radicand, Sqrt10};
pub use gauss::GaussRat;
pub use gcd::gcd;
pub use poly::{Monomial, MultiPoly};
pub use ratfn::ScalarFn;
pub use symbol::{sym, Symbol};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("denominator vanishes under substitution")]
    PoleHit,
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

/// Shorthand for `ScalarFn::parse(s).unwrap()`, for literals known to be valid.
pub fn sf(s: &str) -> ScalarFn {
    ScalarFn::parse(s).unwrap_or_else(|e| panic!("bad scalar literal {:?}: {}", s, e))
}
