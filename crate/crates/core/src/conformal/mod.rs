//! Lambda-brackets of non-linear Lie conformal algebras and their
//! universal enveloping vertex algebras.

mod engine;
mod expr;
mod preset;
mod print;

pub use engine::Engine;
pub use expr::{DGen, Lambda2Poly, LambdaPoly, VAExpr, Word};
pub use preset::{Generator, Preset, RawTerm, PRESET_NAMES};
pub use print::{print_expr, print_lambda, print_lambda2};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConformalError {
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
}
