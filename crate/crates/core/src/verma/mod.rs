//! Verma modules `V(c, h)`: bases, the invariant form, determinants and
//! (sub)singular vectors.

mod basis;
mod det;
mod linalg;
mod pairing;
mod singular;
mod vacuum;

pub use basis::{basis, character, product_series, type_cmp, vacuum_basis, BasisMonomial, Character, LevelBasis};
pub use det::{
    abd, alpha, alpha_closed, alpha_det_closed, alpha_matrix, cm0_determinant, det_dn, dn_closed, dn_vacuum_quoted,
    krit_red_residual, params_on_locus, reducible, Cm0Report, DnReport, Reducibility,
};
pub use linalg::{det, nullspace, rank, rref, Echelon};
pub use pairing::{adjoint_word, gram, gram_on, pair_word_vector, pairing, pairing_words, GramBlock, Pairing};
pub use singular::{
    act_f, eval_vector, quotient_and_subsingular, singular_vectors, FVector, LevelSpace, Submodule, SubsingularReport,
};
pub use vacuum::{vacuum_module, VacuumLevel, VacuumReport};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VermaError {
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("c_M is zero; use the c_M = 0 algebra")]
    CMZero,
    #[error("the vacuum module needs h = 0")]
    NonzeroWeight,
}
