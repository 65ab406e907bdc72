//! Symbolic engine for the Galilean W3 algebra: λ-brackets, mode algebra,
//! Verma modules and the rank-4 free-field realisation.

pub mod scalars;
pub mod conformal;
pub mod modes;
pub mod verma;
pub mod freefield;
