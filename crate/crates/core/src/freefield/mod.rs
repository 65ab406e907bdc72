//! Free-field realisations of GCA and the Galilean W3 algebra in Heisenberg
//! vertex algebras, and their highest-weight Fock modules.

mod fields;
mod fock;
mod lattice;
mod weights;
mod wt1;

pub use fock::{fock_act, highest, Fock, FockMonomial, FockVector};
pub use fields::{gca_fields, gca_realisation, gw3_fields, gw3_realisation, BracketCheck, Realisation};
pub use weights::{
    at, dual_matches, gca_printed, gca_weights, over_s10, parametrised, pqrs, printed_weights, s3_orbit, sigma, tau, tezine_points,
    weights_at, zero_mode_weights, Weights, PQRS, R10,
};
pub use wt1::{wt1_images, Sector, Wt1Claim, Wt1Report};
pub use lattice::{momentum, Lattice4, Momentum, RealisationParams, LABELS};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeFieldError {
    #[error("lam + i*mu must be nonzero")]
    LBarZero,
    #[error("parameter pole: {0}")]
    ParameterPole(String),
}
