//! Mode operators of the Galilean W3 algebra acting on Verma modules.

mod algebra;
mod mode;
mod pbw;
mod statefield;

pub use algebra::{ModeAlgebra, Params};
pub use mode::{adjoint, commutator, Field, Mode, ModeSum, Variant};
pub use pbw::{partitions, HWVector, PBWMonomial};
pub use statefield::{field_mode_act, state_field_check, StateFieldReport};
