//! Radial and angular wavefunctions and the stationary state built from them.

mod angular;
mod radial;
mod state;

pub use angular::{AngularBranch, AngularParams, DIRAC_STRING_DELTA};
pub use radial::RadialParams;
pub use state::{potentials, BoundState};
