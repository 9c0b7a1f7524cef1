//! Coefficients of the modified and unmodified zeta functions from the
//! Newton polyhedron, the closed rational form, and the identity relating
//! the two series.

mod closed;
mod context;
mod identity;
mod rational;
mod symbolic;

use thiserror::Error;

pub use closed::{bf_coeff, s_sigma_closed};
pub use context::{CoeffDescriptor, ZCoefficient, ZetaContext};
pub use identity::{verify_modified_identity, Corruption, IdentityCheck};
pub use rational::{rational_form, NumeratorTerm, RationalZeta};
pub use symbolic::{ClassExpr, Symbol};

use crate::newton::{FaceSet, NewtonError, NondegWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error(transparent)]
    Newton(#[from] NewtonError),
    #[error("face {face} is degenerate")]
    Degenerate {
        face: FaceSet,
        witness: Option<NondegWitness>,
    },
    #[error("the polynomial is non-singular; its modified zeta function vanishes")]
    NonSingular,
}
