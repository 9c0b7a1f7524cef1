//! Realizations of the classes entering the zeta coefficients: canonical
//! tokens, Euler characteristics with compact support of fibers of diagonal
//! and quadratic forms, and the parity certificates used by recovery.

mod euler;
mod parity;
mod quadratic;
mod token;

use num_bigint::BigUint;
use thiserror::Error;

pub use euler::{chi_diag_fiber, Ambient};
pub use parity::{parity_certificate, ParityCertificate, ParityKind};
pub use quadratic::{congruent, diagonalize_quadratic, QuadraticDiagonalization};
pub use token::{
    coefficient_class, face_symbol_chi, token_for_divisor_set, ChiTriple, ChiValue, ClassToken,
    DiagonalData, RepresentativeKind, TokenKey, TokenLevel,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChiError {
    #[error("the polynomial is non-singular; its modified zeta function vanishes")]
    NonSingular,
    #[error("not a quadratic form in the given variables")]
    NotQuadratic,
    #[error("{kind} certificate does not apply at m = {m}")]
    ParityPrecondition { kind: &'static str, m: BigUint },
    #[error("{kind} parity is even at m = {m}; the nonvanishing claim fails")]
    EvenParity { kind: &'static str, m: BigUint },
}
