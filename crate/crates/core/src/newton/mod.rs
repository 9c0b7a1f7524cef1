//! Input polynomials, their weights and pure exponents, the compact faces of
//! the Newton polyhedron, brute-force lattice sums over dual cones, and
//! non-degeneracy checks.

mod binary;
mod face_set;
mod faces;
mod lattice;
mod nondegen;
mod poly;
mod profile;

use thiserror::Error;

pub use face_set::FaceSet;
pub use faces::{compact_faces, FaceDescriptor, DEFAULT_FACE_CAP};
pub use lattice::{s_sigma_bruteforce, support_and_trace, BruteCaps};
pub use nondegen::{
    check_nondegenerate, FaceStatus, NondegMethod, NondegStatus, NondegWitness,
    NondegeneracyReport, SamplingConfig,
};
pub use poly::{Exponent, SparsePoly};
pub use profile::{analyze_polynomial, PureExponents, WeightProfile, WhPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewtonError {
    #[error("a polynomial needs at least one variable")]
    ZeroDimension,
    #[error("at most 32 variables are supported, got {0}")]
    TooManyVariables(usize),
    #[error("exponent vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the polynomial is zero")]
    ZeroPolynomial,
    #[error("pure exponents must be positive")]
    ZeroExponent,
    #[error("exponent {0} is too large")]
    ExponentTooLarge(u64),
    #[error("not convenient: some variable has no pure power")]
    NotConvenient,
    #[error("not weighted homogeneous")]
    NotWeightedHomogeneous,
    #[error("{what} limited to {limit}, requested {requested}")]
    Capacity {
        what: &'static str,
        limit: u64,
        requested: u64,
    },
    #[error("cone membership for face {face} at m = {m} is not stable along a tail ray")]
    UnstableTail { face: FaceSet, m: u64 },
}
