//! Modified motivic zeta functions of convenient, non-degenerate, weighted
//! homogeneous polynomials, computed from the Newton polyhedron, and the
//! inverse procedure that reads the pure-monomial exponents back off the
//! zeta coefficients.
//!
//! The crate is `no_std` and only needs an allocator. File formats and the
//! command-line front end live in the `wzeta` crate.
//!
//! ```
//! use wzeta_core::newton::{SparsePoly, WhPolynomial};
//! use wzeta_core::zeta::ZetaContext;
//! use wzeta_core::recovery::{run_recovery, ProfileOracle, RecoveryConfig};
//!
//! let f = SparsePoly::brieskorn(&[2, 3], &[1, 1]).unwrap();
//! let ctx = ZetaContext::new(WhPolynomial::new(f).unwrap()).unwrap();
//! let oracle = ProfileOracle::new(&ctx).unwrap();
//! let report = run_recovery(&oracle, &RecoveryConfig::default()).unwrap();
//! assert_eq!(report.weights, vec![3, 2]);
//! ```
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod chi;
pub mod newton;
pub mod recovery;
pub mod zeta;
