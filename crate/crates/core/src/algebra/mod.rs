//! Exact arithmetic substrate: rationals, rational functions in `L` with
//! denominators `(L-1)^a`, lazy series in `T`, congruence solving, primes and
//! bounded Egyptian-fraction enumeration.

mod crt;
mod egyptian;
pub(crate) mod linalg;
mod lrational;
mod primes;
mod rational;
mod series;

use alloc::string::String;
use num_bigint::BigUint;
use thiserror::Error;

pub use crt::{crt_solve, crt_solve_at_least, Congruence, CongruenceSystem};
pub use egyptian::{egyptian_solutions, egyptian_solutions_filtered};
pub use lrational::{lr_expand, LRational, LaurentPoly};
pub use primes::primes_up_to;
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use series::TSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(BigUint, BigUint),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("malformed rational literal `{0}`")]
    MalformedRational(String),
    #[error("expression has a polynomial part in L and no expansion in L^-1")]
    NotExpandable,
    #[error("Egyptian-fraction search exceeded {0} nodes")]
    SearchBudget(u64),
    #[error("Egyptian-fraction denominator does not fit in 64 bits")]
    DenominatorOverflow,
}
