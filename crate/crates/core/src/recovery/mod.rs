//! Reconstruction of the pure-monomial exponents from zeta data alone.
//!
//! The procedure estimates `S = sum 1/delta_i`, bounds the exponents through
//! Egyptian decompositions of `S`, and then determines the multiplicity
//! `mult(q)` of every `q` in the grid `Q` one step at a time. Each step picks
//! `n` by the Chinese remainder theorem so that the divisor sets of a short
//! window `n + lo ..= n + hi` are known, and reads off
//! `s(n + hi) - s(n + lo) = sum_cells D(cap(cell))` with
//! `D(t) = sum_{q | t} mult(q)`.

mod estimate;
mod grid;
mod oracle;
mod report;
mod run;
mod steps;
mod weights;

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::algebra::{AlgebraError, Rational};
use crate::chi::ParityKind;

pub use estimate::{estimate_s, lcm_up_to};
pub use grid::{bound_and_q, filtered_bound_and_q, QGrid};
pub use oracle::{ProfileOracle, ShiftedOracle, ZetaOracle};
pub use report::{LinearEquation, RecoveryReport, StepRecord};
pub use run::{run_recovery, BoundMode, RecoveryConfig};
pub use steps::{
    choose_n, class_of, in_divisor_sum_class, plan_coprime_to_six, plan_divisor_sum, plan_for,
    plan_four_not_three, plan_three_odd, plan_twice_odd, plan_two, plans_three_and_four,
    table_row_holds_directly, Claim, DegreeMode, StepId, StepPlan, TableRow,
};
pub use weights::{compare, weights_from_mults, Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RecoveryError {
    #[error("the profile is non-singular: every coefficient vanishes")]
    NonSingular,
    #[error("S did not stabilise for N up to {max_n}")]
    SBudget {
        max_n: u64,
        partial: Option<Rational>,
    },
    #[error("no decomposition of {s} into {d} unit fractions")]
    NoEgyptianSolutions { s: Rational, d: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("grid for K = {k} has {size} elements, more than {limit}")]
    GridTooLarge { k: u64, size: BigUint, limit: usize },
    #[error("{step}: at n = {n} the cell n{offset:+} violates claim `{claim}` (cap {cap})")]
    TableMismatch {
        step: StepId,
        n: BigUint,
        offset: i64,
        claim: Claim,
        cap: u64,
    },
    #[error("{step}: endpoint m = {m} is not pure")]
    NotPure { step: StepId, m: BigUint },
    #[error("{step}: endpoints {lo} and {hi} have different tokens")]
    TokenMismatch {
        step: StepId,
        lo: BigUint,
        hi: BigUint,
    },
    #[error("{step}: parity certificate {} fails at m = {m}", kind.as_str())]
    Parity {
        step: StepId,
        m: BigUint,
        kind: ParityKind,
    },
    #[error("{step}: D({cell}) is not determined by earlier steps")]
    Unresolved { step: StepId, cell: u64 },
    #[error("{step}: system is {}", if *inconsistent { "inconsistent" } else { "underdetermined" })]
    Singular { step: StepId, inconsistent: bool },
    #[error("{step}: mult({q}) = {expected} earlier but {found} now")]
    Inconsistent {
        step: StepId,
        q: u64,
        expected: BigInt,
        found: BigInt,
    },
    #[error("mult({q}) = {value} is not a nonnegative integer")]
    InvalidMult { q: u64, value: Rational },
    #[error("consistency check failed: {what} (expected {expected}, found {found})")]
    Consistency {
        what: &'static str,
        expected: String,
        found: String,
    },
    #[error("recovered exponents {deltas:?} are not among the Egyptian candidates")]
    NotACandidate { deltas: Vec<u64> },
}
