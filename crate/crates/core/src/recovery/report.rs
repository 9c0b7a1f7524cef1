use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::{DegreeMode, StepId, TableRow};
use crate::algebra::{Congruence, Rational};

/// `sum_q c_q mult(q) = constant`, or `D(q) = constant` for the divisor-sum
/// steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearEquation {
    pub divisor_sum_of: Option<u64>,
    pub terms: Vec<(u64, i64)>,
    pub constant: BigInt,
}

impl fmt::Display for LinearEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.divisor_sum_of {
            return write!(f, "D({q}) = {}", self.constant);
        }
        if self.terms.is_empty() {
            f.write_str("0")?;
        }
        for (i, &(q, c)) in self.terms.iter().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if c.unsigned_abs() != 1 {
                write!(f, "{} ", c.unsigned_abs())?;
            }
            write!(f, "mult({q})")?;
        }
        write!(f, " = {}", self.constant)
    }
}

/// Audit record of one equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub step: StepId,
    /// Zero for steps that use no window.
    pub n: BigUint,
    pub congruences: Vec<Congruence>,
    pub table: Vec<TableRow>,
    pub mode: DegreeMode,
    /// `s(n + hi) - s(n + lo)` as read from the oracle.
    pub lhs: BigInt,
    pub equation: LinearEquation,
    /// Multiplicities fixed by this record.
    pub resolved: Vec<(u64, BigInt)>,
}

impl StepRecord {
    pub fn has_window(&self) -> bool {
        !self.table.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveryReport {
    pub dimension: usize,
    pub s: Rational,
    /// Exponent multisets compatible with `S` (ascending).
    pub candidates: Vec<Vec<u64>>,
    pub k: u64,
    pub primes: Vec<u64>,
    pub gammas: Vec<u32>,
    pub q: Vec<u64>,
    pub steps: Vec<StepRecord>,
    pub mult: alloc::collections::BTreeMap<u64, u64>,
    /// Recovered exponents, ascending.
    pub deltas: Vec<u64>,
    /// Recovered weights, descending.
    pub weights: Vec<u64>,
}

impl RecoveryReport {
    /// `sum mult(q) / q`, which equals `s` on success.
    pub fn reconstructed_s(&self) -> Rational {
        self.mult
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(&q, &c)| Rational::new(BigInt::from(c), BigInt::from(q)))
            .fold(Rational::zero(), |a, b| a + b)
    }
}
