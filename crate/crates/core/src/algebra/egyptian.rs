use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{AlgebraError, Rational};

/// All non-decreasing multisets `{x_1 <= ... <= x_d}` with every `x_i >= 2`
/// and `sum 1/x_i = target`.
///
/// Returns an empty list when `target <= 0` or `target > d/2`.
pub fn egyptian_solutions(target: &Rational, d: usize) -> Result<Vec<Vec<u64>>, AlgebraError> {
    egyptian_solutions_filtered(target, d, |_| true, u64::MAX)
}

/// Like [`egyptian_solutions`], restricted to denominators accepted by
/// `admissible`, with a bound on the number of search nodes.
pub fn egyptian_solutions_filtered(
    target: &Rational,
    d: usize,
    mut admissible: impl FnMut(u64) -> bool,
    node_budget: u64,
) -> Result<Vec<Vec<u64>>, AlgebraError> {
    let mut out = Vec::new();
    if d == 0
        || !target.is_positive()
        || target * Rational::from_integer(BigInt::from(2))
            > Rational::from_integer(BigInt::from(d))
    {
        return Ok(out);
    }
    let mut search = Search {
        admissible: &mut admissible,
        budget: node_budget,
        nodes: 0,
        prefix: Vec::with_capacity(d),
        out: &mut out,
    };
    search.run(target.clone(), d, 2)?;
    Ok(out)
}

struct Search<'a, F> {
    admissible: &'a mut F,
    budget: u64,
    nodes: u64,
    prefix: Vec<u64>,
    out: &'a mut Vec<Vec<u64>>,
}

impl<F: FnMut(u64) -> bool> Search<'_, F> {
    fn run(&mut self, rem: Rational, k: usize, lo: u64) -> Result<(), AlgebraError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(AlgebraError::SearchBudget(self.budget));
        }
        if k == 1 {
            if rem.numer().is_one() {
                let x = rem
                    .denom()
                    .to_u64()
                    .ok_or(AlgebraError::DenominatorOverflow)?;
                if x >= lo && (self.admissible)(x) {
                    let mut sol = self.prefix.clone();
                    sol.push(x);
                    self.out.push(sol);
                }
            }
            return Ok(());
        }
        // Smallest remaining term first: 1/x <= rem and k/x >= rem.
        let (n, dd) = (rem.numer(), rem.denom());
        let lower = dd
            .div_ceil(n)
            .to_u64()
            .ok_or(AlgebraError::DenominatorOverflow)?
            .max(lo);
        let upper = (BigInt::from(k) * dd / n)
            .to_u64()
            .ok_or(AlgebraError::DenominatorOverflow)?;
        for x in lower..=upper {
            if !(self.admissible)(x) {
                continue;
            }
            let next = &rem - Rational::new(BigInt::one(), BigInt::from(x));
            if next.is_zero() || next.is_negative() {
                continue;
            }
            self.prefix.push(x);
            let res = self.run(next, k - 1, x);
            self.prefix.pop();
            res?;
        }
        Ok(())
    }
}
