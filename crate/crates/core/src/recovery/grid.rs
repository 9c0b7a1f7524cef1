use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::{RecoveryError, ZetaOracle};
use crate::algebra::{egyptian_solutions_filtered, primes_up_to, Rational};

/// The divisor grid `Q = { prod_{p <= K} p^a_p : 0 <= a_p <= gamma_p }`,
/// `gamma_p = max { g : p^g <= K }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QGrid {
    k: u64,
    primes: Vec<u64>,
    gammas: Vec<u32>,
}

impl QGrid {
    pub fn new(k: u64) -> Self {
        let primes = primes_up_to(k);
        let gammas = primes
            .iter()
            .map(|&p| {
                let mut g = 0;
                let mut pow = 1u64;
                while pow.checked_mul(p).is_some_and(|x| x <= k) {
                    pow *= p;
                    g += 1;
                }
                g
            })
            .collect();
        Self { k, primes, gammas }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn gammas(&self) -> &[u32] {
        &self.gammas
    }

    pub fn gamma(&self, p: u64) -> Option<u32> {
        self.primes
            .iter()
            .position(|&x| x == p)
            .map(|i| self.gammas[i])
    }

    /// `|Q| = prod (gamma_p + 1)`.
    pub fn size(&self) -> BigUint {
        self.gammas.iter().map(|&g| BigUint::from(g + 1)).product()
    }

    /// The largest element, `lcm(1, ..., K)`.
    pub fn max_element(&self) -> BigUint {
        self.primes
            .iter()
            .zip(&self.gammas)
            .map(|(&p, &g)| BigUint::from(p).pow(g))
            .product()
    }

    /// All elements, ascending. Fails beyond `limit` elements or when the
    /// largest one does not fit in a `u64`.
    pub fn elements(&self, limit: usize) -> Result<Vec<u64>, RecoveryError> {
        let size = self.size();
        if size > BigUint::from(limit) || self.max_element().to_u64().is_none() {
            return Err(RecoveryError::GridTooLarge {
                k: self.k,
                size,
                limit,
            });
        }
        let mut out = vec![1u64];
        for (&p, &g) in self.primes.iter().zip(&self.gammas) {
            let mut next = Vec::with_capacity(out.len() * (g as usize + 1));
            for &x in &out {
                let mut v = x;
                for _ in 0..=g {
                    next.push(v);
                    v = v.saturating_mul(p);
                }
            }
            out = next;
        }
        out.sort_unstable();
        Ok(out)
    }

    /// `a_p = v_p(q)` for each `p` in `P`.
    pub fn exponents(&self, q: u64) -> Vec<u32> {
        self.primes
            .iter()
            .map(|&p| {
                let (mut x, mut a) = (q, 0);
                while x % p == 0 && x > 0 {
                    x /= p;
                    a += 1;
                }
                a
            })
            .collect()
    }

    pub fn contains(&self, q: u64) -> bool {
        q > 0 && self.cap_u64(q) == q
    }

    /// `cap(t) = prod p^min(v_p(t), gamma_p)`: the element of `Q` whose
    /// divisors in `Q` are exactly the divisors of `t` in `Q`.
    pub fn cap(&self, t: &BigUint) -> u64 {
        let mut out = 1u64;
        for (&p, &g) in self.primes.iter().zip(&self.gammas) {
            let mut x = t.clone();
            for _ in 0..g {
                if x.is_zero() || !(&x % p).is_zero() {
                    break;
                }
                x /= p;
                out *= p;
            }
        }
        out
    }

    pub fn cap_u64(&self, t: u64) -> u64 {
        self.cap(&BigUint::from(t))
    }

    /// Divisors of `q` that lie in `Q`, ascending.
    pub fn divisors(&self, q: u64) -> Vec<u64> {
        let c = self.cap_u64(q);
        let mut out = vec![1u64];
        for (&p, a) in self.primes.iter().zip(self.exponents(c)) {
            let len = out.len();
            let mut pow = 1;
            for _ in 0..a {
                pow *= p;
                for i in 0..len {
                    out.push(out[i] * pow);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// `K`, `P`, `gamma` and `Q` from `S` and `d` alone: `K` is the largest
/// denominator over all Egyptian decompositions of `S` into `d` parts.
pub fn bound_and_q(
    s: &Rational,
    d: usize,
    node_budget: u64,
) -> Result<(Vec<Vec<u64>>, QGrid), RecoveryError> {
    let sols = egyptian_solutions_filtered(s, d, |_| true, node_budget)?;
    let k =
        max_entry(&sols).ok_or_else(|| RecoveryError::NoEgyptianSolutions { s: s.clone(), d })?;
    Ok((sols, QGrid::new(k)))
}

/// Like [`bound_and_q`], keeping only decompositions the oracle cannot rule
/// out: a true exponent `q` divides `q`, so `a_q` is not pure, and a true
/// multiset reproduces purity and `s(m)` at every probed `m`.
pub fn filtered_bound_and_q<O: ZetaOracle + ?Sized>(
    oracle: &O,
    s: &Rational,
    node_budget: u64,
    probe_limit: u64,
) -> Result<(Vec<Vec<u64>>, QGrid), RecoveryError> {
    let d = oracle.dimension();
    let sols =
        egyptian_solutions_filtered(s, d, |x| !oracle.is_pure(&BigUint::from(x)), node_budget)?;
    let probes: Vec<(u64, bool, Option<u64>)> = (1..=probe_limit)
        .map(|m| {
            let big = BigUint::from(m);
            let pure = oracle.is_pure(&big);
            let shift = oracle
                .deg_beta_bar(&big)
                .and_then(|deg| (num_bigint::BigInt::one() - deg).to_u64());
            (m, pure, shift)
        })
        .collect();
    let sols: Vec<Vec<u64>> = sols
        .into_iter()
        .filter(|c| {
            probes.iter().all(|&(m, pure, shift)| {
                let predicted_pure = c.iter().all(|&x| m % x != 0);
                let predicted_shift: u64 = c.iter().map(|&x| m / x).sum();
                predicted_pure == pure && (!pure || shift == Some(predicted_shift))
            })
        })
        .collect();
    let k =
        max_entry(&sols).ok_or_else(|| RecoveryError::NoEgyptianSolutions { s: s.clone(), d })?;
    Ok((sols, QGrid::new(k)))
}

fn max_entry(sols: &[Vec<u64>]) -> Option<u64> {
    sols.iter().filter_map(|s| s.last().copied()).max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn bound_examples() {
        let (_, g) = bound_and_q(&rat(5, 6), 2, u64::MAX).unwrap();
        assert_eq!((g.k(), g.primes()), (3, &[2u64, 3][..]));
        assert_eq!(g.elements(100).unwrap(), [1, 2, 3, 6]);
        let (sols, g) = bound_and_q(&rat(11, 12), 3, u64::MAX).unwrap();
        assert!(sols.contains(&vec![2, 3, 12]));
        assert_eq!(g.k(), 12);
        assert_eq!(g.primes(), [2, 3, 5, 7, 11]);
        assert_eq!(g.gammas(), [3, 2, 1, 1, 1]);
        assert_eq!(g.size(), BigUint::from(96u32));
        let (_, g) = bound_and_q(&rat(1, 2), 1, u64::MAX).unwrap();
        assert_eq!(g.elements(10).unwrap(), [1, 2]);
        assert!(matches!(
            bound_and_q(&rat(7, 6), 2, u64::MAX),
            Err(RecoveryError::NoEgyptianSolutions { .. })
        ));
    }

    #[test]
    fn caps_and_divisors() {
        let g = QGrid::new(12);
        assert_eq!(g.cap_u64(60), 60);
        assert_eq!(g.cap_u64(16 * 27 * 13), 8 * 9);
        assert_eq!(g.divisors(12), [1, 2, 3, 4, 6, 12]);
        assert!(g.contains(88));
        assert!(!g.contains(16));
        assert!(g.elements(50).is_err());
    }
}
