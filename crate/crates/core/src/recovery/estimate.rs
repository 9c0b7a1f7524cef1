use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::{RecoveryError, ZetaOracle};
use crate::algebra::{primes_up_to, Rational};

/// `lcm(1, ..., n)`.
pub fn lcm_up_to(n: u64) -> BigUint {
    primes_up_to(n)
        .into_iter()
        .map(|p| {
            let mut pow = BigUint::from(p);
            while &pow * p <= BigUint::from(n) {
                pow *= p;
            }
            pow
        })
        .product()
}

/// `S = sum_i 1/delta_i`, read off pure coefficients.
///
/// With `M = lcm(1..N)` and `M - 1`, `M + 1` pure, `s(M + 1) - s(M - 1)`
/// counts the exponents dividing `M`. It equals `d`
/// exactly when every exponent divides `M`, and then `S = s(M + 1) / M`.
/// `N` doubles from 2 until this holds; the candidate is then confirmed at
/// `2M` as well. Fails once `N` would exceed `max_n`, reporting the last
/// unconfirmed candidate.
pub fn estimate_s<O: ZetaOracle + ?Sized>(
    oracle: &O,
    max_n: u64,
) -> Result<Rational, RecoveryError> {
    let d = BigInt::from(oracle.dimension());
    let mut partial: Option<Rational> = None;
    let mut n = 2u64;
    while n <= max_n {
        let m = lcm_up_to(n);
        let above = shift_at(oracle, &(&m + 1u32));
        let below = shift_at(oracle, &(&m - 1u32));
        if let Some(above) = above {
            let candidate = Rational::new(above.clone(), BigInt::from(m.clone()));
            if below.is_some_and(|b| &above - b == d) {
                let twice = &m * 2u32;
                let check = shift_at(oracle, &(&twice + 1u32));
                if check.is_some_and(|s| {
                    Rational::from_integer(s) == &candidate * Rational::from_integer(twice.into())
                }) {
                    return Ok(candidate);
                }
            }
            partial = Some(candidate);
        }
        n *= 2;
    }
    Err(RecoveryError::SBudget { max_n, partial })
}

/// `s(m) = 1 - deg beta(overline a_m)` at a pure `m`.
fn shift_at<O: ZetaOracle + ?Sized>(oracle: &O, m: &BigUint) -> Option<BigInt> {
    oracle.deg_beta_bar(m).map(|deg| BigInt::one() - deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::newton::WhPolynomial;
    use crate::recovery::ProfileOracle;
    use crate::zeta::ZetaContext;

    fn oracle(delta: &[u64]) -> ProfileOracle {
        ProfileOracle::new(
            &ZetaContext::new(WhPolynomial::brieskorn(delta, None).unwrap()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(estimate_s(&oracle(&[2, 3]), 1 << 16).unwrap(), rat(5, 6));
        assert_eq!(
            estimate_s(&oracle(&[2, 4, 6]), 1 << 16).unwrap(),
            rat(11, 12)
        );
        assert_eq!(estimate_s(&oracle(&[2]), 1 << 16).unwrap(), rat(1, 2));
        assert_eq!(estimate_s(&oracle(&[37, 2]), 1 << 16).unwrap(), rat(39, 74));
        assert_eq!(lcm_up_to(10), BigUint::from(2520u32));
    }

    #[test]
    fn budget_is_reported() {
        let err = estimate_s(&oracle(&[37, 2]), 16).unwrap_err();
        assert!(matches!(
            err,
            RecoveryError::SBudget {
                max_n: 16,
                partial: Some(_)
            }
        ));
    }
}
