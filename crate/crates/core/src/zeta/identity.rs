use super::symbolic::ClassExpr;
use super::ZetaContext;
use crate::algebra::LRational;

/// Deliberate faults for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    /// Uses `+L^{-s(m)}` for the coefficients of `B_f - T/(1 - T)`.
    FlipBfSign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub order: u64,
    pub holds: bool,
    pub first_failure: Option<u64>,
}

/// Checks `Z = Z~ + (1 - L^{-1} N(Z~)) / (1 - L^{-1} T) - 1` through `T^n` in
/// the formal ring, `N` being [`ClassExpr::naive`].
///
/// With `V_0 = 1` the right-hand side has coefficients `Z~_m + V_m` where
/// `V_m = L^{-1} V_{m-1} - L^{-1} N(Z~_m)`.
pub fn verify_modified_identity(
    ctx: &ZetaContext,
    n: u64,
    corruption: Option<Corruption>,
) -> IdentityCheck {
    let flip = corruption == Some(Corruption::FlipBfSign);
    let z = ctx.z_coeffs(n);
    let mut v = ClassExpr::one();
    let l_inv = LRational::l_pow(-1);
    for (m, zm) in (1..=n).zip(&z) {
        let zt = ctx.ztilde_class_signed(m, flip);
        v = &v.scale(&l_inv) - &zt.naive().scale(&l_inv);
        if (&zt + &v) != zm.expr {
            return IdentityCheck {
                order: n,
                holds: false,
                first_failure: Some(m),
            };
        }
    }
    IdentityCheck {
        order: n,
        holds: true,
        first_failure: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::WhPolynomial;

    fn ctx(delta: &[u64]) -> ZetaContext {
        ZetaContext::new(WhPolynomial::brieskorn(delta, None).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert!(verify_modified_identity(&ctx(&[2, 3]), 12, None).holds);
        assert!(verify_modified_identity(&ctx(&[2]), 8, None).holds);
        let bad = verify_modified_identity(&ctx(&[2, 3]), 3, Some(Corruption::FlipBfSign));
        assert!(!bad.holds);
        assert_eq!(bad.first_failure, Some(1));
    }

    #[test]
    fn holds_for_several_profiles() {
        for delta in [
            &[4u64][..],
            &[2, 2],
            &[3, 4],
            &[2, 3, 5],
            &[1, 3],
            &[2, 2, 2, 2],
        ] {
            assert!(
                verify_modified_identity(&ctx(delta), 40, None).holds,
                "{delta:?}"
            );
        }
    }
}
