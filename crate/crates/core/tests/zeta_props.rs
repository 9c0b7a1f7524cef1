use num_bigint::BigUint;
use proptest::prelude::*;
use wzeta_core::algebra::LRational;
use wzeta_core::chi::{ChiTriple, TokenKey};
use wzeta_core::newton::{s_sigma_bruteforce, BruteCaps, FaceSet, WhPolynomial};
use wzeta_core::zeta::{
    bf_coeff, rational_form, s_sigma_closed, verify_modified_identity, ZetaContext,
};

fn exponents(max_dim: usize, lo: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(lo..8, 1..=max_dim)
}

fn signs(d: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(prop_oneof![Just(1), Just(-1)], d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_form_matches_lattice_enumeration(delta in exponents(4, 2)) {
        let f = WhPolynomial::brieskorn(&delta, None).unwrap();
        let caps = BruteCaps { max_m: 120, ..BruteCaps::default() };
        for face in FaceSet::full(delta.len()).nonempty_subsets() {
            for m in 1..=120 {
                let brute = s_sigma_bruteforce(&f, face, m, &caps).unwrap();
                prop_assert_eq!(s_sigma_closed(f.exponents(), face, m), brute, "face {} m {}", face, m);
            }
        }
    }

    #[test]
    fn bf_coefficient_is_a_cone_resummation(delta in exponents(3, 2)) {
        // (L-1)^d sum_{m(k) <= m} L^{-|k|} - 1, with the inner sum collected
        // from the brute-force lattice sums of every face.
        let f = WhPolynomial::brieskorn(&delta, None).unwrap();
        let caps = BruteCaps { max_m: 120, ..BruteCaps::default() };
        let d = delta.len() as i64;
        let mut acc = LRational::zero();
        for m in 1..=60u64 {
            for face in FaceSet::full(delta.len()).nonempty_subsets() {
                acc = &acc + &s_sigma_bruteforce(&f, face, m, &caps).unwrap();
            }
            let resummed = &acc.mul_l_minus_one_pow(d) - &LRational::one();
            prop_assert_eq!(bf_coeff(f.exponents(), m), resummed, "m {}", m);
        }
    }

    #[test]
    fn rational_form_expands_to_the_lazy_series(delta in exponents(3, 2)) {
        let ctx = ZetaContext::new(WhPolynomial::brieskorn(&delta, None).unwrap()).unwrap();
        let r = rational_form(&ctx).unwrap();
        let n = 3 * r.period;
        for (m, c) in (1..=n).zip(r.expand(n)) {
            prop_assert_eq!(c, ctx.ztilde_class(m));
        }
    }

    #[test]
    fn pure_coefficients(
        (delta, s) in exponents(4, 2).prop_flat_map(|d| { let n = d.len(); (Just(d), signs(n)) }),
        m in 1u64..10_000,
    ) {
        let ctx = ZetaContext::new(WhPolynomial::brieskorn(&delta, Some(&s)).unwrap()).unwrap();
        let c = ctx.ztilde_coeff_u64(m);
        let expected: u64 = delta.iter().map(|x| m / x).sum();
        prop_assert_eq!(c.lshift, BigUint::from(expected));
        prop_assert_eq!(c.pure, delta.iter().all(|x| m % x != 0));
        if c.pure {
            prop_assert_eq!(c.chi, ChiTriple::exact(-1, -1, 2));
        }
    }

    #[test]
    fn modified_identity_holds(
        (delta, s) in exponents(3, 1).prop_flat_map(|d| { let n = d.len(); (Just(d), signs(n)) }),
    ) {
        let ctx = ZetaContext::new(WhPolynomial::brieskorn(&delta, Some(&s)).unwrap()).unwrap();
        prop_assert!(verify_modified_identity(&ctx, 30, None).holds);
    }
}

#[test]
fn modified_zeta_vanishes_exactly_for_nonsingular_profiles() {
    let corpus: &[&[u64]] = &[
        &[1],
        &[2],
        &[1, 2],
        &[2, 3],
        &[3, 1, 4],
        &[2, 2, 2],
        &[5, 7],
        &[1, 1, 1, 1],
        &[2, 3, 4, 5],
        &[6, 1],
    ];
    for delta in corpus {
        let ctx = ZetaContext::new(WhPolynomial::brieskorn(delta, None).unwrap()).unwrap();
        let lcm = ctx.polynomial().exponents().lcm();
        let all_zero = (1..=3 * lcm).all(|m| {
            let c = ctx.ztilde_coeff_u64(m);
            c.token.key == TokenKey::Zero && c.chi == ChiTriple::zero()
        });
        assert_eq!(all_zero, delta.contains(&1), "{delta:?}");
    }
}
