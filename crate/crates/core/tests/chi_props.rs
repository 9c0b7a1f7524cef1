use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use wzeta_core::algebra::Rational;
use wzeta_core::chi::{
    chi_diag_fiber, congruent, diagonalize_quadratic, token_for_divisor_set, Ambient, DiagonalData,
};
use wzeta_core::newton::{FaceSet, SparsePoly, WhPolynomial};

fn form_from_matrix(a: &[Vec<i64>]) -> Option<SparsePoly> {
    let k = a.len();
    let mut terms = Vec::new();
    for i in 0..k {
        for j in i..k {
            let c = if i == j { a[i][i] } else { 2 * a[i][j] };
            let mut e = vec![0u32; k];
            e[i] += 1;
            e[j] += 1;
            terms.push((e, Rational::from_integer(BigInt::from(c))));
        }
    }
    SparsePoly::from_terms(k, terms).ok()
}

fn symmetric(k: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(-3i64..4, k * k).prop_map(move |v| {
        let mut a = vec![vec![0; k]; k];
        for i in 0..k {
            for j in i..k {
                a[i][j] = v[i * k + j];
                a[j][i] = v[i * k + j];
            }
        }
        a
    })
}

fn signature_data(q: &SparsePoly) -> DiagonalData {
    let d = diagonalize_quadratic(q, FaceSet::full(q.dim())).unwrap();
    let (p, n, z) = d.signature();
    let mut pairs = vec![(2u64, 1i8); p];
    pairs.extend(vec![(2, -1); n]);
    pairs.extend(vec![(2, 0); z]);
    DiagonalData::new(pairs)
}

proptest! {
    #[test]
    fn torus_value_depends_on_exponent_parity(
        signs in prop::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], 1..5),
        exps in prop::collection::vec(2u64..8, 4),
        level in -1i8..2,
    ) {
        let k = signs.len();
        let e = &exps[..k];
        let reduced: Vec<u64> = e.iter().map(|&x| if x % 2 == 0 { 2 } else { 3 }).collect();
        prop_assert_eq!(
            chi_diag_fiber(&signs, e, level, Ambient::Torus),
            chi_diag_fiber(&signs, &reduced, level, Ambient::Torus)
        );
    }

    #[test]
    fn affine_is_the_sum_over_coordinate_strata(
        signs in prop::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], 1..5),
        exps in prop::collection::vec(1u64..8, 4),
        level in -1i8..2,
    ) {
        let k = signs.len();
        let mut total = 0;
        for mask in 0u32..1 << k {
            let idx: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).collect();
            if idx.is_empty() {
                total += i64::from(level == 0);
                continue;
            }
            let s: Vec<i8> = idx.iter().map(|&i| signs[i]).collect();
            let e: Vec<u64> = idx.iter().map(|&i| exps[i]).collect();
            total += chi_diag_fiber(&s, &e, level, Ambient::Torus);
        }
        prop_assert_eq!(chi_diag_fiber(&signs, &exps[..k], level, Ambient::Affine), total);
    }

    #[test]
    fn quadratic_fibers_differ_by_an_odd_number(a in (1usize..6).prop_flat_map(symmetric)) {
        if let Some(q) = form_from_matrix(&a) {
            let data = signature_data(&q);
            let diff = data.chi(1, Ambient::Affine) - data.chi(0, Ambient::Affine);
            prop_assert_eq!(diff.rem_euclid(2), 1);
        }
    }

    #[test]
    fn signature_is_a_congruence_invariant(
        a in symmetric(4),
        ops in prop::collection::vec((0usize..4, 0usize..4, -2i64..3), 20),
    ) {
        let Some(q) = form_from_matrix(&a) else { return Ok(()); };
        let base = diagonalize_quadratic(&q, FaceSet::full(4)).unwrap();
        // P = product of elementary matrices I + c e_s e_t^T (s != t), all invertible.
        let mut p: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| Rational::from_integer(BigInt::from(i64::from(i == j)))).collect())
            .collect();
        for (s, t, c) in ops {
            if s == t {
                continue;
            }
            for row in p.iter_mut() {
                let v = &row[s] * Rational::from_integer(BigInt::from(c));
                row[t] += v;
            }
        }
        let gram: Vec<Vec<Rational>> = a
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
            .collect();
        let moved = congruent(&gram, &p);
        let mut terms = Vec::new();
        for i in 0..4 {
            for j in i..4 {
                let c = if i == j { moved[i][i].clone() } else { &moved[i][j] * Rational::from_integer(BigInt::from(2)) };
                let mut e = vec![0u32; 4];
                e[i] += 1;
                e[j] += 1;
                terms.push((e, c));
            }
        }
        let q2 = SparsePoly::from_terms(4, terms).unwrap();
        let other = diagonalize_quadratic(&q2, FaceSet::full(4)).unwrap();
        prop_assert_eq!(base.signature(), other.signature());
    }

    #[test]
    fn equal_divisor_sets_give_equal_tokens(
        delta in prop::collection::vec(2u64..8, 1..5),
        m in 1u64..400,
        k in 1u64..50,
    ) {
        let f = WhPolynomial::brieskorn(&delta, None).unwrap();
        let lcm = f.exponents().lcm();
        let m2 = m + k * lcm;
        let (a, ca) = token_for_divisor_set(&f, &BigUint::from(m)).unwrap();
        let (b, cb) = token_for_divisor_set(&f, &BigUint::from(m2)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(ca, cb);
        prop_assert_eq!(a.canonical(), b.canonical());
    }
}

#[test]
fn every_quadratic_signature_has_odd_difference() {
    for p in 0..=6usize {
        for n in 0..=6 - p {
            for z in 0..=6 - p - n {
                if p + n + z == 0 {
                    continue;
                }
                let mut pairs = vec![(2u64, 1i8); p];
                pairs.extend(vec![(2, -1); n]);
                pairs.extend(vec![(2, 0); z]);
                let data = DiagonalData::new(pairs);
                let diff = data.chi(1, Ambient::Affine) - data.chi(0, Ambient::Affine);
                assert_eq!(diff.rem_euclid(2), 1, "signature ({p},{n},{z})");
            }
        }
    }
}
