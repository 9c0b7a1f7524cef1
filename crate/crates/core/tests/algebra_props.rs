use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use wzeta_core::algebra::{
    crt_solve, egyptian_solutions, lr_expand, CongruenceSystem, LRational, LaurentPoly, Rational,
};

fn lrational() -> impl Strategy<Value = LRational> {
    (-4i64..3, prop::collection::vec(-3i64..4, 0..5), 0u32..3).prop_map(|(low, cs, den)| {
        let coeffs = cs.into_iter().map(BigInt::from).collect();
        LRational::new(LaurentPoly::from_dense(low, coeffs), den)
    })
}

proptest! {
    #[test]
    fn lrational_is_a_commutative_ring(a in lrational(), b in lrational(), c in lrational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn expansion_of_quotient_by_l_minus_one_is_a_convolution(
        low in -6i64..1,
        cs in prop::collection::vec(-5i64..6, 1..4),
    ) {
        let width = cs.len() as i64;
        // keep the numerator at degree <= 0 so both sides expand
        let low = low.min(1 - width);
        let a = LRational::new(LaurentPoly::from_dense(low, cs.into_iter().map(BigInt::from).collect()), 0);
        let order = 12;
        let ea = lr_expand(&a, order).unwrap();
        let q = &a * &LRational::l_minus_one_pow(-1);
        let eq = lr_expand(&q, order).unwrap();
        // 1/(L-1) = L^-1 + L^-2 + ...
        for (j, x) in eq.iter().enumerate().take(order + 1) {
            let conv: BigInt = ea[..j].iter().cloned().sum();
            prop_assert_eq!(x, &conv);
        }
    }

    #[test]
    fn crt_recovers_a_planted_solution(n in 0u64..1_000_000_000, pick in prop::collection::btree_set(0usize..12, 1..5), exps in prop::collection::vec(1u32..4, 5)) {
        const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
        let moduli: Vec<u64> = pick.iter().enumerate().map(|(k, &i)| PRIMES[i].pow(exps[k])).collect();
        let sys = CongruenceSystem::new(moduli.iter().map(|&m| (BigInt::from(n % m), BigUint::from(m)))).unwrap();
        let total: u64 = moduli.iter().product();
        let x = crt_solve(&sys).to_u64().unwrap();
        prop_assert_eq!(x % total, n % total);
        prop_assert!(x >= 2 && x < total + 2);
    }

    #[test]
    fn egyptian_matches_box_search(delta in prop::collection::vec(2u64..13, 1..5)) {
        let d = delta.len();
        let s: Rational = delta.iter().map(|&x| Rational::new(1.into(), x.into())).sum();
        let sols = egyptian_solutions(&s, d).unwrap();
        for sol in &sols {
            let t: Rational = sol.iter().map(|&x| Rational::new(1.into(), x.into())).sum();
            prop_assert_eq!(&t, &s);
            prop_assert!(sol.windows(2).all(|w| w[0] <= w[1]));
        }
        let mut sorted = delta.clone();
        sorted.sort_unstable();
        prop_assert!(sols.contains(&sorted));
        let bound = (Rational::from_integer((2 * d).into()) / &s).floor().to_integer().to_u64().unwrap();
        let mut brute = Vec::new();
        box_search(&s, d, 2, bound, &mut Vec::new(), &mut brute);
        let inside: Vec<_> = sols.iter().filter(|v| v.iter().all(|&x| x <= bound)).cloned().collect();
        prop_assert_eq!(inside, brute);
    }
}

fn box_search(
    s: &Rational,
    k: usize,
    lo: u64,
    hi: u64,
    prefix: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if k == 0 {
        let t: Rational = prefix
            .iter()
            .map(|&x| Rational::new(1.into(), x.into()))
            .sum();
        if &t == s {
            out.push(prefix.clone());
        }
        return;
    }
    for x in lo..=hi {
        prefix.push(x);
        box_search(s, k - 1, x, hi, prefix, out);
        prefix.pop();
    }
}

#[test]
fn crt_least_witness_is_minimal() {
    let sys = CongruenceSystem::new([(2i64, 4u64), (3, 9)]).unwrap();
    let n = crt_solve(&sys);
    let first = (2u64..).find(|x| x % 4 == 2 && x % 9 == 3).unwrap();
    assert_eq!(n, BigUint::from(first));
    assert!(n.mod_floor(&BigUint::from(36u8)) != BigUint::zero());
}
