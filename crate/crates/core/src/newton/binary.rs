//! Exact non-degeneracy for faces in two variables.
//!
//! The exponents of such a face lie on a segment with primitive direction
//! `(p, -q)`, so `f = x^a y^b P(u)` with `u = x^p y^{-q}` and `P(0) != 0`.
//! As `p` and `q` are coprime, `u` takes every value of `R^*` on the torus,
//! and a torus point is critical exactly when `P(u) = P'(u) = 0`.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::SparsePoly;
use crate::algebra::Rational;

/// Coefficients of `P`, lowest first, when the exponents of `f` (supported
/// on variables `i` and `j`) are collinear.
pub(crate) fn reduce(f: &SparsePoly, i: usize, j: usize) -> Option<Vec<Rational>> {
    let pts: Vec<(i64, i64, &Rational)> = f
        .terms()
        .map(|(e, c)| (i64::from(e[i]), i64::from(e[j]), c))
        .collect();
    let a0 = pts.iter().map(|t| t.0).min()?;
    let b0 = pts.iter().map(|t| t.1).max()?;
    let (da, db) = pts
        .iter()
        .map(|t| (t.0 - a0, b0 - t.1))
        .find(|&(a, b)| a != 0 || b != 0)?;
    let g = da.gcd(&db);
    let (p, q) = (da / g, db / g);
    let mut coeffs = Vec::new();
    for (a, b, c) in pts {
        let (sa, sb) = (a - a0, b0 - b);
        let k = if p != 0 { sa / p } else { sb / q };
        if sa != k * p || sb != k * q || k < 0 {
            return None;
        }
        let k = k as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        coeffs[k] = c.clone();
    }
    Some(coeffs)
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &[Rational]) -> Vec<Rational> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(k.into()))
            .collect(),
    )
}

fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let f = r.last().expect("nonempty") / lead;
        let shift = r.len() - b.len();
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &f * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Number of distinct real roots, by a Sturm sequence.
pub(crate) fn real_root_count(p: &[Rational]) -> usize {
    let p = trim(p.to_vec());
    if p.len() <= 1 {
        return 0;
    }
    let mut seq = vec![p.clone(), derivative(&p)];
    loop {
        let n = seq.len();
        let r: Vec<Rational> = rem(&seq[n - 2], &seq[n - 1])
            .into_iter()
            .map(|c| -c)
            .collect();
        if r.is_empty() {
            break;
        }
        seq.push(r);
    }
    let changes = |signs: Vec<bool>| signs.windows(2).filter(|w| w[0] != w[1]).count();
    let at_pos = seq
        .iter()
        .map(|s| s.last().unwrap().is_positive())
        .collect();
    let at_neg = seq
        .iter()
        .map(|s| s.last().unwrap().is_positive() == (s.len() % 2 == 1))
        .collect();
    changes(at_neg) - changes(at_pos)
}

/// `gcd(P, P')` when it has a real root; `P(0) != 0` keeps that root off
/// zero.
pub(crate) fn repeated_real_factor(p: &[Rational]) -> Option<Vec<Rational>> {
    let g = gcd(p, &derivative(p));
    (real_root_count(&g) > 0).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn poly(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(real_root_count(&poly(&[-1, 0, 1])), 2);
        assert_eq!(real_root_count(&poly(&[1, 0, 1])), 0);
        assert_eq!(real_root_count(&poly(&[0, -1, 0, 1])), 3);
        assert_eq!(real_root_count(&poly(&[1, -2, 1])), 1);
        assert_eq!(real_root_count(&poly(&[5])), 0);
    }

    #[test]
    fn repeated_roots() {
        // (u - 1)^2 (u + 3)
        assert!(repeated_real_factor(&poly(&[3, -5, 1, 1])).is_some());
        // (u^2 + 1)^2 has only complex repeated roots
        assert!(repeated_real_factor(&poly(&[1, 0, 2, 0, 1])).is_none());
        assert!(repeated_real_factor(&poly(&[1, 1, 1])).is_none());
    }

    #[test]
    fn reduction() {
        // x^2 + x y^2 + y^4 = y^4 (1 + u + u^2), u = x y^-2
        let f = SparsePoly::from_terms(
            2,
            [
                (vec![2, 0], rat(1, 1)),
                (vec![1, 2], rat(1, 1)),
                (vec![0, 4], rat(1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(reduce(&f, 0, 1), Some(poly(&[1, 1, 1])));
    }
}
