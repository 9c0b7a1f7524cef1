//! Euler characteristics with compact support of level sets of diagonal
//! forms `sum_i eps_i x_i^delta_i`.

use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// `(R^*)^k`
    Torus,
    /// `R^k`
    Affine,
}

/// Beyond this many variables the orthant enumeration is replaced by the
/// equivalent closed count.
const ORTHANT_LIMIT: usize = 12;

/// `chi_c({ x : sum eps_i x_i^delta_i = c })` inside the torus or the affine
/// space.
///
/// In the torus each of the `2^k` open orthants is handled separately: with
/// `t_i = |x_i|^delta_i` the piece becomes `{ t > 0 : sum eta_i t_i = c }`,
/// `eta_i = eps_i sigma_i^delta_i`, an open convex cell of dimension `k - 1`
/// when nonempty. The affine value adds the torus values of all coordinate
/// strata.
///
/// Panics if the slices differ in length, a sign is zero, an exponent is zero
/// or `level` is not in `{-1, 0, 1}`.
pub fn chi_diag_fiber(signs: &[i8], exps: &[u64], level: i8, ambient: Ambient) -> i64 {
    assert_eq!(signs.len(), exps.len(), "one sign per exponent");
    assert!(
        signs.iter().all(|&s| s == 1 || s == -1),
        "signs must be +1 or -1"
    );
    assert!(exps.iter().all(|&e| e >= 1), "exponents must be positive");
    assert!((-1..=1).contains(&level), "level must be -1, 0 or 1");
    let k = signs.len();
    if k <= ORTHANT_LIMIT {
        match ambient {
            Ambient::Torus => torus_by_orthants(signs, exps, level),
            Ambient::Affine => (0u32..1 << k)
                .map(|mask| {
                    let (s, e): (Vec<i8>, Vec<u64>) = (0..k)
                        .filter(|&i| mask & (1 << i) != 0)
                        .map(|i| (signs[i], exps[i]))
                        .unzip();
                    torus_by_orthants(&s, &e, level)
                })
                .sum(),
        }
    } else {
        let c = Counts::of(signs, exps);
        match ambient {
            Ambient::Torus => c.torus(level),
            Ambient::Affine => c.affine(level),
        }
    }
}

fn torus_by_orthants(signs: &[i8], exps: &[u64], level: i8) -> i64 {
    let k = signs.len();
    if k == 0 {
        return i64::from(level == 0);
    }
    let cell = if k % 2 == 1 { 1 } else { -1 };
    let mut total = 0;
    for sigma in 0u32..1 << k {
        let (mut pos, mut neg) = (false, false);
        for i in 0..k {
            let flip = sigma & (1 << i) != 0 && exps[i] % 2 == 1;
            if (signs[i] > 0) != flip {
                pos = true;
            } else {
                neg = true;
            }
        }
        let nonempty = match level {
            0 => pos && neg,
            1 => pos,
            _ => neg,
        };
        if nonempty {
            total += cell;
        }
    }
    total
}

/// Counts of odd exponents and of even exponents by sign; the torus value
/// depends on nothing else.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Counts {
    pub odd: u32,
    pub even_pos: u32,
    pub even_neg: u32,
}

impl Counts {
    pub fn of(signs: &[i8], exps: &[u64]) -> Self {
        let mut c = Self {
            odd: 0,
            even_pos: 0,
            even_neg: 0,
        };
        for (&s, &e) in signs.iter().zip(exps) {
            if e % 2 == 1 {
                c.odd += 1;
            } else if s > 0 {
                c.even_pos += 1;
            } else {
                c.even_neg += 1;
            }
        }
        c
    }

    pub fn torus(self, level: i8) -> i64 {
        let k = self.odd + self.even_pos + self.even_neg;
        if k == 0 {
            return i64::from(level == 0);
        }
        let even = 1i64 << (self.even_pos + self.even_neg);
        let odd = 1i64 << self.odd;
        let all_pos = i64::from(self.even_neg == 0);
        let all_neg = i64::from(self.even_pos == 0);
        let pieces = match level {
            0 => odd - all_pos - all_neg,
            1 => odd - all_neg,
            _ => odd - all_pos,
        };
        let cell = if k % 2 == 1 { 1 } else { -1 };
        cell * even * pieces
    }

    pub fn affine(self, level: i8) -> i64 {
        let mut total = 0;
        for a in 0..=self.odd {
            for b in 0..=self.even_pos {
                for c in 0..=self.even_neg {
                    let mult =
                        binom(self.odd, a) * binom(self.even_pos, b) * binom(self.even_neg, c);
                    let sub = Self {
                        odd: a,
                        even_pos: b,
                        even_neg: c,
                    };
                    total += mult * sub.torus(level);
                }
            }
        }
        total
    }
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}
