use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::{FaceSet, NewtonError, SparsePoly, WhPolynomial};
use crate::algebra::{LRational, LaurentPoly};

/// Limits for the brute-force lattice sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteCaps {
    pub max_m: u64,
    pub max_dim: usize,
    /// Boxes with at most this many points are scanned from `k = (1,...,1)`;
    /// larger ones start at `ceil(m / delta_i)`, below which `m(k) < m`.
    pub full_box: u64,
}

impl Default for BruteCaps {
    fn default() -> Self {
        Self {
            max_m: 500,
            max_dim: 4,
            full_box: 4096,
        }
    }
}

/// `m(k) = min_nu k . nu` over the exponents of `f`, and the exponents where
/// the minimum is attained (ascending).
pub fn support_and_trace(f: &SparsePoly, k: &[u64]) -> (u64, Vec<Vec<u32>>) {
    let mut best = u64::MAX;
    let mut trace = Vec::new();
    for e in f.exponents() {
        let v: u64 = e.iter().zip(k).map(|(&a, &b)| u64::from(a) * b).sum();
        if v < best {
            best = v;
            trace.clear();
        }
        if v == best {
            trace.push(e.clone());
        }
    }
    (best, trace)
}

/// `sum L^{-|k|}` over `k` in `N_{>0}^d` with trace `tau_I` and `m(k) = m`.
///
/// Every point of a finite box is tested with [`support_and_trace`]. For
/// `j` outside `I` the box stops at `t_j = floor(m / delta_j) + 1`; a member
/// point with `k_j = t_j` stands for the whole ray `k_j >= t_j`, which is
/// checked to stay inside the cone one step further and then summed as a
/// geometric tail.
pub fn s_sigma_bruteforce(
    wh: &WhPolynomial,
    face: FaceSet,
    m: u64,
    caps: &BruteCaps,
) -> Result<LRational, NewtonError> {
    let d = wh.dim();
    if m > caps.max_m {
        return Err(NewtonError::Capacity {
            what: "brute-force order m",
            limit: caps.max_m,
            requested: m,
        });
    }
    if d > caps.max_dim {
        return Err(NewtonError::Capacity {
            what: "brute-force dimension",
            limit: caps.max_dim as u64,
            requested: d as u64,
        });
    }
    let f = wh.poly();
    let target: Vec<Vec<u32>> = wh.face_poly(face).exponents().cloned().collect();
    let delta = wh.exponents().as_slice();
    let top: Vec<u64> = delta.iter().map(|&x| m / x + 1).collect();
    let full_size = top.iter().try_fold(1u64, |acc, &t| acc.checked_mul(t));
    let lower: Vec<u64> = if full_size.is_some_and(|s| s <= caps.full_box) {
        vec![1; d]
    } else {
        delta.iter().map(|&x| m.div_ceil(x).max(1)).collect()
    };
    let member = |k: &[u64]| {
        let (mk, trace) = support_and_trace(f, k);
        mk == m && trace == target
    };

    let mut num = LaurentPoly::zero();
    let mut den = 0u32;
    let mut k = lower.clone();
    loop {
        if member(&k) {
            let tails: Vec<usize> = (0..d).filter(|&j| k[j] == top[j]).collect();
            for &j in &tails {
                let mut next = k.clone();
                next[j] += 1;
                if !member(&next) {
                    return Err(NewtonError::UnstableTail { face, m });
                }
            }
            // L^{-|k|} (L/(L-1))^t, over the common denominator (L-1)^den.
            let t = tails.len() as u32;
            let size: u64 = k.iter().sum();
            if t > den {
                for _ in den..t {
                    num = num.mul_l_minus_one();
                }
                den = t;
            }
            let mut term = LaurentPoly::monomial(BigInt::one(), i64::from(t) - size as i64);
            for _ in t..den {
                term = term.mul_l_minus_one();
            }
            num = &num + &term;
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == d {
                return Ok(LRational::new(num, den));
            }
            if k[i] < top[i] {
                k[i] += 1;
                break;
            }
            k[i] = lower[i];
            i += 1;
        }
    }
}
