//! Small dense exact linear algebra over the rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Reduces `m` to reduced row echelon form in place and returns the pivot
/// columns.
#[allow(clippy::needless_range_loop)]
pub fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let delta = &f * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// Basis of `{x : rows * x = 0}`.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Some point satisfying every `a . x >= b`, by Fourier-Motzkin elimination.
pub fn feasible_point(ineqs: &[(Vec<Rational>, Rational)], nvars: usize) -> Option<Vec<Rational>> {
    // levels[j] holds the system in variables 0..=j, before eliminating j.
    let mut levels: Vec<Vec<(Vec<Rational>, Rational)>> = Vec::with_capacity(nvars);
    let mut current = ineqs.to_vec();
    for j in (0..nvars).rev() {
        let mut next = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (a, b) in &current {
            if a[j].is_positive() {
                pos.push((a.clone(), b.clone()));
            } else if a[j].is_negative() {
                neg.push((a.clone(), b.clone()));
            } else {
                next.push((a.clone(), b.clone()));
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let (sp, sn) = (ap[j].recip(), -an[j].recip());
                let a: Vec<Rational> = ap.iter().zip(an).map(|(x, y)| x * &sp + y * &sn).collect();
                next.push((a, bp * &sp + bn * &sn));
            }
        }
        levels.push(current);
        current = next;
    }
    if current.iter().any(|(_, b)| b.is_positive()) {
        return None;
    }
    levels.reverse();
    let mut x = vec![Rational::zero(); nvars];
    for (j, system) in levels.iter().enumerate() {
        let (mut lo, mut hi): (Option<Rational>, Option<Rational>) = (None, None);
        for (a, b) in system {
            if a[j].is_zero() {
                continue;
            }
            let rest: Rational = (0..j).map(|i| &a[i] * &x[i]).sum();
            let bound = (b - rest) / &a[j];
            if a[j].is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
        x[j] = match (lo, hi) {
            (Some(l), _) => l,
            (None, Some(h)) => h,
            (None, None) => Rational::zero(),
        };
    }
    Some(x)
}

/// Solves `m * x = rhs` for a unique `x`. Returns `Err(true)` when the system
/// is inconsistent and `Err(false)` when it is underdetermined.
pub fn solve_unique(
    m: &[Vec<Rational>],
    rhs: &[Rational],
    ncols: usize,
) -> Result<Vec<Rational>, bool> {
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.contains(&ncols) {
        return Err(true);
    }
    if pivots.len() < ncols {
        return Err(false);
    }
    Ok((0..ncols).map(|r| aug[r][ncols].clone()).collect())
}
