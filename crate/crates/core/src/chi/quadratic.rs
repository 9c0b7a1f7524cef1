use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ChiError;
use crate::algebra::Rational;
use crate::newton::{FaceSet, SparsePoly};

/// Result of congruence-diagonalizing a quadratic form over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticDiagonalization {
    /// Variables of the form, ascending.
    pub vars: Vec<usize>,
    /// Gram matrix `A` with `q(x) = x^T A x`.
    pub gram: Vec<Vec<Rational>>,
    /// Change of basis `P` (columns are the new basis vectors).
    pub basis: Vec<Vec<Rational>>,
    /// Diagonal of `P^T A P`.
    pub diagonal: Vec<Rational>,
}

impl QuadraticDiagonalization {
    /// `(positive, negative, zero)` counts of the diagonal.
    pub fn signature(&self) -> (usize, usize, usize) {
        let p = self.diagonal.iter().filter(|x| x.is_positive()).count();
        let n = self.diagonal.iter().filter(|x| x.is_negative()).count();
        (p, n, self.diagonal.len() - p - n)
    }
}

pub(crate) fn gram_matrix(q: &SparsePoly, vars: &[usize]) -> Result<Vec<Vec<Rational>>, ChiError> {
    let k = vars.len();
    let mut gram = vec![vec![Rational::zero(); k]; k];
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for (e, c) in q.terms() {
        let mut idx = Vec::new();
        for (i, &p) in e.iter().enumerate() {
            if p == 0 {
                continue;
            }
            let Some(a) = vars.iter().position(|&v| v == i) else {
                return Err(ChiError::NotQuadratic);
            };
            for _ in 0..p {
                idx.push(a);
            }
        }
        match idx.as_slice() {
            [a, b] if a == b => gram[*a][*a] += c,
            [a, b] => {
                gram[*a][*b] += c * &half;
                gram[*b][*a] += c * &half;
            }
            _ => return Err(ChiError::NotQuadratic),
        }
    }
    Ok(gram)
}

/// Symmetric Gaussian elimination: finds `P` with `P^T A P` diagonal.
pub fn diagonalize_quadratic(
    q: &SparsePoly,
    vars: FaceSet,
) -> Result<QuadraticDiagonalization, ChiError> {
    let vars: Vec<usize> = vars.iter().collect();
    let gram = gram_matrix(q, &vars)?;
    let (basis, diagonal) = diagonalize_matrix(&gram);
    Ok(QuadraticDiagonalization {
        vars,
        gram,
        basis,
        diagonal,
    })
}

pub(crate) fn diagonalize_matrix(gram: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let k = gram.len();
    let mut a = gram.to_vec();
    let mut p: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for i in 0..k {
        if a[i][i].is_zero() {
            if let Some(j) = (i + 1..k).find(|&j| !a[j][j].is_zero()) {
                a.swap(i, j);
                for row in a.iter_mut() {
                    row.swap(i, j);
                }
                for row in p.iter_mut() {
                    row.swap(i, j);
                }
            } else if let Some(j) = (i + 1..k).find(|&j| !a[i][j].is_zero()) {
                // new x_i := x_i + x_j makes the pivot 2 a_ij
                add_multiple(&mut a, &mut p, i, j, &Rational::one());
            } else {
                continue;
            }
        }
        for j in i + 1..k {
            if a[j][i].is_zero() {
                continue;
            }
            let f = -(&a[j][i] / &a[i][i]);
            add_multiple(&mut a, &mut p, j, i, &f);
        }
    }
    let diagonal = (0..k).map(|i| a[i][i].clone()).collect();
    (p, diagonal)
}

/// Column and row operation `col_t += f col_s`, `row_t += f row_s`, recorded
/// in `p` as `col_t += f col_s`.
#[allow(clippy::needless_range_loop)]
fn add_multiple(
    a: &mut [Vec<Rational>],
    p: &mut [Vec<Rational>],
    t: usize,
    s: usize,
    f: &Rational,
) {
    let k = a.len();
    for r in 0..k {
        let v = &a[r][s] * f;
        a[r][t] += v;
    }
    for c in 0..k {
        let v = &a[s][c] * f;
        a[t][c] += v;
    }
    for row in p.iter_mut() {
        let v = &row[s] * f;
        row[t] += v;
    }
}

/// `P^T A P`.
pub fn congruent(a: &[Vec<Rational>], p: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let k = a.len();
    let ap: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| (0..k).map(|l| &a[i][l] * &p[l][j]).sum())
                .collect()
        })
        .collect();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| (0..k).map(|l| &p[l][i] * &ap[l][j]).sum())
                .collect()
        })
        .collect()
}
