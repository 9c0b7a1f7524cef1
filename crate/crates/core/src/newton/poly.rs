use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{FaceSet, NewtonError};
use crate::algebra::Rational;

/// Exponent vector of a monomial.
pub type Exponent = Vec<u32>;

/// Sparse polynomial with exact rational coefficients in `x1..xd`.
///
/// No zero coefficient is stored and there is at least one term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    dim: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl SparsePoly {
    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self, NewtonError>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        if dim == 0 {
            return Err(NewtonError::ZeroDimension);
        }
        if dim > FaceSet::MAX_DIM {
            return Err(NewtonError::TooManyVariables(dim));
        }
        let mut map: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != dim {
                return Err(NewtonError::DimensionMismatch {
                    expected: dim,
                    found: e.len(),
                });
            }
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(NewtonError::ZeroPolynomial);
        }
        Ok(Self { dim, terms: map })
    }

    /// `sum_i sign_i * x_i^exps_i`.
    pub fn brieskorn(exps: &[u32], signs: &[i32]) -> Result<Self, NewtonError> {
        if exps.len() != signs.len() {
            return Err(NewtonError::DimensionMismatch {
                expected: exps.len(),
                found: signs.len(),
            });
        }
        let d = exps.len();
        let terms = exps.iter().zip(signs).enumerate().map(|(i, (&e, &s))| {
            let mut nu = vec![0; d];
            nu[i] = e;
            (nu, Rational::from_integer(BigInt::from(s.signum())))
        });
        Self::from_terms(d, terms)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn coeff(&self, e: &[u32]) -> Option<&Rational> {
        self.terms.get(e)
    }

    /// Terms whose support lies inside `face`, or `None` if there are none.
    pub fn restrict(&self, face: FaceSet) -> Option<Self> {
        let terms: BTreeMap<_, _> = self
            .terms
            .iter()
            .filter(|(e, _)| support(e).is_subset_of(face))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        (!terms.is_empty()).then_some(Self {
            dim: self.dim,
            terms,
        })
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> FaceSet {
        self.terms
            .keys()
            .fold(FaceSet::EMPTY, |acc, e| acc.union(support(e)))
    }

    pub fn total_degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(|e| e.iter().sum())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Every term is a pure power of a single variable.
    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|e| support(e).len() == 1)
    }

    pub fn is_quadratic_form(&self) -> bool {
        self.total_degrees().all(|t| t == 2)
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| c * monomial_value(e, x))
            .sum()
    }

    /// Value of `df/dx_i` at `x`.
    pub fn eval_partial(&self, i: usize, x: &[Rational]) -> Rational {
        self.terms
            .iter()
            .filter(|(e, _)| e[i] > 0)
            .map(|(e, c)| {
                let mut de = e.clone();
                de[i] -= 1;
                c * Rational::from_integer(BigInt::from(e[i])) * monomial_value(&de, x)
            })
            .sum()
    }

    /// `c * f`.
    pub fn scale(&self, c: &Rational) -> Result<Self, NewtonError> {
        Self::from_terms(self.dim, self.terms.iter().map(|(e, v)| (e.clone(), v * c)))
    }

    /// `f(l_1 x_1, ..., l_d x_d)`.
    pub fn scale_variables(&self, l: &[Rational]) -> Result<Self, NewtonError> {
        Self::from_terms(
            self.dim,
            self.terms
                .iter()
                .map(|(e, v)| (e.clone(), v * monomial_value(e, l))),
        )
    }
}

pub(crate) fn support(e: &[u32]) -> FaceSet {
    FaceSet::from_indices(e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i))
}

fn monomial_value(e: &[u32], x: &[Rational]) -> Rational {
    e.iter()
        .zip(x)
        .filter(|(&k, _)| k > 0)
        .fold(Rational::one(), |acc, (&k, v)| {
            acc * num_traits::pow(v.clone(), k as usize)
        })
}

impl fmt::Display for SparsePoly {
    /// Text form accepted by the `wzeta` parser, e.g. `x1^2 - 3/2*x1*x2 + x2^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<_> = e.iter().enumerate().filter(|(_, &p)| p > 0).collect();
            let show_coeff = !mag.is_one() || vars.is_empty();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
            }
            for (j, (i, &p)) in vars.iter().enumerate() {
                if show_coeff || j > 0 {
                    f.write_str("*")?;
                }
                write!(f, "x{}", i + 1)?;
                if p > 1 {
                    write!(f, "^{p}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use alloc::string::ToString;

    #[test]
    fn construction_and_display() {
        let f = SparsePoly::from_terms(
            2,
            [
                (vec![0, 3], rat(3, 2)),
                (vec![2, 0], rat(1, 1)),
                (vec![1, 1], rat(-1, 1)),
                (vec![1, 1], rat(-1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "x1^2 - 2*x1*x2 + 3/2*x2^3");
        assert_eq!(f.len(), 3);
        assert!(!f.is_diagonal());
        assert_eq!(
            SparsePoly::from_terms(1, [(vec![1], rat(1, 1)), (vec![1], rat(-1, 1))]),
            Err(NewtonError::ZeroPolynomial)
        );
        assert!(SparsePoly::from_terms(2, [(vec![1], rat(1, 1))]).is_err());
    }

    #[test]
    fn evaluation_and_gradient() {
        let f = SparsePoly::brieskorn(&[2, 3], &[1, -1]).unwrap();
        let x = [rat(2, 1), rat(1, 2)];
        assert_eq!(f.eval(&x), rat(31, 8));
        assert_eq!(f.eval_partial(0, &x), rat(4, 1));
        assert_eq!(f.eval_partial(1, &x), rat(-3, 4));
        assert!(f.restrict(FaceSet::singleton(1)).unwrap().is_monomial());
    }
}
