use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::support;
use super::{FaceSet, NewtonError, SparsePoly};
use crate::algebra::linalg::{feasible_point, nullspace};
use crate::algebra::Rational;

/// Weight data read off a polynomial.
///
/// `weights` and `degree` are present exactly when the polynomial is weighted
/// homogeneous. Variable order is never changed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    pub dim: usize,
    /// Exponent of the pure power of `x_i`, if one occurs (the smallest one).
    pub pure_exponents: Vec<Option<u64>>,
    pub weights: Option<Vec<u64>>,
    pub degree: Option<u64>,
    pub convenient: bool,
    pub weighted_homogeneous: bool,
    pub singular: bool,
}

impl WeightProfile {
    /// The weights sorted in decreasing order, for display.
    pub fn sorted_weights(&self) -> Option<Vec<u64>> {
        self.weights.as_ref().map(|w| {
            let mut w = w.clone();
            w.sort_unstable_by(|a, b| b.cmp(a));
            w
        })
    }

    pub fn exponents(&self) -> Option<PureExponents> {
        let v: Option<Vec<u64>> = self.pure_exponents.iter().copied().collect();
        PureExponents::new(v?).ok()
    }
}

/// Reads convenience, weighted homogeneity and the pure exponents off `f`.
pub fn analyze_polynomial(f: &SparsePoly) -> WeightProfile {
    let d = f.dim();
    let mut pure_exponents = vec![None; d];
    for e in f.exponents() {
        let s = support(e);
        if s.len() == 1 {
            let i = s.iter().next().unwrap();
            let k = u64::from(e[i]);
            pure_exponents[i] = Some(pure_exponents[i].map_or(k, |old: u64| old.min(k)));
        }
    }
    let convenient = pure_exponents.iter().all(Option::is_some);
    let weights = homogeneity_weights(f);
    let degree = weights.as_ref().map(|w| {
        let e = f.exponents().next().unwrap();
        e.iter().zip(w).map(|(&a, &b)| u64::from(a) * b).sum()
    });
    let singular = convenient && pure_exponents.iter().all(|x| x.is_some_and(|k| k >= 2));
    WeightProfile {
        dim: d,
        pure_exponents,
        weighted_homogeneous: weights.is_some(),
        weights,
        degree,
        convenient,
        singular,
    }
}

/// Primitive positive integer `w` with `w . nu` constant on the support of
/// `f`, if one exists.
fn homogeneity_weights(f: &SparsePoly) -> Option<Vec<u64>> {
    let d = f.dim();
    let mut exps = f.exponents();
    let base: Vec<Rational> = exps
        .next()
        .unwrap()
        .iter()
        .map(|&k| Rational::from_integer(k.into()))
        .collect();
    let rows: Vec<Vec<Rational>> = exps
        .map(|e| {
            e.iter()
                .zip(&base)
                .map(|(&k, b)| Rational::from_integer(k.into()) - b)
                .collect()
        })
        .collect();
    let basis = nullspace(&rows, d);
    if basis.is_empty() {
        return None;
    }
    // Find c with (sum_j c_j b_j)_i >= 1 for every coordinate i.
    let ineqs: Vec<(Vec<Rational>, Rational)> = (0..d)
        .map(|i| {
            (
                basis.iter().map(|b| b[i].clone()).collect(),
                Rational::one(),
            )
        })
        .collect();
    let c = feasible_point(&ineqs, basis.len())?;
    let w: Vec<Rational> = (0..d)
        .map(|i| basis.iter().zip(&c).map(|(b, cj)| &b[i] * cj).sum())
        .collect();
    let scale = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = w
        .iter()
        .map(|x| (x * Rational::from_integer(scale.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter()
        .map(|x| {
            debug_assert!(x.is_positive());
            (x / &g).to_u64()
        })
        .collect()
}

/// The pure exponents `(delta_1, ..., delta_d)` of a convenient weighted
/// homogeneous polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PureExponents(Vec<u64>);

impl PureExponents {
    pub fn new(exps: Vec<u64>) -> Result<Self, NewtonError> {
        if exps.is_empty() {
            return Err(NewtonError::ZeroDimension);
        }
        if exps.len() > FaceSet::MAX_DIM {
            return Err(NewtonError::TooManyVariables(exps.len()));
        }
        if exps.contains(&0) {
            return Err(NewtonError::ZeroExponent);
        }
        Ok(Self(exps))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `delta_I = lcm { delta_i : i in I }`, with `delta_{} = 1`.
    pub fn lcm_of(&self, face: FaceSet) -> u64 {
        face.iter().fold(1, |acc, i| acc.lcm(&self.0[i]))
    }

    pub fn lcm(&self) -> u64 {
        self.lcm_of(FaceSet::full(self.dim()))
    }

    /// `w_i = lcm / delta_i`, in variable order.
    pub fn weights(&self) -> Vec<u64> {
        let l = self.lcm();
        self.0.iter().map(|&x| l / x).collect()
    }

    /// `|w| = sum_i w_i`.
    pub fn weight_sum(&self) -> u64 {
        self.weights().iter().sum()
    }

    pub fn is_singular(&self) -> bool {
        self.0.iter().all(|&x| x >= 2)
    }

    /// `I(m) = { i : delta_i | m }`.
    pub fn divisor_set(&self, m: &BigUint) -> FaceSet {
        FaceSet::from_indices((0..self.dim()).filter(|&i| (m % self.0[i]).is_zero()))
    }

    pub fn divisor_set_u64(&self, m: u64) -> FaceSet {
        FaceSet::from_indices((0..self.dim()).filter(|&i| m.is_multiple_of(self.0[i])))
    }

    /// `s(m) = sum_i floor(m / delta_i)`.
    pub fn lshift(&self, m: &BigUint) -> BigUint {
        self.0.iter().map(|&x| m / x).sum()
    }

    pub fn lshift_u64(&self, m: u64) -> u64 {
        self.0.iter().map(|&x| m / x).sum()
    }
}

/// A polynomial that passed the convenience and weighted-homogeneity gates,
/// with its data cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhPolynomial {
    poly: SparsePoly,
    profile: WeightProfile,
    exps: PureExponents,
    signs: Vec<i8>,
}

impl WhPolynomial {
    pub fn new(poly: SparsePoly) -> Result<Self, NewtonError> {
        let profile = analyze_polynomial(&poly);
        if !profile.convenient {
            return Err(NewtonError::NotConvenient);
        }
        if !profile.weighted_homogeneous {
            return Err(NewtonError::NotWeightedHomogeneous);
        }
        let exps = profile
            .exponents()
            .expect("convenient profile has all exponents");
        let signs = (0..poly.dim())
            .map(|i| {
                let mut e = vec![0u32; poly.dim()];
                e[i] = exps.as_slice()[i] as u32;
                if poly.coeff(&e).expect("pure monomial present").is_negative() {
                    -1
                } else {
                    1
                }
            })
            .collect();
        Ok(Self {
            poly,
            profile,
            exps,
            signs,
        })
    }

    /// `sum_i sign_i x_i^delta_i`; signs are taken as +1 when omitted.
    pub fn brieskorn(exps: &[u64], signs: Option<&[i32]>) -> Result<Self, NewtonError> {
        let e: Vec<u32> = exps
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| NewtonError::ExponentTooLarge(x)))
            .collect::<Result<_, _>>()?;
        let ones = vec![1; exps.len()];
        Self::new(SparsePoly::brieskorn(&e, signs.unwrap_or(&ones))?)
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn profile(&self) -> &WeightProfile {
        &self.profile
    }

    pub fn exponents(&self) -> &PureExponents {
        &self.exps
    }

    pub fn dim(&self) -> usize {
        self.poly.dim()
    }

    /// Sign of the coefficient of `x_i^delta_i`.
    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn is_singular(&self) -> bool {
        self.exps.is_singular()
    }

    /// `f_{tau_I}`: the terms supported on `I`.
    pub fn face_poly(&self, face: FaceSet) -> SparsePoly {
        self.poly
            .restrict(face)
            .expect("every face carries its pure vertices")
    }
}
