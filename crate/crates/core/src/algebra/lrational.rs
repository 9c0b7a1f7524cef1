use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Rational};

/// Laurent polynomial in `L` with integer coefficients.
///
/// Stored densely from the lowest nonzero power; both ends of `coeffs` are
/// nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: BigInt, e: i64) -> Self {
        Self::from_dense(e, vec![c])
    }

    /// `coeffs[i]` is the coefficient of `L^(low + i)`.
    pub fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        let Some(start) = lead else {
            return Self::zero();
        };
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        coeffs.drain(..start);
        Self {
            low: low + start as i64,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending in the exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Multiplies by `L^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at `L = -1`, an integer since `(-1)^(-k) = (-1)^k`.
    pub fn eval_at_minus_one(&self) -> BigInt {
        self.terms()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Exact quotient by `L - 1`, if it exists.
    pub fn div_l_minus_one(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.coeffs.len();
        if n < 2 {
            return None;
        }
        let mut q = vec![BigInt::zero(); n - 1];
        q[n - 2] = self.coeffs[n - 1].clone();
        for i in (1..n - 1).rev() {
            q[i - 1] = &self.coeffs[i] + &q[i];
        }
        if (&self.coeffs[0] + &q[0]).is_zero() {
            Some(Self::from_dense(self.low, q))
        } else {
            None
        }
    }

    pub fn mul_l_minus_one(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c;
        }
        Self::from_dense(self.low, out)
    }

    fn add_scaled(&self, other: &Self, sign: i8) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign > 0 { other.clone() } else { -other };
        }
        let low = self.low.min(other.low);
        let high = self
            .high_degree()
            .unwrap()
            .max(other.high_degree().unwrap());
        let mut out = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(self.low - low) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut out[(other.low - low) as usize + i];
            if sign > 0 {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
        Self::from_dense(low, out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        self.add_scaled(rhs, 1)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        self.add_scaled(rhs, -1)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, out)
    }
}

/// Rational function `P(L) / (L-1)^a` with `P` a Laurent polynomial.
///
/// Powers of `L` in the denominator are absorbed into `P`. The canonical form
/// has `P(1) != 0` whenever `a > 0`, so structural equality is equality of
/// rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LRational {
    num: LaurentPoly,
    den: u32,
}

impl LRational {
    pub fn new(num: LaurentPoly, den: u32) -> Self {
        let mut x = Self { num, den };
        x.reduce();
        x
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = 0;
            return;
        }
        while self.den > 0 {
            match self.num.div_l_minus_one() {
                Some(q) => {
                    self.num = q;
                    self.den -= 1;
                }
                None => break,
            }
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::new(LaurentPoly::monomial(n, 0), 0)
    }

    /// `L^e`.
    pub fn l_pow(e: i64) -> Self {
        Self::new(LaurentPoly::monomial(BigInt::one(), e), 0)
    }

    /// `(L-1)^k` for any sign of `k`.
    pub fn l_minus_one_pow(k: i64) -> Self {
        Self::one().mul_l_minus_one_pow(k)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Exponent `a` of the denominator `(L-1)^a`.
    pub fn den_power(&self) -> u32 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplies by `L^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            num: self.num.shift(e),
            den: self.den,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.num.scale(c), self.den)
    }

    /// Multiplies by `(L-1)^k`, cancelling against the denominator first.
    pub fn mul_l_minus_one_pow(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if k < 0 {
            let den = self.den + u32::try_from(-k).expect("exponent overflow");
            return Self::new(self.num.clone(), den);
        }
        let k = k as u32;
        let cancel = k.min(self.den);
        let mut num = self.num.clone();
        for _ in 0..k - cancel {
            num = num.mul_l_minus_one();
        }
        Self {
            num,
            den: self.den - cancel,
        }
    }

    /// Value at `L = -1`.
    pub fn eval_at_minus_one(&self) -> Rational {
        let den = BigInt::from(-2).pow(self.den);
        Rational::new(self.num.eval_at_minus_one(), den)
    }

    /// Returns the value as an integer constant if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        (self.den == 0 && self.num.low_degree() == Some(0) && self.num.high_degree() == Some(0))
            .then(|| self.num.coeff(0))
    }

    fn combine(&self, other: &Self, sign: i8) -> Self {
        let den = self.den.max(other.den);
        let lift = |x: &Self| {
            let mut n = x.num.clone();
            for _ in x.den..den {
                n = n.mul_l_minus_one();
            }
            n
        };
        let (a, b) = (lift(self), lift(other));
        let num = if sign > 0 { &a + &b } else { &a - &b };
        Self::new(num, den)
    }
}

impl Add for &LRational {
    type Output = LRational;
    fn add(self, rhs: Self) -> LRational {
        self.combine(rhs, 1)
    }
}

impl Sub for &LRational {
    type Output = LRational;
    fn sub(self, rhs: Self) -> LRational {
        self.combine(rhs, -1)
    }
}

impl Neg for &LRational {
    type Output = LRational;
    fn neg(self) -> LRational {
        LRational {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Mul for &LRational {
    type Output = LRational;
    fn mul(self, rhs: Self) -> LRational {
        LRational::new(&self.num * &rhs.num, self.den + rhs.den)
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(LRational, Add add, Sub sub, Mul mul);
forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

impl Neg for LRational {
    type Output = LRational;
    fn neg(self) -> LRational {
        -&self
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, c: &BigInt, e: i64, first: bool) -> fmt::Result {
    let mag = c.abs();
    if first {
        if c.is_negative() {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if c.is_negative() { " - " } else { " + " })?;
    }
    match (e, mag.is_one()) {
        (0, _) => write!(f, "{mag}"),
        (1, true) => f.write_str("L"),
        (1, false) => write!(f, "{mag}*L"),
        (_, true) => write!(f, "L^{e}"),
        (_, false) => write!(f, "{mag}*L^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending powers, e.g. `L^2 - 3*L + 1 - L^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (k, (e, c)) in terms.iter().rev().enumerate() {
            write_power(f, c, *e, k == 0)?;
        }
        Ok(())
    }
}

impl fmt::Display for LRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 0 {
            return write!(f, "{}", self.num);
        }
        let several = self.num.terms().count() > 1;
        let num = if several {
            alloc::format!("({})", self.num)
        } else {
            alloc::format!("{}", self.num)
        };
        let den = if self.den == 1 {
            String::from("(L-1)")
        } else {
            alloc::format!("(L-1)^{}", self.den)
        };
        write!(f, "{num}/{den}")
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Coefficients of `L^0, L^-1, ..., L^-order` in the expansion of `x` at
/// `L = infinity`.
///
/// Uses `1/(L-1)^a = L^-a * sum_k C(a+k-1, k) L^-k`. Fails when `x` has a
/// nonzero polynomial part of positive degree.
pub fn lr_expand(x: &LRational, order: usize) -> Result<Vec<BigInt>, AlgebraError> {
    let mut out = vec![BigInt::zero(); order + 1];
    let Some(high) = x.num.high_degree() else {
        return Ok(out);
    };
    let a = i64::from(x.den);
    if high > a {
        return Err(AlgebraError::NotExpandable);
    }
    for (e, c) in x.num.terms() {
        // c * L^e / (L-1)^a contributes C(a+k-1, k) at L^-(a - e + k).
        let start = a - e;
        for (j, slot) in out.iter_mut().enumerate() {
            let k = j as i64 - start;
            if k < 0 {
                continue;
            }
            let k = k as u64;
            let b = if a == 0 {
                if k == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                binomial(a as u64 + k - 1, k)
            };
            *slot += c * b;
        }
    }
    Ok(out)
}
