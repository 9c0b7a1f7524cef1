use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::ToPrimitive;

use crate::algebra::LRational;
use crate::chi::{face_symbol_chi, ChiTriple};
use crate::newton::{FaceSet, WhPolynomial};

/// Formal generators of the coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// The unit class.
    One,
    /// `A_I`: the class of `f_I` on `(R^*)^I` minus its zero set, over `R^*`.
    Fiber(FaceSet),
    /// `B_I`: the zero set of `f_I` in `(R^*)^I`, times `R^*`.
    Zero(FaceSet),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::One => f.write_str("1"),
            Symbol::Fiber(i) => write!(f, "A{i}"),
            Symbol::Zero(i) => write!(f, "B{i}"),
        }
    }
}

/// A finite combination of [`Symbol`]s with [`LRational`] coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClassExpr(BTreeMap<Symbol, LRational>);

impl ClassExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Symbol::One, LRational::one())
    }

    pub fn term(s: Symbol, c: LRational) -> Self {
        let mut e = Self::zero();
        e.add_term(s, c);
        e
    }

    pub fn add_term(&mut self, s: Symbol, c: LRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(s).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.0.remove(&s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, s: Symbol) -> LRational {
        self.0.get(&s).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Symbol, &LRational)> {
        self.0.iter()
    }

    pub fn scale(&self, c: &LRational) -> Self {
        let mut out = Self::zero();
        for (s, x) in &self.0 {
            out.add_term(*s, x * c);
        }
        out
    }

    /// Multiplication by `L^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self(self.0.iter().map(|(s, x)| (*s, x.shift(e))).collect())
    }

    /// The map forgetting the morphism to `R^*`:
    /// `1 -> (L-1) 1`, `A_I -> (L-1)^|I| 1 - B_I`, `B_I -> (L-1) B_I`.
    pub fn naive(&self) -> Self {
        let mut out = Self::zero();
        for (s, x) in &self.0 {
            match *s {
                Symbol::One => out.add_term(Symbol::One, x.mul_l_minus_one_pow(1)),
                Symbol::Fiber(i) => {
                    out.add_term(Symbol::One, x.mul_l_minus_one_pow(i.len() as i64));
                    out.add_term(Symbol::Zero(i), -x);
                }
                Symbol::Zero(i) => out.add_term(Symbol::Zero(i), x.mul_l_minus_one_pow(1)),
            }
        }
        out
    }

    /// Euler characteristic realization, `L` evaluated at `-1`. `None` when a
    /// coefficient does not evaluate to an integer in range.
    pub fn chi(&self, wh: &WhPolynomial) -> Option<ChiTriple> {
        let mut total = ChiTriple::zero();
        for (s, x) in &self.0 {
            let v = x.eval_at_minus_one();
            if !v.is_integer() {
                return None;
            }
            let c = v.to_integer().to_i64()?;
            let unit = match *s {
                Symbol::One => ChiTriple::unit(),
                Symbol::Fiber(i) => face_symbol_chi(wh, i).0,
                Symbol::Zero(i) => face_symbol_chi(wh, i).1,
            };
            total = total + unit.scale(c);
        }
        Some(total)
    }
}

impl Add for &ClassExpr {
    type Output = ClassExpr;
    fn add(self, rhs: &ClassExpr) -> ClassExpr {
        let mut out = self.clone();
        for (s, x) in &rhs.0 {
            out.add_term(*s, x.clone());
        }
        out
    }
}

impl Sub for &ClassExpr {
    type Output = ClassExpr;
    fn sub(self, rhs: &ClassExpr) -> ClassExpr {
        self + &(-rhs)
    }
}

impl Neg for &ClassExpr {
    type Output = ClassExpr;
    fn neg(self) -> ClassExpr {
        ClassExpr(self.0.iter().map(|(s, x)| (*s, -x)).collect())
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (s, x)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({x})*{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn naive_map_and_chi() {
        let i = FaceSet::singleton(0);
        let e = &ClassExpr::term(Symbol::Fiber(i), LRational::one()) - &ClassExpr::one();
        let n = e.naive();
        assert_eq!(n.coeff(Symbol::One), LRational::zero());
        assert_eq!(n.coeff(Symbol::Zero(i)), LRational::from_int(-1));
        let f = WhPolynomial::brieskorn(&[2], None).unwrap();
        // A - 1 at x^2: (chi{x^2=1}, chi{x^2=-1}, -2 - 0) - (1, 1, -2)
        assert_eq!(e.chi(&f), Some(ChiTriple::exact(1, -1, 0)));
        assert_eq!(
            ClassExpr::term(Symbol::One, LRational::l_minus_one_pow(-1)).chi(&f),
            None
        );
        assert_eq!(e.to_string(), "(-1)*1 + (1)*A{1}");
    }
}
