use alloc::vec::Vec;
use core::fmt;

use super::symbolic::{ClassExpr, Symbol};
use super::{ZetaContext, ZetaError};
use crate::algebra::LRational;
use crate::newton::FaceSet;

/// One numerator term `class * L^{-lshift} * T^{t_power}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumeratorTerm {
    /// `I`; the empty set carries the class `-1` with `delta_I = 1`.
    pub face: FaceSet,
    pub class: ClassExpr,
    pub lshift: u64,
    pub t_power: u64,
}

/// `Z~_f(T) = P(T) / (1 - L^{-|w|} T^{m(w)})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalZeta {
    /// Ordered by `(t_power, face)`.
    pub numerator: Vec<NumeratorTerm>,
    /// `|w| = sum_i lcm(delta) / delta_i`.
    pub weight_sum: u64,
    /// `m(w) = lcm(delta)`.
    pub period: u64,
}

impl RationalZeta {
    /// Coefficients of `T^1..=T^n` of the expansion.
    pub fn expand(&self, n: u64) -> Vec<ClassExpr> {
        let mut num: Vec<ClassExpr> = (0..=n).map(|_| ClassExpr::zero()).collect();
        for t in &self.numerator {
            if t.t_power <= n {
                let v = t.class.shift(-(t.lshift as i64));
                num[t.t_power as usize] = &num[t.t_power as usize] + &v;
            }
        }
        // c_m = N_m + L^{-|w|} c_{m - m(w)}
        let mut out: Vec<ClassExpr> = Vec::with_capacity(n as usize + 1);
        out.push(ClassExpr::zero());
        for m in 1..=n {
            let mut c = num[m as usize].clone();
            if m > self.period {
                c = &c + &out[(m - self.period) as usize].shift(-(self.weight_sum as i64));
            }
            out.push(c);
        }
        out.remove(0);
        out
    }
}

impl fmt::Display for RationalZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, t) in self.numerator.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(
                f,
                "[{}]*{}*T^{}",
                t.class,
                LRational::l_pow(-(t.lshift as i64)),
                t.t_power
            )?;
        }
        write!(f, ")/(1 - L^-{} T^{})", self.weight_sum, self.period)
    }
}

/// Closed rational form, by Euclidean division of the exponents of each
/// face series by `lcm(delta)`.
pub fn rational_form(ctx: &ZetaContext) -> Result<RationalZeta, ZetaError> {
    let wh = ctx.polynomial();
    if !wh.is_singular() {
        return Err(ZetaError::NonSingular);
    }
    let exps = wh.exponents();
    let period = exps.lcm();
    let mut faces: Vec<(FaceSet, ClassExpr)> = Vec::new();
    faces.push((FaceSet::EMPTY, -&ClassExpr::one()));
    for face in ctx.faces() {
        let mut c = ClassExpr::term(Symbol::Fiber(face.subset), LRational::one());
        c.add_term(Symbol::Zero(face.subset), -LRational::one());
        faces.push((face.subset, c));
    }
    let mut numerator = Vec::new();
    for (face, class) in faces {
        let step = exps.lcm_of(face);
        for s in 1..=period / step {
            let t_power = s * step;
            numerator.push(NumeratorTerm {
                face,
                class: class.clone(),
                lshift: exps.lshift_u64(t_power),
                t_power,
            });
        }
    }
    numerator.sort_by_key(|t| (t.t_power, t.face));
    Ok(RationalZeta {
        numerator,
        weight_sum: exps.weight_sum(),
        period,
    })
}
