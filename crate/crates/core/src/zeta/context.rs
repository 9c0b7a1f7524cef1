use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use super::closed::{bf_coeff, s_sigma_closed};
use super::symbolic::{ClassExpr, Symbol};
use super::ZetaError;
use crate::algebra::{LRational, TSeries};
use crate::chi::{coefficient_class, ChiTriple, ClassToken};
use crate::newton::{
    check_nondegenerate, compact_faces, FaceDescriptor, FaceSet, NondegeneracyReport,
    SamplingConfig, WhPolynomial, DEFAULT_FACE_CAP,
};

/// A polynomial that passed every gate needed by the face formulas, with its
/// compact faces and their non-degeneracy status.
#[derive(Clone, Debug)]
pub struct ZetaContext {
    wh: WhPolynomial,
    faces: Vec<FaceDescriptor>,
    nondegeneracy: NondegeneracyReport,
}

/// The coefficient of `T^m` in the modified zeta function,
/// `a_m = L^{-s(m)} alpha(m)`, described by its shift and its class factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffDescriptor {
    pub m: BigUint,
    /// `s(m) = sum_i floor(m / delta_i)`.
    pub lshift: BigUint,
    /// `I(m) = { i : delta_i | m }`.
    pub divisor_set: FaceSet,
    pub token: ClassToken,
    /// No `delta_i` divides `m`, so `a_m = -L^{-s(m)}`.
    pub pure: bool,
    /// Realization of `alpha(m)`.
    pub chi: ChiTriple,
    pub exact: bool,
}

/// A coefficient of the unmodified zeta function. It carries no single power
/// of `L`, so it is kept as a full symbolic expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZCoefficient {
    pub m: u64,
    pub expr: ClassExpr,
    /// Realization at `L = -1`, when every coefficient is integral there.
    pub chi: Option<ChiTriple>,
}

impl ZetaContext {
    /// Enumerates the compact faces and refuses a certified degenerate face.
    pub fn new(wh: WhPolynomial) -> Result<Self, ZetaError> {
        Self::with_options(wh, DEFAULT_FACE_CAP, &SamplingConfig::default())
    }

    pub fn with_options(
        wh: WhPolynomial,
        face_cap: usize,
        sampling: &SamplingConfig,
    ) -> Result<Self, ZetaError> {
        let faces = compact_faces(&wh, face_cap)?;
        let nondegeneracy = check_nondegenerate(&faces, sampling);
        if let Some(bad) = nondegeneracy.first_degenerate() {
            return Err(ZetaError::Degenerate {
                face: bad.face,
                witness: bad.witness.clone(),
            });
        }
        Ok(Self {
            wh,
            faces,
            nondegeneracy,
        })
    }

    pub fn polynomial(&self) -> &WhPolynomial {
        &self.wh
    }

    pub fn faces(&self) -> &[FaceDescriptor] {
        &self.faces
    }

    pub fn nondegeneracy(&self) -> &NondegeneracyReport {
        &self.nondegeneracy
    }

    pub fn dim(&self) -> usize {
        self.wh.dim()
    }

    /// Descriptor of `a_m`, `m >= 1`. Cheap for arbitrarily large `m`.
    ///
    /// A linear variable divides every `m`, so for a non-singular profile
    /// every descriptor carries the zero class.
    pub fn ztilde_coeff(&self, m: &BigUint) -> CoeffDescriptor {
        assert!(!m.is_zero(), "coefficients start at T^1");
        let exps = self.wh.exponents();
        let divisor_set = exps.divisor_set(m);
        let (token, chi) = coefficient_class(&self.wh, divisor_set);
        CoeffDescriptor {
            m: m.clone(),
            lshift: exps.lshift(m),
            divisor_set,
            token,
            pure: divisor_set.is_empty(),
            exact: chi.is_exact(),
            chi,
        }
    }

    pub fn ztilde_coeff_u64(&self, m: u64) -> CoeffDescriptor {
        self.ztilde_coeff(&BigUint::from(m))
    }

    /// The lazy series of descriptors.
    pub fn ztilde_series(&self) -> TSeries<CoeffDescriptor> {
        let ctx = self.clone();
        TSeries::new(move |m| ctx.ztilde_coeff_u64(m))
    }

    /// `a_m` as a formal expression, assembled face by face:
    /// `sum_I (L-1)^{d-|I|} (A_I - B_I) S_m(I) - L^{-s(m)}`.
    pub fn ztilde_class(&self, m: u64) -> ClassExpr {
        self.ztilde_class_signed(m, false)
    }

    pub(crate) fn ztilde_class_signed(&self, m: u64, flip_bf: bool) -> ClassExpr {
        let exps = self.wh.exponents();
        let d = self.dim() as i64;
        let mut out = ClassExpr::zero();
        for face in &self.faces {
            let s = s_sigma_closed(exps, face.subset, m);
            if s.is_zero() {
                continue;
            }
            let c = s.mul_l_minus_one_pow(d - face.subset.len() as i64);
            out.add_term(Symbol::Fiber(face.subset), c.clone());
            out.add_term(Symbol::Zero(face.subset), -c);
        }
        let bf = bf_coeff(exps, m);
        out.add_term(Symbol::One, if flip_bf { -bf } else { bf });
        out
    }

    /// The class factor `alpha(m) = sum_{I in I(m)} (A_I - B_I) - 1` of `a_m`,
    /// built directly from the divisor set.
    pub fn alpha_class(&self, divisor_set: FaceSet) -> ClassExpr {
        let mut out = -&ClassExpr::one();
        for i in divisor_set.nonempty_subsets() {
            out.add_term(Symbol::Fiber(i), LRational::one());
            out.add_term(Symbol::Zero(i), -LRational::one());
        }
        out
    }

    /// Coefficients of `Z_f` through `T^n`:
    /// `sum_I (L-1)^{d-|I|} (A_I S_m(I) + B_I U_m(I))` where `U` is `S`
    /// convolved with `L^{-1} T / (1 - L^{-1} T)`.
    pub fn z_coeffs(&self, n: u64) -> Vec<ZCoefficient> {
        let exps = self.wh.exponents();
        let d = self.dim() as i64;
        let mut u: Vec<LRational> = self.faces.iter().map(|_| LRational::zero()).collect();
        let mut s_prev: Vec<LRational> = u.clone();
        let mut out = Vec::new();
        for m in 1..=n {
            let mut expr = ClassExpr::zero();
            for (k, face) in self.faces.iter().enumerate() {
                u[k] = (&u[k] + &s_prev[k]).shift(-1);
                let s = s_sigma_closed(exps, face.subset, m);
                let w = d - face.subset.len() as i64;
                expr.add_term(Symbol::Fiber(face.subset), s.mul_l_minus_one_pow(w));
                expr.add_term(Symbol::Zero(face.subset), u[k].mul_l_minus_one_pow(w));
                s_prev[k] = s;
            }
            let chi = expr.chi(&self.wh);
            out.push(ZCoefficient { m, expr, chi });
        }
        out
    }

    /// A single coefficient of `Z_f`; `U_m(I)` is summed directly.
    pub fn z_coeff(&self, m: u64) -> ZCoefficient {
        assert!(m >= 1, "coefficients start at T^1");
        let exps = self.wh.exponents();
        let d = self.dim() as i64;
        let mut expr = ClassExpr::zero();
        for face in &self.faces {
            let w = d - face.subset.len() as i64;
            let s = s_sigma_closed(exps, face.subset, m);
            let step = face.lcm as usize;
            let mut u = LRational::zero();
            for j in (face.lcm..m).step_by(step) {
                u = &u + &s_sigma_closed(exps, face.subset, j).shift(-((m - j) as i64));
            }
            expr.add_term(Symbol::Fiber(face.subset), s.mul_l_minus_one_pow(w));
            expr.add_term(Symbol::Zero(face.subset), u.mul_l_minus_one_pow(w));
        }
        let chi = expr.chi(&self.wh);
        ZCoefficient { m, expr, chi }
    }
}
