use num_bigint::BigUint;
use num_traits::Zero;

use super::euler::Ambient;
use super::token::{face_form, DiagonalData};
use super::{ChiError, ChiValue};
use crate::newton::{FaceSet, WhPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityKind {
    /// Only exponents equal to 2 divide `m`, and `2 | m`.
    Exp2,
    /// Only exponents in `{2, 4}` divide `m`, and `4 | m`.
    Exp4,
}

impl ParityKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Exp2 => "exp2",
            Self::Exp4 => "exp4",
        }
    }

    fn modulus(self) -> u64 {
        match self {
            Self::Exp2 => 2,
            Self::Exp4 => 4,
        }
    }

    fn allowed(self, delta: u64) -> bool {
        match self {
            Self::Exp2 => delta == 2,
            Self::Exp4 => delta == 2 || delta == 4,
        }
    }
}

/// Replayable evidence that `chi_c F^+(alpha)` is odd, hence nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityCertificate {
    pub kind: ParityKind,
    pub divisor_set: FaceSet,
    /// Diagonal form whose fibers were counted.
    pub data: DiagonalData,
    /// `chi(data = 1) - chi(data = 0)` in the affine space.
    pub chi_fplus: ChiValue,
}

/// Checks that `chi_c F^+` of the class factor of `a_m` is odd.
///
/// For `Exp2` the divisor set carries a quadratic form, diagonalized exactly
/// when it is not already diagonal. For `Exp4` a non-diagonal face is replaced
/// by the diagonal form with the same exponents and signs, which has the same
/// Newton polyhedron and hence the same parity.
pub fn parity_certificate(
    wh: &WhPolynomial,
    m: &BigUint,
    kind: ParityKind,
) -> Result<ParityCertificate, ChiError> {
    if !wh.is_singular() {
        return Err(ChiError::NonSingular);
    }
    let delta = wh.exponents().as_slice();
    let j = wh.exponents().divisor_set(m);
    let precondition = (m % kind.modulus()).is_zero() && j.iter().all(|i| kind.allowed(delta[i]));
    if !precondition {
        return Err(ChiError::ParityPrecondition {
            kind: kind.as_str(),
            m: m.clone(),
        });
    }
    let (data, chi) = if j.is_empty() {
        // alpha = -1
        (DiagonalData::default(), ChiValue::Exact(-1))
    } else {
        let form = face_form(wh, j);
        let v = form.data.chi(1, Ambient::Affine) - form.data.chi(0, Ambient::Affine);
        let chi = if form.exact {
            ChiValue::Exact(v)
        } else {
            ChiValue::Mod2(v.rem_euclid(2) as u8)
        };
        (form.data, chi)
    };
    if chi.parity() != 1 {
        return Err(ChiError::EvenParity {
            kind: kind.as_str(),
            m: m.clone(),
        });
    }
    Ok(ParityCertificate {
        kind,
        divisor_set: j,
        data,
        chi_fplus: chi,
    })
}
