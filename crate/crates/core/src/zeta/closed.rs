use crate::algebra::LRational;
use crate::newton::{FaceSet, PureExponents};

/// Coefficient of `T^m` in `S_sigma(tau_I)`: `L^{-s(m)} / (L-1)^{d-|I|}` when
/// `delta_I | m`, else zero.
pub fn s_sigma_closed(exps: &PureExponents, face: FaceSet, m: u64) -> LRational {
    if m == 0 || !m.is_multiple_of(exps.lcm_of(face)) {
        return LRational::zero();
    }
    let free = (exps.dim() - face.len()) as i64;
    LRational::l_pow(-(exps.lshift_u64(m) as i64)).mul_l_minus_one_pow(-free)
}

/// Coefficient of `T^m` in `B_f(T) - T/(1 - T)`: `-L^{-s(m)}`.
pub fn bf_coeff(exps: &PureExponents, m: u64) -> LRational {
    -LRational::l_pow(-(exps.lshift_u64(m) as i64))
}
