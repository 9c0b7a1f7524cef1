use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::euler::{chi_diag_fiber, Ambient};
use super::quadratic::diagonalize_quadratic;
use super::ChiError;
use crate::newton::{FaceSet, SparsePoly, WhPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TokenLevel {
    FiberPlus,
    FiberMinus,
    FiberZero,
}

impl TokenLevel {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::FiberPlus => "fiber_plus",
            Self::FiberMinus => "fiber_minus",
            Self::FiberZero => "fiber_zero",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepresentativeKind {
    Monomial,
    Diagonal,
    Quadratic,
    General,
}

impl RepresentativeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Monomial => "monomial",
            Self::Diagonal => "diagonal",
            Self::Quadratic => "quadratic",
            Self::General => "general",
        }
    }
}

/// Sorted multiset of `(exponent, sign)` pairs of a diagonal form. Sign `0`
/// marks a variable absent from the form (the kernel of a degenerate
/// quadratic form).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagonalData(Vec<(u64, i8)>);

impl DiagonalData {
    pub fn new(mut pairs: Vec<(u64, i8)>) -> Self {
        pairs.sort_unstable();
        Self(pairs)
    }

    pub fn pairs(&self) -> &[(u64, i8)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `chi_c` of `{ sum eps_i x_i^delta_i = c }` in the given ambient.
    /// Variables with sign 0 contribute a free factor.
    pub fn chi(&self, level: i8, ambient: Ambient) -> i64 {
        let (active, free): (Vec<_>, Vec<_>) = self.0.iter().partition(|(_, s)| *s != 0);
        let (signs, exps): (Vec<i8>, Vec<u64>) = active.iter().map(|&&(e, s)| (s, e)).unzip();
        let base = if signs.is_empty() {
            i64::from(level == 0)
        } else {
            chi_diag_fiber(&signs, &exps, level, ambient)
        };
        let factor = match ambient {
            Ambient::Affine => -1,
            Ambient::Torus => -2,
        };
        free.iter().fold(base, |acc, _| acc * factor)
    }
}

impl fmt::Display for DiagonalData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (e, s)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            let sign = match s {
                1 => "+1",
                -1 => "-1",
                _ => "0",
            };
            write!(f, "({e},{sign})")?;
        }
        f.write_str("]")
    }
}

/// Canonical data identifying the class factor of a coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TokenKey {
    /// No `delta_i` divides `m`.
    Pure,
    /// The divisor set contains a linear variable, and the class vanishes.
    Zero,
    /// Diagonal, or quadratic after diagonalization.
    Diagonal(DiagonalData),
    /// Anything else: the exponent/sign data of its diagonal representative
    /// and the face polynomial itself.
    General { data: DiagonalData, poly: String },
}

/// Structural identifier of the class
/// `alpha = sum_{I in J} ([f_I : (R^*)^I \ Z -> R^*] - [Z_I x R^*]) - 1`,
/// `J` the divisor set of the coefficient, at one of its three levels.
///
/// Equality compares the canonical key and the level only.
#[derive(Clone, Debug)]
pub struct ClassToken {
    pub divisor_set: FaceSet,
    pub level: TokenLevel,
    pub kind: RepresentativeKind,
    pub key: TokenKey,
}

impl PartialEq for ClassToken {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key && self.level == other.level
    }
}

impl Eq for ClassToken {}

impl Hash for ClassToken {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
        self.level.hash(state);
    }
}

impl ClassToken {
    pub fn at(&self, level: TokenLevel) -> Self {
        Self {
            level,
            ..self.clone()
        }
    }

    /// Stable canonical string, e.g. `diag[(2,+1),(4,-1)]@fiber_plus`.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ClassToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.key {
            TokenKey::Pure => f.write_str("pure")?,
            TokenKey::Zero => f.write_str("zero")?,
            TokenKey::Diagonal(d) => write!(f, "diag{d}")?,
            TokenKey::General { poly, .. } => write!(f, "gen[{poly}]")?,
        }
        write!(f, "@{}", self.level.as_str())
    }
}

/// An Euler characteristic known exactly, or only modulo 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChiValue {
    Exact(i64),
    Mod2(u8),
}

impl ChiValue {
    pub fn is_exact(self) -> bool {
        matches!(self, Self::Exact(_))
    }

    pub fn parity(self) -> u8 {
        match self {
            Self::Exact(v) => (v.rem_euclid(2)) as u8,
            Self::Mod2(r) => r,
        }
    }

    pub fn exact(self) -> Option<i64> {
        match self {
            Self::Exact(v) => Some(v),
            Self::Mod2(_) => None,
        }
    }

    fn from_parts(v: i64, exact: bool) -> Self {
        if exact {
            Self::Exact(v)
        } else {
            Self::Mod2(v.rem_euclid(2) as u8)
        }
    }

    pub fn scale(self, c: i64) -> Self {
        match self {
            Self::Exact(v) => Self::Exact(v * c),
            Self::Mod2(r) => Self::Mod2(((i64::from(r) * c).rem_euclid(2)) as u8),
        }
    }
}

impl Add for ChiValue {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Self::Exact(a), Self::Exact(b)) => Self::Exact(a + b),
            (a, b) => Self::Mod2((a.parity() + b.parity()) % 2),
        }
    }
}

impl Neg for ChiValue {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Sub for ChiValue {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul<i64> for ChiValue {
    type Output = Self;
    fn mul(self, c: i64) -> Self {
        self.scale(c)
    }
}

impl fmt::Display for ChiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(v) => write!(f, "{v}"),
            Self::Mod2(r) => write!(f, "{r} (mod 2)"),
        }
    }
}

/// Realizations `chi_c . F^+`, `chi_c . F^-` and `chi_c . overline`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChiTriple {
    pub fplus: ChiValue,
    pub fminus: ChiValue,
    pub bar: ChiValue,
}

impl ChiTriple {
    pub fn exact(fplus: i64, fminus: i64, bar: i64) -> Self {
        Self {
            fplus: ChiValue::Exact(fplus),
            fminus: ChiValue::Exact(fminus),
            bar: ChiValue::Exact(bar),
        }
    }

    pub fn zero() -> Self {
        Self::exact(0, 0, 0)
    }

    /// Realization of the unit class: a point over the base `R^*`.
    pub fn unit() -> Self {
        Self::exact(1, 1, -2)
    }

    pub fn is_exact(&self) -> bool {
        self.fplus.is_exact() && self.fminus.is_exact() && self.bar.is_exact()
    }

    pub fn scale(self, c: i64) -> Self {
        Self {
            fplus: self.fplus * c,
            fminus: self.fminus * c,
            bar: self.bar * c,
        }
    }
}

impl Add for ChiTriple {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            fplus: self.fplus + rhs.fplus,
            fminus: self.fminus + rhs.fminus,
            bar: self.bar + rhs.bar,
        }
    }
}

impl Sub for ChiTriple {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs.scale(-1)
    }
}

/// How a face polynomial is realized: exact diagonal data, or the diagonal
/// representative with the same exponent/sign data (mod 2 only).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FaceForm {
    pub kind: RepresentativeKind,
    pub data: DiagonalData,
    pub exact: bool,
}

/// Diagonal data of `f_J` in the variables of `J`.
pub(crate) fn face_form(wh: &WhPolynomial, face: FaceSet) -> FaceForm {
    let f = wh.face_poly(face);
    let delta = wh.exponents().as_slice();
    let pure = || DiagonalData::new(face.iter().map(|i| (delta[i], wh.sign(i))).collect());
    if f.is_monomial() {
        return FaceForm {
            kind: RepresentativeKind::Monomial,
            data: pure(),
            exact: true,
        };
    }
    if f.is_diagonal() {
        return FaceForm {
            kind: RepresentativeKind::Diagonal,
            data: pure(),
            exact: true,
        };
    }
    if f.is_quadratic_form() {
        let q = diagonalize_quadratic(&f, face).expect("quadratic face form");
        let data = q
            .diagonal
            .iter()
            .map(|x| {
                (
                    2,
                    if x.is_positive() {
                        1
                    } else if x.is_negative() {
                        -1
                    } else {
                        0
                    },
                )
            })
            .collect();
        return FaceForm {
            kind: RepresentativeKind::Quadratic,
            data: DiagonalData::new(data),
            exact: true,
        };
    }
    FaceForm {
        kind: RepresentativeKind::General,
        data: pure(),
        exact: false,
    }
}

/// Realizations of `alpha(J)` for the divisor set `J`:
/// `F^+ = chi(f_J = 1) - chi(f_J = 0)`, `F^- = chi(f_J = -1) - chi(f_J = 0)`,
/// `overline = (-1)^|J| + chi(f_J = 0)`, all inside `R^J`.
pub(crate) fn alpha_chi(form: &FaceForm) -> ChiTriple {
    let z = form.data.chi(0, Ambient::Affine);
    let p = form.data.chi(1, Ambient::Affine);
    let n = form.data.chi(-1, Ambient::Affine);
    let sign = if form.data.len().is_multiple_of(2) {
        1
    } else {
        -1
    };
    ChiTriple {
        fplus: ChiValue::from_parts(p - z, form.exact),
        fminus: ChiValue::from_parts(n - z, form.exact),
        bar: ChiValue::from_parts(sign + z, form.exact),
    }
}

/// The token and realization of the class factor of `a_m` with divisor set
/// `J`. Works for any profile; a linear variable in `J` makes the class zero.
pub fn coefficient_class(wh: &WhPolynomial, divisor_set: FaceSet) -> (ClassToken, ChiTriple) {
    let delta = wh.exponents().as_slice();
    let token = |kind, key| ClassToken {
        divisor_set,
        level: TokenLevel::FiberPlus,
        kind,
        key,
    };
    if divisor_set.is_empty() {
        return (
            token(RepresentativeKind::Monomial, TokenKey::Pure),
            ChiTriple::exact(-1, -1, 2),
        );
    }
    if divisor_set.iter().any(|i| delta[i] == 1) {
        // f_J = c x_i + h(others): (x_i, y) -> (f_J, y) trivializes both classes.
        return (
            token(RepresentativeKind::Diagonal, TokenKey::Zero),
            ChiTriple::zero(),
        );
    }
    let form = face_form(wh, divisor_set);
    let chi = alpha_chi(&form);
    let key = match form.kind {
        RepresentativeKind::General => TokenKey::General {
            data: form.data.clone(),
            poly: restricted_text(&wh.face_poly(divisor_set)),
        },
        _ => TokenKey::Diagonal(form.data.clone()),
    };
    (token(form.kind, key), chi)
}

fn restricted_text(f: &SparsePoly) -> String {
    f.to_string().replace(' ', "")
}

/// Token family and realization of the class factor of `a_m`.
pub fn token_for_divisor_set(
    wh: &WhPolynomial,
    m: &num_bigint::BigUint,
) -> Result<(ClassToken, ChiTriple), ChiError> {
    if !wh.is_singular() {
        return Err(ChiError::NonSingular);
    }
    Ok(coefficient_class(wh, wh.exponents().divisor_set(m)))
}

/// `chi_c` of `{ f_I = c } in (R^*)^I`: exact for diagonal faces, by
/// inclusion-exclusion over coordinate subspaces for quadratic faces, and
/// mod 2 through the diagonal representative otherwise.
pub(crate) fn face_torus_chi(wh: &WhPolynomial, face: FaceSet, level: i8) -> ChiValue {
    let form = face_form(wh, face);
    match form.kind {
        RepresentativeKind::Monomial | RepresentativeKind::Diagonal => {
            ChiValue::Exact(form.data.chi(level, Ambient::Torus))
        }
        RepresentativeKind::General => {
            ChiValue::Mod2(form.data.chi(level, Ambient::Torus).rem_euclid(2) as u8)
        }
        RepresentativeKind::Quadratic => {
            let f = wh.face_poly(face);
            let mut total = 0i64;
            let mut subsets: Vec<FaceSet> = face.nonempty_subsets().collect();
            subsets.push(FaceSet::EMPTY);
            for s in subsets {
                let affine = match f.restrict(s) {
                    None => {
                        // the zero form on R^S
                        let pt = i64::from(level == 0);
                        if s.len() % 2 == 0 {
                            pt
                        } else {
                            -pt
                        }
                    }
                    Some(g) => {
                        let q =
                            diagonalize_quadratic(&g, s).expect("restriction of a quadratic form");
                        let data = q
                            .diagonal
                            .iter()
                            .map(|x| {
                                (
                                    2,
                                    if x.is_positive() {
                                        1
                                    } else if x.is_negative() {
                                        -1
                                    } else {
                                        0
                                    },
                                )
                            })
                            .collect();
                        DiagonalData::new(data).chi(level, Ambient::Affine)
                    }
                };
                let sign = if (face.len() - s.len()).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                total += sign * affine;
            }
            ChiValue::Exact(total)
        }
    }
}

/// Realizations of the per-face symbols: `a_I` (the map `f_I` on the torus
/// minus its zero set) and `z_I` (the zero set times the base).
pub fn face_symbol_chi(wh: &WhPolynomial, face: FaceSet) -> (ChiTriple, ChiTriple) {
    let p = face_torus_chi(wh, face, 1);
    let n = face_torus_chi(wh, face, -1);
    let z = face_torus_chi(wh, face, 0);
    let torus = (-2i64).pow(face.len() as u32);
    let a = ChiTriple {
        fplus: p,
        fminus: n,
        bar: ChiValue::Exact(torus) - z,
    };
    let zero = ChiTriple {
        fplus: z,
        fminus: z,
        bar: z * -2,
    };
    (a, zero)
}
