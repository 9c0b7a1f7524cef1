//! Serializable views of the core data. Every exact rational is written as
//! `"p/q"`, every potentially large integer as a decimal string, and every
//! collection in a fixed order, so equal inputs give byte-identical JSON.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use wzeta_core::algebra::{format_rational, parse_rational, Rational};
use wzeta_core::chi::{ChiTriple, ChiValue};
use wzeta_core::newton::{
    FaceDescriptor, FaceStatus, NondegMethod, NondegStatus, NondegWitness, SparsePoly,
    WeightProfile,
};
use wzeta_core::recovery::{Claim, DegreeMode, RecoveryReport, StepRecord, Verdict, Witness};
use wzeta_core::zeta::{ClassExpr, CoeffDescriptor, IdentityCheck, RationalZeta};

use crate::CliError;

fn rational(r: &Rational) -> String {
    format_rational(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl PolyJson {
    pub fn from_poly(p: &SparsePoly) -> Self {
        Self {
            vars: p.dim(),
            terms: p
                .terms()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    coef: rational(c),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<SparsePoly, CliError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = parse_rational(&t.coef)
                .map_err(|e| CliError::Gate(format!("coefficient `{}`: {e}", t.coef)))?;
            terms.push((t.exp.clone(), c));
        }
        SparsePoly::from_terms(self.vars, terms).map_err(|e| CliError::Gate(e.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ChiJson {
    Exact(i64),
    Mod2 { mod2: u8 },
}

impl From<ChiValue> for ChiJson {
    fn from(v: ChiValue) -> Self {
        match v {
            ChiValue::Exact(x) => Self::Exact(x),
            ChiValue::Mod2(r) => Self::Mod2 { mod2: r },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceJson {
    pub face: String,
    pub vertices: Vec<Vec<u32>>,
    pub lcm: u64,
    pub status: &'static str,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

pub fn status_str(s: NondegStatus) -> &'static str {
    match s {
        NondegStatus::CertifiedNondegenerate => "nondegenerate",
        NondegStatus::CertifiedDegenerate => "degenerate",
        NondegStatus::Unknown => "unknown",
    }
}

fn method_str(m: NondegMethod) -> &'static str {
    match m {
        NondegMethod::Monomial => "monomial",
        NondegMethod::Diagonal => "diagonal",
        NondegMethod::QuadraticKernel => "quadratic_kernel",
        NondegMethod::Binary => "binary",
        NondegMethod::Split => "split",
        NondegMethod::Randomized => "randomized",
    }
}

fn point(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(rational).collect();
    format!("({})", parts.join(", "))
}

pub fn witness_str(w: &NondegWitness) -> String {
    match w {
        NondegWitness::SingleMonomial => "single monomial".into(),
        NondegWitness::PurePowers => "pure powers in distinct variables".into(),
        NondegWitness::Kernel { basis, critical } => {
            let b: Vec<String> = basis.iter().map(|v| point(v)).collect();
            match critical {
                Some(x) => format!("kernel [{}], critical point {}", b.join(", "), point(x)),
                None => format!("kernel [{}] lies in a coordinate hyperplane", b.join(", ")),
            }
        }
        NondegWitness::CriticalPoint(x) => format!("critical point {}", point(x)),
        NondegWitness::Binary {
            vars,
            reduced,
            repeated,
        } => {
            let u = format!("u = x{}^p x{}^-q", vars.0 + 1, vars.1 + 1);
            match repeated {
                Some(g) => format!(
                    "P{} has the repeated real factor {}, {u}",
                    point(reduced),
                    point(g)
                ),
                None => format!("P{} has no repeated real root, {u}", point(reduced)),
            }
        }
        NondegWitness::Split(parts) => {
            let p: Vec<String> = parts
                .iter()
                .map(|s| {
                    format!(
                        "{}: {} ({})",
                        s.face,
                        status_str(s.status),
                        method_str(s.method)
                    )
                })
                .collect();
            format!("parts [{}]", p.join("; "))
        }
    }
}

pub fn face_json(desc: &FaceDescriptor, status: &FaceStatus) -> FaceJson {
    FaceJson {
        face: desc.subset.to_string(),
        vertices: desc.vertices.clone(),
        lcm: desc.lcm,
        status: status_str(status.status),
        method: method_str(status.method),
        witness: status.witness.as_ref().map(witness_str),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeJson {
    pub polynomial: String,
    pub dim: usize,
    pub pure_exponents: Vec<Option<u64>>,
    pub convenient: bool,
    pub weighted_homogeneous: bool,
    pub singular: bool,
    /// In variable order.
    pub weights: Option<Vec<u64>>,
    /// Sorted descending.
    pub sorted_weights: Option<Vec<u64>>,
    pub degree: Option<u64>,
    pub m_w: Option<u64>,
    pub faces: Vec<FaceJson>,
    pub nondegenerate: Option<bool>,
}

impl AnalyzeJson {
    pub fn new(poly: &SparsePoly, profile: &WeightProfile) -> Self {
        let exps = profile.exponents();
        Self {
            polynomial: poly.to_string(),
            dim: profile.dim,
            pure_exponents: profile.pure_exponents.clone(),
            convenient: profile.convenient,
            weighted_homogeneous: profile.weighted_homogeneous,
            singular: profile.singular,
            weights: profile.weights.clone(),
            sorted_weights: profile.sorted_weights(),
            degree: profile.degree,
            m_w: exps
                .filter(|_| profile.weighted_homogeneous)
                .map(|e| e.lcm()),
            faces: Vec::new(),
            nondegenerate: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoeffJson {
    pub m: u64,
    pub lshift: u64,
    pub pure: bool,
    pub token: String,
    pub chi_fplus: ChiJson,
    pub chi_fminus: ChiJson,
    pub chi_bar: ChiJson,
    pub exact: bool,
    pub divisor_set: String,
    pub class: String,
}

impl CoeffJson {
    pub fn new(d: &CoeffDescriptor, class: &ClassExpr) -> Self {
        Self {
            m: d.m.to_u64().expect("order fits in u64"),
            lshift: d.lshift.to_u64().expect("shift fits in u64"),
            pure: d.pure,
            token: d.token.canonical(),
            chi_fplus: d.chi.fplus.into(),
            chi_fminus: d.chi.fminus.into(),
            chi_bar: d.chi.bar.into(),
            exact: d.exact,
            divisor_set: d.divisor_set.to_string(),
            class: class.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassTermJson {
    pub symbol: String,
    pub coef: String,
}

fn class_terms(c: &ClassExpr) -> Vec<ClassTermJson> {
    c.terms()
        .map(|(s, v)| ClassTermJson {
            symbol: s.to_string(),
            coef: v.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct NumeratorJson {
    pub face: String,
    pub class: Vec<ClassTermJson>,
    pub lshift: u64,
    pub t_power: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DenominatorJson {
    pub coef: String,
    pub lshift: u64,
    pub t_power: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RationalJson {
    pub numerator: Vec<NumeratorJson>,
    pub denominator: Vec<DenominatorJson>,
    pub display: String,
}

impl RationalJson {
    pub fn new(r: &RationalZeta) -> Self {
        Self {
            numerator: r
                .numerator
                .iter()
                .map(|t| NumeratorJson {
                    face: t.face.to_string(),
                    class: class_terms(&t.class),
                    lshift: t.lshift,
                    t_power: t.t_power,
                })
                .collect(),
            denominator: vec![
                DenominatorJson {
                    coef: "1/1".into(),
                    lshift: 0,
                    t_power: 0,
                },
                DenominatorJson {
                    coef: "-1/1".into(),
                    lshift: r.weight_sum,
                    t_power: r.period,
                },
            ],
            display: r.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityJson {
    pub order: u64,
    pub holds: bool,
    pub first_failure: Option<u64>,
}

impl From<&IdentityCheck> for IdentityJson {
    fn from(c: &IdentityCheck) -> Self {
        Self {
            order: c.order,
            holds: c.holds,
            first_failure: c.first_failure,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaJson {
    pub polynomial: String,
    pub order: u64,
    pub singular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub coefficients: Vec<CoeffJson>,
    pub rational_form: Option<RationalJson>,
    pub identity: IdentityJson,
}

pub fn chi_triple_str(c: &ChiTriple) -> String {
    format!("({}, {}, {})", c.fplus, c.fminus, c.bar)
}

#[derive(Clone, Debug, Serialize)]
pub struct RowJson {
    pub offset: i64,
    pub claim: String,
    pub cap: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepJson {
    pub step: u8,
    pub n: String,
    pub congruences: Vec<String>,
    pub table: Vec<RowJson>,
    pub mode: String,
    pub lhs: String,
    pub equation: String,
    pub resolved: BTreeMap<u64, String>,
}

fn mode_str(m: DegreeMode) -> String {
    match m {
        DegreeMode::Bar => "bar".into(),
        DegreeMode::FplusRel(k) => format!("fplus_rel:{}", k.as_str()),
    }
}

fn claim_str(c: Claim) -> String {
    match c {
        Claim::DivisorsOf(x) => format!("divisors of {x}"),
        Claim::SixDivides => "multiple of 6".into(),
    }
}

impl From<&StepRecord> for StepJson {
    fn from(r: &StepRecord) -> Self {
        Self {
            step: r.step.number(),
            n: r.n.to_string(),
            congruences: r
                .congruences
                .iter()
                .map(|c| format!("{} mod {}", c.residue, c.modulus))
                .collect(),
            table: r
                .table
                .iter()
                .map(|row| RowJson {
                    offset: row.offset,
                    claim: claim_str(row.claim),
                    cap: row.cap,
                })
                .collect(),
            mode: mode_str(r.mode),
            lhs: r.lhs.to_string(),
            equation: r.equation.to_string(),
            resolved: r
                .resolved
                .iter()
                .map(|(q, v)| (*q, v.to_string()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RecoveryJson {
    pub dimension: usize,
    pub s: String,
    pub candidates: Vec<Vec<u64>>,
    pub k: u64,
    pub primes: Vec<u64>,
    pub gammas: Vec<u32>,
    pub q: Vec<u64>,
    pub steps: Vec<StepJson>,
    pub mult: BTreeMap<u64, u64>,
    pub deltas: Vec<u64>,
    pub weights: Vec<u64>,
}

impl From<&RecoveryReport> for RecoveryJson {
    fn from(r: &RecoveryReport) -> Self {
        Self {
            dimension: r.dimension,
            s: rational(&r.s),
            candidates: r.candidates.clone(),
            k: r.k,
            primes: r.primes.clone(),
            gammas: r.gammas.clone(),
            q: r.q.clone(),
            steps: r.steps.iter().map(StepJson::from).collect(),
            mult: r
                .mult
                .iter()
                .filter(|(_, &c)| c > 0)
                .map(|(&q, &c)| (q, c))
                .collect(),
            deltas: r.deltas.clone(),
            weights: r.weights.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub kind: &'static str,
    pub left: String,
    pub right: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        let (kind, left, right, q) = match w {
            Witness::Dimension { left, right } => {
                ("dimension", left.to_string(), right.to_string(), None)
            }
            Witness::Singularity { left, right } => {
                ("singular", left.to_string(), right.to_string(), None)
            }
            Witness::S { left, right } => ("S", rational(left), rational(right), None),
            Witness::Mult { q, left, right } => {
                ("mult", left.to_string(), right.to_string(), Some(*q))
            }
        };
        Self {
            kind,
            left,
            right,
            q,
        }
    }
}

pub fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Dimension { left, right } => format!("dimension {left} vs {right}"),
        Witness::Singularity { left, right } => format!("singular {left} vs {right}"),
        Witness::S { left, right } => format!("S = {} vs {}", rational(left), rational(right)),
        Witness::Mult { q, left, right } => format!("mult({q}) = {left} vs {right}"),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareJson {
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    pub left: SideJson,
    pub right: SideJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SideJson {
    pub polynomial: String,
    pub singular: bool,
    pub deltas: Option<Vec<u64>>,
    pub weights: Option<Vec<u64>>,
}

pub const EQUAL_WEIGHTS_CAVEAT: &str = "equal weights are necessary for arc-analytic equivalence, not sufficient; equivalence is not concluded";
pub const INCONCLUSIVE_NOTE: &str =
    "both modified zeta functions vanish; no weight information is available";

pub fn verdict_witness(v: &Verdict) -> Option<WitnessJson> {
    match v {
        Verdict::Separated { witness } => Some(witness.into()),
        _ => None,
    }
}
