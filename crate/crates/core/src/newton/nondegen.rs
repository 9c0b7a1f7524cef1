use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{binary, FaceDescriptor, FaceSet, SparsePoly};
use crate::algebra::linalg::nullspace;
use crate::algebra::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NondegStatus {
    CertifiedNondegenerate,
    CertifiedDegenerate,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NondegMethod {
    Monomial,
    Diagonal,
    QuadraticKernel,
    /// Two variables: square-free test of the reduced univariate polynomial.
    Binary,
    /// Variable-disjoint parts; critical exactly when every part is.
    Split,
    Randomized,
}

/// Evidence attached to a certified status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NondegWitness {
    /// One monomial: its partials are nonzero monomials.
    SingleMonomial,
    /// Pure powers in distinct variables: `df/dx_i = c x_i^(delta_i - 1)`.
    PurePowers,
    /// Kernel of the Gram matrix in the face variables, and a kernel vector
    /// with all coordinates nonzero when one exists.
    Kernel {
        basis: Vec<Vec<Rational>>,
        critical: Option<Vec<Rational>>,
    },
    /// A point of the torus where every partial of `f_tau` vanishes.
    CriticalPoint(Vec<Rational>),
    /// `f_tau = x_i^a x_j^b P(x_i^p x_j^-q)`; `repeated` is `gcd(P, P')`
    /// when it has a real root.
    Binary {
        vars: (usize, usize),
        reduced: Vec<Rational>,
        repeated: Option<Vec<Rational>>,
    },
    /// Status of each variable-disjoint part.
    Split(Vec<FaceStatus>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceStatus {
    pub face: FaceSet,
    pub status: NondegStatus,
    pub method: NondegMethod,
    pub witness: Option<NondegWitness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NondegeneracyReport {
    pub faces: Vec<FaceStatus>,
}

impl NondegeneracyReport {
    pub fn first_degenerate(&self) -> Option<&FaceStatus> {
        self.faces
            .iter()
            .find(|f| f.status == NondegStatus::CertifiedDegenerate)
    }

    pub fn all_certified(&self) -> bool {
        self.faces
            .iter()
            .all(|f| f.status == NondegStatus::CertifiedNondegenerate)
    }
}

/// Sampling parameters for faces without an exact test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingConfig {
    pub samples: u32,
    pub seed: u64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        Self {
            samples: 512,
            seed: 0x5eed,
        }
    }
}

/// Classifies every face; exact for monomial, diagonal and quadratic faces.
pub fn check_nondegenerate(
    faces: &[FaceDescriptor],
    sampling: &SamplingConfig,
) -> NondegeneracyReport {
    NondegeneracyReport {
        faces: faces.iter().map(|f| check_face(f, sampling)).collect(),
    }
}

fn check_face(face: &FaceDescriptor, sampling: &SamplingConfig) -> FaceStatus {
    classify(face.subset, &face.restriction, sampling)
}

fn classify(subset: FaceSet, f: &SparsePoly, sampling: &SamplingConfig) -> FaceStatus {
    let certified = |method, witness| FaceStatus {
        face: subset,
        status: NondegStatus::CertifiedNondegenerate,
        method,
        witness: Some(witness),
    };
    if f.is_monomial() {
        return certified(NondegMethod::Monomial, NondegWitness::SingleMonomial);
    }
    if f.is_diagonal() {
        return certified(NondegMethod::Diagonal, NondegWitness::PurePowers);
    }
    let parts = components(f);
    if parts.len() > 1 {
        let parts: Vec<FaceStatus> = parts
            .iter()
            .map(|(vars, g)| classify(*vars, g, sampling))
            .collect();
        let status = if parts
            .iter()
            .any(|p| p.status == NondegStatus::CertifiedNondegenerate)
        {
            NondegStatus::CertifiedNondegenerate
        } else if parts
            .iter()
            .all(|p| p.status == NondegStatus::CertifiedDegenerate)
        {
            NondegStatus::CertifiedDegenerate
        } else {
            NondegStatus::Unknown
        };
        return FaceStatus {
            face: subset,
            status,
            method: NondegMethod::Split,
            witness: Some(NondegWitness::Split(parts)),
        };
    }
    if f.is_quadratic_form() {
        return quadratic(subset, f);
    }
    let vars: Vec<usize> = f.support().iter().collect();
    if let [i, j] = vars[..] {
        if let Some(reduced) = binary::reduce(f, i, j) {
            let repeated = binary::repeated_real_factor(&reduced);
            return FaceStatus {
                face: subset,
                status: if repeated.is_some() {
                    NondegStatus::CertifiedDegenerate
                } else {
                    NondegStatus::CertifiedNondegenerate
                },
                method: NondegMethod::Binary,
                witness: Some(NondegWitness::Binary {
                    vars: (i, j),
                    reduced,
                    repeated,
                }),
            };
        }
    }
    sample(subset, f, sampling)
}

type Terms = Vec<(Vec<u32>, Rational)>;

/// Splits `f` into parts with pairwise disjoint variables.
fn components(f: &SparsePoly) -> Vec<(FaceSet, SparsePoly)> {
    let mut groups: Vec<(FaceSet, Terms)> = Vec::new();
    for (e, c) in f.terms() {
        let vars =
            FaceSet::from_indices(e.iter().enumerate().filter(|(_, &p)| p > 0).map(|(i, _)| i));
        let mut merged = (vars, vec![(e.clone(), c.clone())]);
        groups.retain_mut(|g| {
            if g.0.union(merged.0).len() < g.0.len() + merged.0.len() {
                merged.0 = merged.0.union(g.0);
                merged.1.append(&mut g.1);
                false
            } else {
                true
            }
        });
        groups.push(merged);
    }
    groups.sort_by_key(|g| g.0);
    groups
        .into_iter()
        .map(|(vars, terms)| {
            (
                vars,
                SparsePoly::from_terms(f.dim(), terms).expect("nonzero part"),
            )
        })
        .collect()
}

fn quadratic(subset: FaceSet, f: &SparsePoly) -> FaceStatus {
    let vars: Vec<usize> = subset.iter().collect();
    let k = vars.len();
    let mut gram = vec![vec![Rational::zero(); k]; k];
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for (e, c) in f.terms() {
        let idx: Vec<usize> = (0..k).filter(|&a| e[vars[a]] > 0).collect();
        match idx.as_slice() {
            [a] => gram[*a][*a] += c,
            [a, b] => {
                gram[*a][*b] += c * &half;
                gram[*b][*a] += c * &half;
            }
            _ => unreachable!("quadratic term"),
        }
    }
    let basis = nullspace(&gram, k);
    let critical = torus_vector(&basis, k);
    let status = if critical.is_some() {
        NondegStatus::CertifiedDegenerate
    } else {
        NondegStatus::CertifiedNondegenerate
    };
    let critical = critical.map(|v| embed(&vars, &v, f.dim()));
    FaceStatus {
        face: subset,
        status,
        method: NondegMethod::QuadraticKernel,
        witness: Some(NondegWitness::Kernel { basis, critical }),
    }
}

/// A vector in the span of `basis` with every coordinate nonzero, if the
/// span is not contained in a coordinate hyperplane.
fn torus_vector(basis: &[Vec<Rational>], k: usize) -> Option<Vec<Rational>> {
    if basis.is_empty() || (0..k).any(|i| basis.iter().all(|b| b[i].is_zero())) {
        return None;
    }
    // Each coordinate of sum_j t^j b_j is a nonzero polynomial in t of degree
    // < basis.len(), so some t among the first k * basis.len() + 1 works.
    for t in 1..=(k * basis.len() + 1) as i64 {
        let mut v = vec![Rational::zero(); k];
        let mut pow = Rational::one();
        for b in basis {
            for i in 0..k {
                v[i] += &pow * &b[i];
            }
            pow *= Rational::from_integer(BigInt::from(t));
        }
        if v.iter().all(|x| !x.is_zero()) {
            return Some(v);
        }
    }
    unreachable!("a polynomial of degree < n has fewer than n roots")
}

fn embed(vars: &[usize], v: &[Rational], d: usize) -> Vec<Rational> {
    let mut x = vec![Rational::one(); d];
    for (&i, val) in vars.iter().zip(v) {
        x[i] = val.clone();
    }
    x
}

fn is_critical(f: &SparsePoly, vars: &[usize], x: &[Rational]) -> bool {
    vars.iter().all(|&i| f.eval_partial(i, x).is_zero())
}

fn sample(subset: FaceSet, f: &SparsePoly, cfg: &SamplingConfig) -> FaceStatus {
    let vars: Vec<usize> = subset.iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ u64::from(subset.bits()));
    let small = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)];
    let mut found = None;
    // Exhaustive small grid for up to three variables, then random points.
    if vars.len() <= 3 {
        let mut idx = vec![0usize; vars.len()];
        'grid: loop {
            let pt: Vec<Rational> = idx
                .iter()
                .map(|&j| Rational::new(small[j].0.into(), small[j].1.into()))
                .collect();
            let x = embed(&vars, &pt, f.dim());
            if is_critical(f, &vars, &x) {
                found = Some(x);
                break;
            }
            for slot in idx.iter_mut() {
                *slot += 1;
                if *slot < small.len() {
                    continue 'grid;
                }
                *slot = 0;
            }
            break;
        }
    }
    for _ in 0..cfg.samples {
        if found.is_some() {
            break;
        }
        let pt: Vec<Rational> = vars
            .iter()
            .map(|_| {
                let n: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
                let d: i64 = rng.gen_range(1..=4);
                Rational::new(n.into(), d.into())
            })
            .collect();
        let x = embed(&vars, &pt, f.dim());
        if is_critical(f, &vars, &x) {
            found = Some(x);
        }
    }
    match found {
        Some(x) => FaceStatus {
            face: subset,
            status: NondegStatus::CertifiedDegenerate,
            method: NondegMethod::Randomized,
            witness: Some(NondegWitness::CriticalPoint(x)),
        },
        None => FaceStatus {
            face: subset,
            status: NondegStatus::Unknown,
            method: NondegMethod::Randomized,
            witness: None,
        },
    }
}
