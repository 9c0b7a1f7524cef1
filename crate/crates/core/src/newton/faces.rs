use alloc::vec;
use alloc::vec::Vec;

use super::{FaceSet, NewtonError, SparsePoly, WhPolynomial};

/// Default limit on `d` for enumerating all `2^d - 1` compact faces.
pub const DEFAULT_FACE_CAP: usize = 20;

/// The compact face `tau_I`: the simplex on the pure vertices
/// `delta_i e_i`, `i in I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceDescriptor {
    pub subset: FaceSet,
    pub vertices: Vec<Vec<u32>>,
    /// `f_{tau_I}`, written in all `d` variables.
    pub restriction: SparsePoly,
    /// Generators of the dual cone: `w` and `e_j` for `j` outside `I`.
    pub dual_generators: Vec<Vec<u64>>,
    /// `delta_I`.
    pub lcm: u64,
}

impl FaceDescriptor {
    pub fn new(wh: &WhPolynomial, subset: FaceSet) -> Self {
        let d = wh.dim();
        let exps = wh.exponents().as_slice();
        let vertices = subset
            .iter()
            .map(|i| {
                let mut v = vec![0u32; d];
                v[i] = exps[i] as u32;
                v
            })
            .collect();
        let w = wh.profile().weights.clone().expect("weighted homogeneous");
        let mut dual_generators = vec![w];
        for j in (0..d).filter(|&j| !subset.contains(j)) {
            let mut e = vec![0u64; d];
            e[j] = 1;
            dual_generators.push(e);
        }
        Self {
            subset,
            vertices,
            restriction: wh.face_poly(subset),
            dual_generators,
            lcm: wh.exponents().lcm_of(subset),
        }
    }
}

/// One descriptor per nonempty `I`, ordered by face index.
pub fn compact_faces(wh: &WhPolynomial, cap: usize) -> Result<Vec<FaceDescriptor>, NewtonError> {
    let d = wh.dim();
    if d > cap {
        return Err(NewtonError::Capacity {
            what: "face enumeration dimension",
            limit: cap as u64,
            requested: d as u64,
        });
    }
    Ok(FaceSet::full(d)
        .nonempty_subsets()
        .map(|s| FaceDescriptor::new(wh, s))
        .collect())
}
