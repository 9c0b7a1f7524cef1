use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_integer::Integer;

use super::RecoveryReport;
use crate::algebra::Rational;

/// Primitive weights `w_i = lcm(delta) / delta_i`, sorted descending.
pub fn weights_from_mults(mult: &BTreeMap<u64, u64>) -> Vec<u64> {
    let deltas: Vec<u64> = mult
        .iter()
        .flat_map(|(&q, &c)| core::iter::repeat_n(q, c as usize))
        .collect();
    let lcm = deltas.iter().fold(1u64, |a, &b| a.lcm(&b));
    let mut w: Vec<u64> = deltas.iter().map(|&x| lcm / x).collect();
    let g = w.iter().fold(0u64, |a, &b| a.gcd(&b));
    if g > 1 {
        w.iter_mut().for_each(|x| *x /= g);
    }
    w.sort_unstable_by(|a, b| b.cmp(a));
    w
}

/// First invariant datum on which two recoveries differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Dimension {
        left: usize,
        right: usize,
    },
    /// Exactly one side has a vanishing zeta function.
    Singularity {
        left: bool,
        right: bool,
    },
    S {
        left: Rational,
        right: Rational,
    },
    Mult {
        q: u64,
        left: u64,
        right: u64,
    },
}

/// Outcome of comparing two polynomials. Equal weights never imply
/// equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Separated { witness: Witness },
    WeightsEqual,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Separated { .. } => "separated",
            Verdict::WeightsEqual => "weights_equal",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Compares recovered data; `None` stands for a non-singular polynomial of
/// the given dimension, whose zeta function vanishes.
pub fn compare(
    left: (usize, Option<&RecoveryReport>),
    right: (usize, Option<&RecoveryReport>),
) -> Verdict {
    let separated = |witness| Verdict::Separated { witness };
    if left.0 != right.0 {
        return separated(Witness::Dimension {
            left: left.0,
            right: right.0,
        });
    }
    let (a, b) = match (left.1, right.1) {
        (None, None) => return Verdict::Inconclusive,
        (Some(a), Some(b)) => (a, b),
        (a, b) => {
            return separated(Witness::Singularity {
                left: a.is_some(),
                right: b.is_some(),
            })
        }
    };
    if a.weights == b.weights {
        return Verdict::WeightsEqual;
    }
    if a.s != b.s {
        return separated(Witness::S {
            left: a.s.clone(),
            right: b.s.clone(),
        });
    }
    let keys: BTreeSet<u64> = a.mult.keys().chain(b.mult.keys()).copied().collect();
    for q in keys {
        let (x, y) = (
            a.mult.get(&q).copied().unwrap_or(0),
            b.mult.get(&q).copied().unwrap_or(0),
        );
        if x != y {
            return separated(Witness::Mult {
                q,
                left: x,
                right: y,
            });
        }
    }
    unreachable!("different weights come from different multiplicities")
}
