use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use super::steps::{
    at, choose_n, class_of, in_divisor_sum_class, plan_for, plan_two, plans_three_and_four,
};
use super::{
    bound_and_q, estimate_s, filtered_bound_and_q, weights_from_mults, DegreeMode, LinearEquation,
    QGrid, RecoveryError, RecoveryReport, StepId, StepPlan, StepRecord, ZetaOracle,
};
use crate::algebra::linalg::solve_unique;
use crate::algebra::Rational;

/// How the exponent bound `K` is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundMode {
    /// Largest denominator over every Egyptian decomposition of `S`.
    Unfiltered,
    /// Only decompositions consistent with the oracle's purity and pure
    /// degrees (see [`filtered_bound_and_q`]).
    Filtered,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecoveryConfig {
    /// Largest `N` tried by [`estimate_s`].
    pub max_n: u64,
    pub bound: BoundMode,
    pub egyptian_node_budget: u64,
    /// Probed `m = 1..=probe_limit` for the filtered bound.
    pub probe_limit: u64,
    /// Largest `|Q|` handled.
    pub max_grid: usize,
}

impl Default for RecoveryConfig {
    fn default() -> Self {
        Self {
            max_n: 1 << 16,
            bound: BoundMode::Filtered,
            egyptian_node_budget: 20_000_000,
            probe_limit: 256,
            max_grid: 1 << 16,
        }
    }
}

struct Solver<'a, O: ?Sized> {
    oracle: &'a O,
    grid: QGrid,
    mult: BTreeMap<u64, BigInt>,
    dsum: BTreeMap<u64, BigInt>,
    records: Vec<StepRecord>,
}

/// Reconstructs `mult(q)` for every `q` in `Q`, and from it the pure
/// exponents and weights, using oracle queries only.
pub fn run_recovery<O: ZetaOracle + ?Sized>(
    oracle: &O,
    cfg: &RecoveryConfig,
) -> Result<RecoveryReport, RecoveryError> {
    let d = oracle.dimension();
    let s = estimate_s(oracle, cfg.max_n)?;
    let (candidates, grid) = match cfg.bound {
        BoundMode::Filtered => {
            filtered_bound_and_q(oracle, &s, cfg.egyptian_node_budget, cfg.probe_limit)?
        }
        BoundMode::Unfiltered => bound_and_q(&s, d, cfg.egyptian_node_budget)?,
    };
    let q_elements = grid.elements(cfg.max_grid)?;
    let mut solver = Solver {
        oracle,
        grid: grid.clone(),
        mult: BTreeMap::from([(1, BigInt::zero())]),
        dsum: BTreeMap::new(),
        records: Vec::new(),
    };

    for &q in q_elements
        .iter()
        .filter(|&&q| in_divisor_sum_class(q, &grid))
    {
        solver.divisor_sum(q)?;
    }
    if grid.contains(2) && !solver.mult.contains_key(&2) {
        solver.solve(&[plan_two(&grid)?], &[2])?;
    }
    solver.class_pass(&q_elements, StepId::CoprimeToSix)?;
    let targets: Vec<u64> = [3, 4].into_iter().filter(|&q| grid.contains(q)).collect();
    if !targets.is_empty() {
        solver.solve(&plans_three_and_four(&grid)?, &targets)?;
    }
    solver.class_pass(&q_elements, StepId::TwiceOdd)?;
    solver.class_pass(&q_elements, StepId::FourNotThree)?;
    solver.class_pass(&q_elements, StepId::ThreeOdd)?;
    for &q in q_elements
        .iter()
        .filter(|&&q| in_divisor_sum_class(q, &grid))
    {
        solver.solve_from_divisor_sum(q)?;
    }

    let mut mult = BTreeMap::new();
    for &q in &q_elements {
        let v = solver.mult.get(&q).ok_or(RecoveryError::Unresolved {
            step: StepId::Six,
            cell: q,
        })?;
        let v = v.to_u64().ok_or_else(|| RecoveryError::InvalidMult {
            q,
            value: Rational::from_integer(v.clone()),
        })?;
        mult.insert(q, v);
    }
    check_consistency(&mult, d, &s)?;
    let mut deltas: Vec<u64> = mult
        .iter()
        .flat_map(|(&q, &c)| core::iter::repeat_n(q, c as usize))
        .collect();
    deltas.sort_unstable();
    if !candidates.contains(&deltas) {
        return Err(RecoveryError::NotACandidate { deltas });
    }
    let weights = weights_from_mults(&mult);
    Ok(RecoveryReport {
        dimension: d,
        s,
        candidates,
        k: grid.k(),
        primes: grid.primes().to_vec(),
        gammas: grid.gammas().to_vec(),
        q: q_elements,
        steps: solver.records,
        mult,
        deltas,
        weights,
    })
}

fn check_consistency(
    mult: &BTreeMap<u64, u64>,
    d: usize,
    s: &Rational,
) -> Result<(), RecoveryError> {
    let total: u64 = mult.values().sum();
    if total != d as u64 {
        return Err(RecoveryError::Consistency {
            what: "sum of mult(q) equals d",
            expected: d.to_string(),
            found: total.to_string(),
        });
    }
    let sum: Rational = mult
        .iter()
        .map(|(&q, &c)| Rational::new(BigInt::from(c), BigInt::from(q)))
        .sum();
    if &sum != s {
        return Err(RecoveryError::Consistency {
            what: "sum of mult(q)/q equals S",
            expected: s.to_string(),
            found: sum.to_string(),
        });
    }
    if mult.get(&1).copied().unwrap_or(0) != 0 {
        return Err(RecoveryError::Consistency {
            what: "mult(1) = 0",
            expected: "0".to_string(),
            found: mult[&1].to_string(),
        });
    }
    Ok(())
}

impl<O: ZetaOracle + ?Sized> Solver<'_, O> {
    fn class_pass(&mut self, q_elements: &[u64], step: StepId) -> Result<(), RecoveryError> {
        for &q in q_elements {
            if q > 1 && class_of(q, &self.grid) == step && !self.mult.contains_key(&q) {
                let plan = plan_for(step, q, &self.grid)?;
                self.solve(&[plan], &[q])?;
            }
        }
        Ok(())
    }

    /// Solves for `n`, verifies the table and reads `s(n + hi) - s(n + lo)`.
    fn measure(
        &self,
        plan: &StepPlan,
    ) -> Result<(BigUint, Vec<super::TableRow>, BigInt), RecoveryError> {
        let (n, rows) = choose_n(plan, &self.grid)?;
        let lo = at(&n, plan.lo());
        let hi = at(&n, plan.hi());
        let lhs = match plan.mode {
            DegreeMode::Bar => {
                let deg = |m: &BigUint| {
                    self.oracle
                        .deg_beta_bar(m)
                        .ok_or_else(|| RecoveryError::NotPure {
                            step: plan.step,
                            m: m.clone(),
                        })
                };
                deg(&lo)? - deg(&hi)?
            }
            DegreeMode::FplusRel(kind) => {
                if self.oracle.token_id(&lo) != self.oracle.token_id(&hi) {
                    return Err(RecoveryError::TokenMismatch {
                        step: plan.step,
                        lo,
                        hi,
                    });
                }
                for m in [&lo, &hi] {
                    if !self.oracle.parity_fplus_ok(m, kind) {
                        return Err(RecoveryError::Parity {
                            step: plan.step,
                            m: m.clone(),
                            kind,
                        });
                    }
                }
                self.oracle.deg_beta_fplus_rel(&lo) - self.oracle.deg_beta_fplus_rel(&hi)
            }
        };
        Ok((n, rows, lhs))
    }

    fn divisor_sum(&mut self, q: u64) -> Result<(), RecoveryError> {
        let plan = plan_for(StepId::DivisorSums, q, &self.grid)?;
        let (n, table, lhs) = self.measure(&plan)?;
        // window cells n and n + 1; the latter has divisor set {1}
        self.dsum.insert(q, lhs.clone());
        self.records.push(StepRecord {
            step: StepId::DivisorSums,
            n,
            congruences: plan.system.congruences().to_vec(),
            table,
            mode: plan.mode,
            lhs: lhs.clone(),
            equation: LinearEquation {
                divisor_sum_of: Some(q),
                terms: Vec::new(),
                constant: lhs,
            },
            resolved: Vec::new(),
        });
        Ok(())
    }

    fn solve_from_divisor_sum(&mut self, q: u64) -> Result<(), RecoveryError> {
        let total = self.dsum[&q].clone();
        let mut value = total.clone();
        for r in self.grid.divisors(q) {
            if r == q {
                continue;
            }
            let m = self.mult.get(&r).ok_or(RecoveryError::Unresolved {
                step: StepId::Six,
                cell: r,
            })?;
            value -= m;
        }
        if let Some(known) = self.mult.get(&q) {
            if *known != value {
                return Err(RecoveryError::Inconsistent {
                    step: StepId::Six,
                    q,
                    expected: known.clone(),
                    found: value,
                });
            }
            return Ok(());
        }
        check_value(q, &Rational::from_integer(value.clone()))?;
        self.mult.insert(q, value.clone());
        self.records.push(StepRecord {
            step: StepId::Six,
            n: BigUint::zero(),
            congruences: Vec::new(),
            table: Vec::new(),
            mode: DegreeMode::Bar,
            lhs: total.clone(),
            equation: LinearEquation {
                divisor_sum_of: Some(q),
                terms: Vec::new(),
                constant: total,
            },
            resolved: vec![(q, value)],
        });
        Ok(())
    }

    /// `D(t)` for a window cell as a combination of the unknowns.
    fn cell(
        &self,
        step: StepId,
        t: u64,
        targets: &[u64],
    ) -> Result<(BigInt, Vec<i64>), RecoveryError> {
        let divisors = self.grid.divisors(t);
        if divisors
            .iter()
            .all(|r| self.mult.contains_key(r) || targets.contains(r))
        {
            let mut constant = BigInt::zero();
            let mut coeffs = vec![0i64; targets.len()];
            for r in divisors {
                match self.mult.get(&r) {
                    Some(v) => constant += v,
                    None => coeffs[targets.iter().position(|&x| x == r).expect("target")] += 1,
                }
            }
            return Ok((constant, coeffs));
        }
        match self.dsum.get(&t) {
            Some(v) => Ok((v.clone(), vec![0; targets.len()])),
            None => Err(RecoveryError::Unresolved { step, cell: t }),
        }
    }

    fn solve(&mut self, plans: &[StepPlan], targets: &[u64]) -> Result<(), RecoveryError> {
        let step = plans[0].step;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let mut pending = Vec::new();
        for plan in plans {
            let (n, table, lhs) = self.measure(plan)?;
            let mut constant = lhs.clone();
            let mut coeffs = vec![0i64; targets.len()];
            for row in table.iter().skip(1) {
                let (c, k) = self.cell(step, row.cap, targets)?;
                constant -= c;
                for (a, b) in coeffs.iter_mut().zip(k) {
                    *a += b;
                }
            }
            rows.push(
                coeffs
                    .iter()
                    .map(|&c| Rational::from_integer(BigInt::from(c)))
                    .collect(),
            );
            rhs.push(Rational::from_integer(constant.clone()));
            let terms = targets
                .iter()
                .copied()
                .zip(coeffs)
                .filter(|&(_, c)| c != 0)
                .collect();
            pending.push(StepRecord {
                step,
                n,
                congruences: plan.system.congruences().to_vec(),
                table,
                mode: plan.mode,
                lhs,
                equation: LinearEquation {
                    divisor_sum_of: None,
                    terms,
                    constant,
                },
                resolved: Vec::new(),
            });
        }
        let values = solve_unique(&rows, &rhs, targets.len())
            .map_err(|inconsistent| RecoveryError::Singular { step, inconsistent })?;
        let mut resolved = Vec::new();
        for (&q, v) in targets.iter().zip(&values) {
            check_value(q, v)?;
            self.mult.insert(q, v.to_integer());
            resolved.push((q, v.to_integer()));
        }
        if let Some(last) = pending.last_mut() {
            last.resolved = resolved;
        }
        self.records.extend(pending);
        Ok(())
    }
}

fn check_value(q: u64, v: &Rational) -> Result<(), RecoveryError> {
    if !v.is_integer() || v.is_negative() {
        return Err(RecoveryError::InvalidMult {
            q,
            value: v.clone(),
        });
    }
    Ok(())
}
