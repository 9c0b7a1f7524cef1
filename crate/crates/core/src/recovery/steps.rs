use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};

use super::{QGrid, RecoveryError};
use crate::algebra::{crt_solve_at_least, CongruenceSystem};
use crate::chi::ParityKind;

/// The stages of the inverse procedure, in execution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepId {
    /// Divisor sums `D(q) = sum_{r | q} mult(r)` for `6 | q`.
    DivisorSums,
    /// `mult(2)`.
    Two,
    /// `mult(q)` for `2, 3` not dividing `q`.
    CoprimeToSix,
    /// `mult(3)` and `mult(4)`, from two equations.
    ThreeAndFour,
    /// `mult(q)` for `v_2(q) = 1`, `3` not dividing `q`.
    TwiceOdd,
    /// `mult(q)` for `4 | q`, `3` not dividing `q`.
    FourNotThree,
    /// `mult(q)` for `3 | q`, `q` odd.
    ThreeOdd,
    /// `mult(q)` for `6 | q`, from the divisor sums.
    Six,
}

impl StepId {
    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

impl fmt::Display for StepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}", self.number())
    }
}

/// How the left-hand side `s(n + hi) - s(n + lo)` is read from the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeMode {
    /// Both endpoints pure: `deg beta(overline a)`.
    Bar,
    /// Endpoints with equal tokens: relative `deg beta F^+`, each endpoint
    /// backed by a parity certificate.
    FplusRel(ParityKind),
}

/// Claimed divisibility of one window cell `n + j` by elements of `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// For `r` in `Q`: `r | n + j` iff `r | x`.
    DivisorsOf(u64),
    /// `6 | n + j`; the rest of its divisor set is read off `n`.
    SixDivides,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::DivisorsOf(x) => write!(f, "r | {x}"),
            Claim::SixDivides => f.write_str("6 | n+j"),
        }
    }
}

/// One equation of a step: congruences for `n` and the claimed divisor
/// table on the window `n + lo ..= n + hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepPlan {
    pub step: StepId,
    pub system: CongruenceSystem,
    /// `(j, claim)` for `j = lo ..= hi`.
    pub window: Vec<(i64, Claim)>,
    pub mode: DegreeMode,
}

impl StepPlan {
    pub fn lo(&self) -> i64 {
        self.window[0].0
    }

    pub fn hi(&self) -> i64 {
        self.window[self.window.len() - 1].0
    }
}

/// One verified row of a divisor table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub offset: i64,
    pub claim: Claim,
    /// `cap(n + offset)`, the element of `Q` with the same divisors in `Q`.
    pub cap: u64,
}

/// Solves the congruences and checks every claimed row of the table.
pub fn choose_n(plan: &StepPlan, grid: &QGrid) -> Result<(BigUint, Vec<TableRow>), RecoveryError> {
    let lower = BigUint::from((2 - plan.lo()).max(2) as u64);
    let n = crt_solve_at_least(&plan.system, &lower);
    let mut rows = Vec::with_capacity(plan.window.len());
    for &(offset, claim) in &plan.window {
        let m = at(&n, offset);
        let cap = grid.cap(&m);
        let ok = match claim {
            Claim::DivisorsOf(x) => cap == grid.cap_u64(x),
            Claim::SixDivides => (&m % 6u32) == BigUint::from(0u32),
        };
        if !ok {
            return Err(RecoveryError::TableMismatch {
                step: plan.step,
                n,
                offset,
                claim,
                cap,
            });
        }
        rows.push(TableRow { offset, claim, cap });
    }
    Ok((n, rows))
}

/// Checks `r | m <=> r | x` for every `r` of `Q` by trial division.
pub fn table_row_holds_directly(q_elements: &[u64], m: &BigUint, x: u64) -> bool {
    q_elements
        .iter()
        .all(|&r| (m % r == BigUint::from(0u32)) == x.is_multiple_of(r))
}

pub(crate) fn at(n: &BigUint, offset: i64) -> BigUint {
    let v = BigInt::from(n.clone()) + offset;
    v.to_biguint().expect("window stays positive")
}

struct Builder {
    sys: CongruenceSystem,
}

impl Builder {
    fn new() -> Self {
        Self {
            sys: CongruenceSystem::default(),
        }
    }

    fn push(&mut self, residue: i64, modulus: u64) -> Result<(), RecoveryError> {
        self.sys.push(residue, modulus)?;
        Ok(())
    }

    /// `n = p^a mod p^(a+1)`.
    fn exact_power(&mut self, p: u64, a: u32) -> Result<(), RecoveryError> {
        let r = BigUint::from(p).pow(a);
        let m = &r * p;
        self.sys.push(BigInt::from(r), m)?;
        Ok(())
    }
}

fn claims(pairs: &[(i64, Claim)]) -> Vec<(i64, Claim)> {
    pairs.to_vec()
}

use Claim::{DivisorsOf as Div, SixDivides as Six};

fn valuation(q: u64, p: u64) -> u32 {
    let (mut x, mut a) = (q, 0);
    while x % p == 0 {
        x /= p;
        a += 1;
    }
    a
}

pub fn in_divisor_sum_class(q: u64, grid: &QGrid) -> bool {
    q.is_multiple_of(2) && (q.is_multiple_of(3) || grid.gamma(3).is_none())
}

/// `n = p^a mod p^(a+1)` for `a_p >= 1`, `n = 2 mod p` otherwise; the
/// window `n - 1, n, n + 1` has divisor sets `{1}`, `div(q)`, `{1}`.
pub fn plan_divisor_sum(q: u64, grid: &QGrid) -> Result<StepPlan, RecoveryError> {
    let mut b = Builder::new();
    for (&p, a) in grid.primes().iter().zip(grid.exponents(q)) {
        if a >= 1 {
            b.exact_power(p, a)?;
        } else {
            b.push(2, p)?;
        }
    }
    Ok(StepPlan {
        step: StepId::DivisorSums,
        system: b.sys,
        window: claims(&[(-1, Div(1)), (0, Div(q)), (1, Div(1))]),
        mode: DegreeMode::Bar,
    })
}

pub fn plan_two(grid: &QGrid) -> Result<StepPlan, RecoveryError> {
    let mut b = Builder::new();
    b.push(4, 8)?;
    b.push(3, 9)?;
    b.push(5, 25)?;
    for &p in grid.primes().iter().filter(|&&p| p > 5) {
        b.push(3, p)?;
    }
    Ok(StepPlan {
        step: StepId::Two,
        system: b.sys,
        window: claims(&[
            (-2, Div(2)),
            (-1, Div(1)),
            (0, Div(60)),
            (1, Div(1)),
            (2, Div(2)),
        ]),
        mode: DegreeMode::FplusRel(ParityKind::Exp2),
    })
}

pub fn plan_coprime_to_six(q: u64, grid: &QGrid) -> Result<StepPlan, RecoveryError> {
    let mut b = Builder::new();
    b.push(1, 8)?;
    for (&p, a) in grid.primes().iter().zip(grid.exponents(q)) {
        if a >= 1 {
            b.exact_power(p, a)?;
        } else if p != 2 {
            b.push(1, p)?;
        }
    }
    Ok(StepPlan {
        step: StepId::CoprimeToSix,
        system: b.sys,
        window: claims(&[
            (-3, Div(2)),
            (-2, Div(1)),
            (-1, Six),
            (0, Div(q)),
            (1, Div(2)),
        ]),
        mode: DegreeMode::FplusRel(ParityKind::Exp2),
    })
}

/// The two systems giving `mult(3) + mult(4)` and `2 mult(3) + mult(4)`.
pub fn plans_three_and_four(grid: &QGrid) -> Result<[StepPlan; 2], RecoveryError> {
    let mut b = Builder::new();
    b.push(4, 8)?;
    b.push(4, 25)?;
    b.push(4, 9)?;
    for &p in grid.primes().iter().filter(|&&p| p > 5) {
        b.push(-2, p)?;
    }
    let first = StepPlan {
        step: StepId::ThreeAndFour,
        system: b.sys,
        window: claims(&[
            (-3, Div(1)),
            (-2, Div(2)),
            (-1, Div(3)),
            (0, Div(4)),
            (1, Div(5)),
            (2, Six),
            (3, Div(1)),
        ]),
        mode: DegreeMode::Bar,
    };
    let mut b = Builder::new();
    b.push(8, 16)?;
    b.push(9, 27)?;
    for &p in grid.primes().iter().filter(|&&p| p > 3) {
        b.push(0, p)?;
    }
    let second = StepPlan {
        step: StepId::ThreeAndFour,
        system: b.sys,
        window: claims(&[
            (-4, Div(4)),
            (-3, Div(3)),
            (-2, Div(2)),
            (-1, Div(1)),
            (0, Six),
            (1, Div(1)),
            (2, Div(2)),
            (3, Div(3)),
            (4, Div(4)),
        ]),
        mode: DegreeMode::FplusRel(ParityKind::Exp4),
    };
    Ok([first, second])
}

pub fn plan_twice_odd(q: u64, grid: &QGrid) -> Result<StepPlan, RecoveryError> {
    let (a5, a7) = (valuation(q, 5), valuation(q, 7));
    let mut b = Builder::new();
    for (&p, a) in grid.primes().iter().zip(grid.exponents(q)) {
        if a >= 1 && p != 2 {
            b.exact_power(p, a)?;
        }
    }
    if a5 == 0 {
        b.push(4, 25)?;
    }
    b.push(6, 16)?;
    b.push(4, 9)?;
    if a7 == 0 {
        b.push(5, 7)?;
    }
    for (&p, a) in grid.primes().iter().zip(grid.exponents(q)) {
        if p > 7 && a == 0 {
            b.push(4, p)?;
        }
    }
    let next = if a5 >= 1 { 1 } else { 5 };
    Ok(StepPlan {
        step: StepId::TwiceOdd,
        system: b.sys,
        window: claims(&[
            (-3, Div(1)),
            (-2, Div(4)),
            (-1, Div(3)),
            (0, Div(q)),
            (1, Div(next)),
            (2, Six),
            (3, Div(1)),
        ]),
        mode: DegreeMode::Bar,
    })
}

pub fn plan_four_not_three(q: u64, grid: &QGrid) -> Result<StepPlan, RecoveryError> {
    let a5 = valuation(q, 5);
    let mut b = Builder::new();
    for (&p, a) in grid.primes().iter().zip(grid.exponents(q)) {
        if a >= 1 {
            b.exact_power(p, a)?;
        }
    }
    b.push(4, 9)?;
    if a5 == 0 {
        b.push(7, 25)?;
    }
    for (&p, a) in grid.primes().iter().zip(grid.exponents(q)) {
        if p > 5 && a == 0 {
            b.push(4, p)?;
        }
    }
    let prev = if a5 >= 1 { 2 } else { 10 };
    Ok(StepPlan {
        step: StepId::FourNotThree,
        system: b.sys,
        window: claims(&[
            (-3, Div(1)),
            (-2, Div(prev)),
            (-1, Div(3)),
            (0, Div(q)),
            (1, Div(1)),
        ]),
        mode: DegreeMode::Bar,
    })
}

pub fn plan_three_odd(q: u64, grid: &QGrid) -> Result<StepPlan, RecoveryError> {
    let a5 = valuation(q, 5);
    let mut b = Builder::new();
    b.push(5, 8)?;
    for (&p, a) in grid.primes().iter().zip(grid.exponents(q)) {
        if a >= 1 {
            b.exact_power(p, a)?;
        }
    }
    if a5 == 0 {
        b.push(4, 25)?;
    }
    for (&p, a) in grid.primes().iter().zip(grid.exponents(q)) {
        if p > 5 && a == 0 {
            b.push(3, p)?;
        }
    }
    let next = if a5 >= 1 { 2 } else { 10 };
    Ok(StepPlan {
        step: StepId::ThreeOdd,
        system: b.sys,
        window: claims(&[
            (-2, Div(1)),
            (-1, Div(4)),
            (0, Div(q)),
            (1, Div(next)),
            (2, Div(1)),
        ]),
        mode: DegreeMode::Bar,
    })
}

/// Plans for every step that solves for single `mult(q)`, by class of `q`.
pub fn plan_for(step: StepId, q: u64, grid: &QGrid) -> Result<StepPlan, RecoveryError> {
    match step {
        StepId::DivisorSums | StepId::Six => plan_divisor_sum(q, grid),
        StepId::Two => plan_two(grid),
        StepId::CoprimeToSix => plan_coprime_to_six(q, grid),
        StepId::ThreeAndFour => Ok(plans_three_and_four(grid)?[0].clone()),
        StepId::TwiceOdd => plan_twice_odd(q, grid),
        StepId::FourNotThree => plan_four_not_three(q, grid),
        StepId::ThreeOdd => plan_three_odd(q, grid),
    }
}

/// The step that determines `mult(q)` for `q > 1` in `Q`.
pub fn class_of(q: u64, grid: &QGrid) -> StepId {
    if in_divisor_sum_class(q, grid) {
        return StepId::Six;
    }
    match (valuation(q, 2), q.is_multiple_of(3)) {
        (0, false) => StepId::CoprimeToSix,
        (0, true) => StepId::ThreeOdd,
        (1, _) => StepId::TwiceOdd,
        _ => StepId::FourNotThree,
    }
}
