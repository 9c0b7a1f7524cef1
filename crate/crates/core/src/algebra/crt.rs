use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub residue: BigUint,
    pub modulus: BigUint,
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {} mod {}", self.residue, self.modulus)
    }
}

/// Simultaneous congruences with pairwise coprime moduli.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CongruenceSystem {
    items: Vec<Congruence>,
}

impl CongruenceSystem {
    /// Builds a system from `(residue, modulus)` pairs. Residues may be any
    /// integer and are reduced into `[0, modulus)`.
    pub fn new<I, R, M>(pairs: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (R, M)>,
        R: Into<BigInt>,
        M: Into<BigUint>,
    {
        let mut sys = Self::default();
        for (r, m) in pairs {
            sys.push(r, m)?;
        }
        Ok(sys)
    }

    pub fn push(
        &mut self,
        residue: impl Into<BigInt>,
        modulus: impl Into<BigUint>,
    ) -> Result<(), AlgebraError> {
        let modulus = modulus.into();
        if modulus.is_zero() {
            return Err(AlgebraError::ZeroModulus);
        }
        for c in &self.items {
            if !c.modulus.gcd(&modulus).is_one() {
                return Err(AlgebraError::NonCoprimeModuli(c.modulus.clone(), modulus));
            }
        }
        let m = BigInt::from_biguint(Sign::Plus, modulus.clone());
        let residue = residue
            .into()
            .mod_floor(&m)
            .to_biguint()
            .expect("nonnegative");
        self.items.push(Congruence { residue, modulus });
        Ok(())
    }

    pub fn congruences(&self) -> &[Congruence] {
        &self.items
    }

    /// Product of the moduli.
    pub fn modulus(&self) -> BigUint {
        self.items.iter().map(|c| &c.modulus).product()
    }

    /// Least nonnegative solution.
    fn base_solution(&self) -> BigUint {
        let mut x = BigInt::zero();
        let mut big_m = BigInt::one();
        for c in &self.items {
            let m = BigInt::from(c.modulus.clone());
            let r = BigInt::from(c.residue.clone());
            // x + big_m * t = r (mod m)
            let inv = big_m.extended_gcd(&m).x.mod_floor(&m);
            let t = ((r - &x) * inv).mod_floor(&m);
            x += &big_m * t;
            big_m *= m;
            x = x.mod_floor(&big_m);
        }
        x.to_biguint().expect("nonnegative")
    }
}

/// Least `n >= 2` satisfying every congruence of the system.
pub fn crt_solve(system: &CongruenceSystem) -> BigUint {
    crt_solve_at_least(system, &BigUint::from(2u8))
}

/// Least `n >= lower` satisfying every congruence of the system.
pub fn crt_solve_at_least(system: &CongruenceSystem, lower: &BigUint) -> BigUint {
    let x = system.base_solution();
    if &x >= lower {
        return x;
    }
    let m = system.modulus();
    let steps = (lower - &x).div_ceil(&m);
    x + steps * m
}
