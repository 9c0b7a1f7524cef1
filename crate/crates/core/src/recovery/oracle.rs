use alloc::string::String;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::RecoveryError;
use crate::chi::{parity_certificate, ParityKind};
use crate::zeta::ZetaContext;

/// Everything the inverse procedure may learn about the zeta function.
///
/// Implementations answer for arbitrary positive `m`; recovery never sees
/// the polynomial itself.
pub trait ZetaOracle {
    fn dimension(&self) -> usize;

    /// `a_m = -L^{-s(m)}`, i.e. no pure exponent divides `m`.
    fn is_pure(&self, m: &BigUint) -> bool;

    /// `deg beta(overline a_m) = 1 - s(m)`, defined at pure `m` only.
    fn deg_beta_bar(&self, m: &BigUint) -> Option<BigInt>;

    /// `deg beta F^+(a_m)` up to an unknown offset that depends only on the
    /// token of `a_m`.
    fn deg_beta_fplus_rel(&self, m: &BigUint) -> BigInt;

    /// Canonical token of the class factor of `a_m`.
    fn token_id(&self, m: &BigUint) -> String;

    /// Whether the parity certificate of the given kind holds at `m`.
    fn parity_fplus_ok(&self, m: &BigUint, kind: ParityKind) -> bool;
}

/// Oracle answering from the coefficient descriptors of a known polynomial,
/// with every token offset fixed to zero.
#[derive(Clone, Debug)]
pub struct ProfileOracle {
    ctx: ZetaContext,
}

impl ProfileOracle {
    pub fn new(ctx: &ZetaContext) -> Result<Self, RecoveryError> {
        if !ctx.polynomial().is_singular() {
            return Err(RecoveryError::NonSingular);
        }
        Ok(Self { ctx: ctx.clone() })
    }
}

impl ZetaOracle for ProfileOracle {
    fn dimension(&self) -> usize {
        self.ctx.dim()
    }

    fn is_pure(&self, m: &BigUint) -> bool {
        self.ctx.polynomial().exponents().divisor_set(m).is_empty()
    }

    fn deg_beta_bar(&self, m: &BigUint) -> Option<BigInt> {
        self.is_pure(m)
            .then(|| BigInt::from(1) - BigInt::from(self.ctx.polynomial().exponents().lshift(m)))
    }

    fn deg_beta_fplus_rel(&self, m: &BigUint) -> BigInt {
        -BigInt::from(self.ctx.polynomial().exponents().lshift(m))
    }

    fn token_id(&self, m: &BigUint) -> String {
        self.ctx.ztilde_coeff(m).token.canonical()
    }

    fn parity_fplus_ok(&self, m: &BigUint, kind: ParityKind) -> bool {
        parity_certificate(self.ctx.polynomial(), m, kind).is_ok()
    }
}

/// Wraps an oracle and adds a pseudo-random offset, fixed per token, to
/// every relative degree.
#[derive(Clone, Debug)]
pub struct ShiftedOracle<O> {
    inner: O,
    seed: u64,
}

impl<O: ZetaOracle> ShiftedOracle<O> {
    pub fn new(inner: O, seed: u64) -> Self {
        Self { inner, seed }
    }

    pub fn offset(&self, token: &str) -> i64 {
        // FNV-1a, then a seeded draw
        let h = token.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
            (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3)
        });
        ChaCha8Rng::seed_from_u64(h ^ self.seed).gen_range(-1_000_000..=1_000_000)
    }
}

impl<O: ZetaOracle> ZetaOracle for ShiftedOracle<O> {
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn is_pure(&self, m: &BigUint) -> bool {
        self.inner.is_pure(m)
    }

    fn deg_beta_bar(&self, m: &BigUint) -> Option<BigInt> {
        self.inner.deg_beta_bar(m)
    }

    fn deg_beta_fplus_rel(&self, m: &BigUint) -> BigInt {
        self.inner.deg_beta_fplus_rel(m) + self.offset(&self.inner.token_id(m))
    }

    fn token_id(&self, m: &BigUint) -> String {
        self.inner.token_id(m)
    }

    fn parity_fplus_ok(&self, m: &BigUint, kind: ParityKind) -> bool {
        self.inner.parity_fplus_ok(m, kind)
    }
}
