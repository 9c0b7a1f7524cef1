use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

/// Formal power series `sum_{m >= 1} c_m T^m` whose coefficients are produced
/// on demand. There is no constant term.
pub struct TSeries<C> {
    coeff: Box<dyn Fn(u64) -> C + Send + Sync>,
    order: Option<u64>,
}

impl<C> TSeries<C> {
    pub fn new(coeff: impl Fn(u64) -> C + Send + Sync + 'static) -> Self {
        Self {
            coeff: Box::new(coeff),
            order: None,
        }
    }

    /// Keeps the coefficients of `T^1..=T^order` only.
    pub fn truncated(mut self, order: u64) -> Self {
        self.order = Some(self.order.map_or(order, |o| o.min(order)));
        self
    }

    pub fn order(&self) -> Option<u64> {
        self.order
    }

    /// Coefficient of `T^m`; `None` for `m = 0` and beyond the truncation.
    pub fn coeff(&self, m: u64) -> Option<C> {
        if m == 0 || self.order.is_some_and(|o| m > o) {
            return None;
        }
        Some((self.coeff)(m))
    }

    /// Coefficients of `T^1..=T^n`, stopping early at the truncation order.
    pub fn take(&self, n: u64) -> Vec<C> {
        let end = self.order.map_or(n, |o| o.min(n));
        (1..=end).map(|m| (self.coeff)(m)).collect()
    }
}

impl<C> fmt::Debug for TSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TSeries")
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}
