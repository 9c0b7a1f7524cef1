use core::fmt;

/// Subset `I` of the variable indices, stored as a bit mask (bit `i` is the
/// variable `x_{i+1}`).
///
/// Ordering follows the mask value, which is also the face index used in
/// reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceSet(u32);

impl FaceSet {
    pub const EMPTY: Self = Self(0);
    pub const MAX_DIM: usize = 32;

    pub const fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{0, ..., d-1}`.
    pub fn full(d: usize) -> Self {
        assert!(d <= Self::MAX_DIM);
        if d == 32 {
            Self(u32::MAX)
        } else {
            Self((1u32 << d) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Self(1 << i)
    }

    pub fn from_indices(it: impl IntoIterator<Item = usize>) -> Self {
        Self(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        i < Self::MAX_DIM && self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..Self::MAX_DIM).filter(move |&i| self.contains(i))
    }

    /// Nonempty subsets, in increasing mask order.
    pub fn nonempty_subsets(self) -> impl Iterator<Item = Self> {
        let full = self.0;
        let mut next = full & full.wrapping_neg();
        let mut done = full == 0;
        core::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = next;
            if cur == full {
                done = true;
            } else {
                next = (cur.wrapping_sub(full)) & full;
            }
            Some(Self(cur))
        })
    }
}

impl fmt::Display for FaceSet {
    /// One-based, e.g. `{1,3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    #[test]
    fn subsets_in_mask_order() {
        let s = FaceSet::from_indices([0, 2]);
        let subs: Vec<u32> = s.nonempty_subsets().map(FaceSet::bits).collect();
        assert_eq!(subs, [1, 4, 5]);
        assert_eq!(FaceSet::full(3).nonempty_subsets().count(), 7);
        assert_eq!(FaceSet::EMPTY.nonempty_subsets().count(), 0);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(FaceSet::full(32).len(), 32);
    }
}
