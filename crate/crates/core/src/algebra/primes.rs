use alloc::vec;
use alloc::vec::Vec;

/// Primes in `[2, bound]`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = usize::try_from(bound).expect("sieve bound exceeds address space");
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        out.push(p as u64);
        let mut k = p * p;
        while k <= n {
            composite[k] = true;
            k += p;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds() {
        assert_eq!(primes_up_to(3), [2, 3]);
        assert_eq!(primes_up_to(12), [2, 3, 5, 7, 11]);
        assert!(primes_up_to(1).is_empty());
        assert_eq!(primes_up_to(100).len(), 25);
    }
}
