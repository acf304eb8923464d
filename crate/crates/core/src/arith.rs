//! Integer helpers shared by the group, graph and embedding code.

use std::fmt;

use serde::{Deserialize, Serialize};

pub use num_integer::{gcd, lcm};

/// Prime factorisation by trial division, ascending primes with multiplicity.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Product of the distinct prime divisors of `n` (1 for `n = 1`).
pub fn radical(n: u64) -> u64 {
    factorize(n).into_iter().map(|(p, _)| p).product()
}

/// If `n = p^k` with `k >= 1`, returns `p`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Ascending primes 2, 3, 5, ...
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

/// The set of prime divisors of the given order.
pub fn prime_support(n: u64) -> PrimeSet {
    PrimeSet(factorize(n).into_iter().map(|(p, _)| p).collect())
}

/// A sorted, duplicate-free set of primes: `π(g)` for an element or `π(G)` for a group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeSet(Vec<u64>);

impl PrimeSet {
    pub fn empty() -> Self {
        PrimeSet(Vec::new())
    }

    /// Builds a set from arbitrary primes; sorts and removes duplicates.
    ///
    /// Panics if any entry is not prime.
    pub fn from_primes(primes: impl IntoIterator<Item = u64>) -> Self {
        let mut v: Vec<u64> = primes.into_iter().collect();
        assert!(v.iter().all(|&p| is_prime(p)), "non-prime entry in {v:?}");
        v.sort_unstable();
        v.dedup();
        PrimeSet(v)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn is_disjoint(&self, other: &PrimeSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.0.iter().all(|p| other.contains(*p))
    }

    /// Product of the members; the smallest order with exactly this support.
    pub fn product(&self) -> u64 {
        self.0.iter().product()
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_support_examples() {
        assert_eq!(prime_support(12).as_slice(), &[2, 3]);
        assert!(prime_support(1).is_empty());
        assert_eq!(prime_support(30).as_slice(), &[2, 3, 5]);
        assert_eq!(prime_support(97).as_slice(), &[97]);
    }

    #[test]
    fn totient_and_divisors() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(97), 96);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        for n in 1..300u64 {
            let phi_sum: u64 = divisors(n).into_iter().map(euler_phi).sum();
            assert_eq!(phi_sum, n);
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power_base(1), None);
        assert_eq!(prime_power_base(81), Some(3));
        assert_eq!(prime_power_base(18), None);
        assert_eq!(radical(360), 30);
    }

    #[test]
    fn set_relations() {
        let a = PrimeSet::from_primes([3, 2]);
        let b = PrimeSet::from_primes([2, 3, 5]);
        let c = PrimeSet::from_primes([5, 7]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(a.is_disjoint(&c));
        assert!(!b.is_disjoint(&c));
        assert_eq!(b.to_string(), "{2,3,5}");
        assert_eq!(primes().take(6).collect::<Vec<_>>(), vec![2, 3, 5, 7, 11, 13]);
    }
}
