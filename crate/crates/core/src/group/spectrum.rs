use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, lcm, prime_support, PrimeSet};

/// Number of elements of each order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderSpectrum {
    counts: BTreeMap<u64, u64>,
}

impl OrderSpectrum {
    pub fn from_counts(counts: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut s = OrderSpectrum::default();
        for (d, c) in counts {
            s.add(d, c);
        }
        s
    }

    pub fn from_orders(orders: impl IntoIterator<Item = u64>) -> Self {
        Self::from_counts(orders.into_iter().map(|d| (d, 1)))
    }

    /// Spectrum of the cyclic group of order `n`: `φ(d)` elements of each order `d | n`.
    pub fn cyclic(n: u64) -> Self {
        Self::from_counts(crate::arith::divisors(n).into_iter().map(|d| (d, euler_phi(d))))
    }

    pub(crate) fn add(&mut self, order: u64, count: u64) {
        if count > 0 {
            *self.counts.entry(order).or_insert(0) += count;
        }
    }

    pub fn count(&self, order: u64) -> u64 {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// Distinct element orders, ascending.
    pub fn orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.counts.keys().copied()
    }

    /// Group order.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.orders().fold(1, lcm)
    }

    /// Spectrum of a direct product: an element `(a, b)` has order `lcm(o(a), o(b))`.
    pub fn lcm_convolve(&self, other: &OrderSpectrum) -> OrderSpectrum {
        let mut out = OrderSpectrum::default();
        for (&d1, &c1) in &self.counts {
            for (&d2, &c2) in &other.counts {
                out.add(lcm(d1, d2), c1 * c2);
            }
        }
        out
    }

    /// Element counts grouped by prime support of the order.
    pub fn by_support(&self) -> BTreeMap<PrimeSet, u64> {
        let mut out = BTreeMap::new();
        for (&d, &c) in &self.counts {
            *out.entry(prime_support(d)).or_insert(0) += c;
        }
        out
    }

    /// True if some element order is divisible by `m` (equivalently, since
    /// powers realise divisors, if an element of order `m` exists).
    pub fn has_order_divisible_by(&self, m: u64) -> bool {
        self.orders().any(|d| d % m == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_six() {
        let s = OrderSpectrum::cyclic(6);
        assert_eq!(
            s.counts().iter().map(|(&a, &b)| (a, b)).collect::<Vec<_>>(),
            vec![(1, 1), (2, 1), (3, 2), (6, 2)]
        );
        assert_eq!(s.total(), 6);
        assert_eq!(s.exponent(), 6);
    }

    #[test]
    fn convolution_commutes() {
        let a = OrderSpectrum::cyclic(4);
        let b = OrderSpectrum::from_counts([(1, 1), (2, 3), (3, 2)]);
        assert_eq!(a.lcm_convolve(&b), b.lcm_convolve(&a));
        assert_eq!(a.lcm_convolve(&b).total(), 24);
    }
}
