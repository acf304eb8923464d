//! Checks of the two adjacency laws on a materialized co-prime graph:
//! `x ~ y` iff `π(x) ∩ π(y) = ∅`, and `π(x) ⊆ π(y)` iff `N(y) ⊆ N(x)`.

use serde::Serialize;

use crate::arith::prime_support;

use super::CoprimeGraph;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LawReport {
    /// Pairs whose adjacency differs from disjointness of prime supports.
    pub adjacency_violations: Vec<(usize, usize)>,
    /// Pairs of non-identity elements where containment of supports and
    /// reverse containment of neighbourhoods disagree.
    pub containment_violations: Vec<(usize, usize)>,
    /// Ordered pairs involving the identity where the containment law fails.
    /// For `x = e` it always does once `|G| > 1`: `π(e) = ∅ ⊆ π(y)`, but
    /// `e ∈ N(y)` while `e ∉ N(e)`.
    pub identity_exceptions: usize,
}

impl LawReport {
    pub fn is_clean(&self) -> bool {
        self.adjacency_violations.is_empty() && self.containment_violations.is_empty()
    }
}

/// Checks the adjacency law on every pair and the containment law on every
/// ordered pair of distinct elements. Quadratic in `|G|`.
pub fn check_laws(cg: &CoprimeGraph) -> LawReport {
    let g = cg.graph();
    let supports: Vec<_> = cg.orders().iter().map(|&o| prime_support(o)).collect();
    let mut report = LawReport::default();
    for x in 0..cg.len() {
        for y in 0..cg.len() {
            if x == y {
                continue;
            }
            if x < y && g.has_edge(x, y) != supports[x].is_disjoint(&supports[y]) {
                report.adjacency_violations.push((x, y));
            }
            let by_primes = supports[x].is_subset(&supports[y]);
            let by_neighbourhoods = g.row(y).is_subset(g.row(x));
            if by_primes != by_neighbourhoods {
                if supports[x].is_empty() || supports[y].is_empty() {
                    report.identity_exceptions += 1;
                } else {
                    report.containment_violations.push((x, y));
                }
            }
        }
    }
    report
}
