//! Group-level criteria for the forbidden-subgraph classes, and the harness
//! that checks them against the graph detectors.
//!
//! Every criterion is evaluated from the order spectrum alone, so it applies
//! to groups far larger than any graph the detectors could build.

mod harness;
mod report;

use serde::Serialize;

use crate::arith::PrimeSet;
use crate::coprime::{GkGraph, PrimeSetGraph};
use crate::detect;
use crate::group::{GroupError, GroupHandle, OrderSpectrum};

pub use harness::{
    dihedral_example_readings, run_theorem_harness, Family, HarnessOptions, HarnessRun, TheoremId,
    TheoremResult, Universe, Violation,
};
pub use report::{classify_group, ClassFlag, ClassReport, ClassifyOptions, CLASS_NAMES};

/// Everything the criteria need, computed once per group.
#[derive(Debug, Clone)]
pub struct GroupFacts {
    pub spec: String,
    pub order: u64,
    pub primes: PrimeSet,
    pub nilpotent: bool,
    pub order_form: bool,
    pub spectrum: OrderSpectrum,
}

impl GroupFacts {
    pub fn of(g: &GroupHandle) -> Self {
        GroupFacts {
            spec: g.to_string(),
            order: g.order(),
            primes: g.primes(),
            nilpotent: g.is_nilpotent(),
            order_form: g.order_is_p_power_or_twice(),
            spectrum: g.order_spectrum(),
        }
    }

    /// Some element order is divisible by `p * q`.
    fn pair_realized(&self, p: u64, q: u64) -> bool {
        self.spectrum.has_order_divisible_by(p * q)
    }
}

/// C4-free iff nilpotent of order `p^n` or `2 p^n`.
pub fn c4_free_from_facts(f: &GroupFacts) -> bool {
    f.nilpotent && f.order_form
}

/// Split iff C4-free: both classes are characterised by the same condition.
pub fn split_from_facts(f: &GroupFacts) -> bool {
    c4_free_from_facts(f)
}

/// Cograph iff there are no three distinct primes `p1, p2, p3` with element
/// orders divisible by `p1 p2` and by `p2 p3`.
pub fn cograph_from_facts(f: &GroupFacts) -> bool {
    let ps = f.primes.as_slice();
    !ps.iter().any(|&shared| {
        ps.iter()
            .filter(|&&q| q != shared && f.pair_realized(shared, q))
            .count()
            >= 2
    })
}

/// Which rule decided an AT-freeness criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AtRule {
    /// At most two primes divide `|G|`: never an asteroidal triple.
    FewPrimes,
    /// Nilpotent: AT-free iff fewer than three primes.
    Nilpotent,
    /// Exactly three primes: AT iff all three pairwise products are realised.
    ThreePrimes,
    /// Four or more primes and not nilpotent: no criterion is known.
    OpenProblem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AtCriterion {
    pub at_free: Option<bool>,
    pub rule: AtRule,
}

pub fn at_free_from_facts(f: &GroupFacts) -> AtCriterion {
    let k = f.primes.len();
    if k <= 2 {
        return AtCriterion { at_free: Some(true), rule: AtRule::FewPrimes };
    }
    if f.nilpotent {
        return AtCriterion { at_free: Some(false), rule: AtRule::Nilpotent };
    }
    if k == 3 {
        let p = f.primes.as_slice();
        let all_pairs =
            f.pair_realized(p[0], p[1]) && f.pair_realized(p[0], p[2]) && f.pair_realized(p[1], p[2]);
        return AtCriterion { at_free: Some(!all_pairs), rule: AtRule::ThreePrimes };
    }
    AtCriterion { at_free: None, rule: AtRule::OpenProblem }
}

pub fn criterion_c4_free(g: &GroupHandle) -> bool {
    c4_free_from_facts(&GroupFacts::of(g))
}

pub fn criterion_claw_free(g: &GroupHandle) -> bool {
    g.order() <= 3
}

/// `K_{1,4}`-freeness as characterised by `|G| <= 4`.
///
/// This is not a true characterisation: `S_3` (order 6) is `K_{1,4}`-free
/// because no four non-identity elements of `S_3` are pairwise non-coprime.
/// The harness reports the resulting disagreement.
pub fn criterion_k14_free(g: &GroupHandle) -> bool {
    g.order() <= 4
}

pub fn criterion_cograph(g: &GroupHandle) -> bool {
    cograph_from_facts(&GroupFacts::of(g))
}

pub fn criterion_split(g: &GroupHandle) -> bool {
    split_from_facts(&GroupFacts::of(g))
}

pub fn criterion_at_free(g: &GroupHandle) -> AtCriterion {
    at_free_from_facts(&GroupFacts::of(g))
}

/// `Γ(S_n)` is AT-free iff `n <= 7`.
pub fn criterion_symmetric_at_free(n: u32) -> bool {
    n <= 7
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Proposition {
    /// Cograph implies a `P3`-free Gruenberg–Kegel graph.
    P2,
    /// An asteroidal triple implies at least three primes.
    P3,
    /// AT-free with at least four primes implies a trivial center.
    P4,
}

/// One implication evaluated on one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropositionCheck {
    pub proposition: Proposition,
    pub premise: bool,
    pub conclusion: bool,
    pub witness: Option<detect::Witness>,
}

impl PropositionCheck {
    pub fn holds(&self) -> bool {
        !self.premise || self.conclusion
    }
}

/// Evaluates `premise ⇒ conclusion` (never the converse) on `g`.
pub fn check_proposition(prop: Proposition, g: &GroupHandle) -> Result<PropositionCheck, GroupError> {
    let reduced = PrimeSetGraph::build(g);
    let primes = g.primes();
    Ok(match prop {
        Proposition::P2 => {
            let cograph = detect::is_cograph(&reduced);
            let p3 = detect::is_p3_free(&GkGraph::build(g));
            PropositionCheck {
                proposition: prop,
                premise: cograph.holds,
                conclusion: p3.holds,
                witness: p3.witness.or(cograph.witness),
            }
        }
        Proposition::P3 => {
            let at = detect::find_asteroidal_triple(&reduced);
            PropositionCheck {
                proposition: prop,
                premise: at.is_some(),
                conclusion: primes.len() >= 3,
                witness: at,
            }
        }
        Proposition::P4 => {
            let at = detect::find_asteroidal_triple(&reduced);
            let center = g.center()?;
            PropositionCheck {
                proposition: prop,
                premise: at.is_none() && primes.len() >= 4,
                conclusion: center.len() == 1,
                witness: at,
            }
        }
    })
}
