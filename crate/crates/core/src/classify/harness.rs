//! Cross-checks of every characterisation over enumerated group families.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::coprime::{check_laws, CoprimeGraph, PrimeSetGraph};
use crate::detect::{self, Witness};
use crate::group::{GroupError, GroupHandle, GroupKind};

use super::report::{classify_group, ClassReport, ClassifyOptions};
use super::{check_proposition, criterion_symmetric_at_free, Proposition};

/// Largest group on which the adjacency laws are checked element by element.
pub const LAW_CHECK_LIMIT: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T3_2,
    T3_3,
    T3_4,
    T3_5,
    T3_6,
    T4_1,
    T4_2,
    T4_3,
    P1,
    P2,
    P3,
    P4,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::T3_2,
        TheoremId::T3_3,
        TheoremId::T3_4,
        TheoremId::T3_5,
        TheoremId::T3_6,
        TheoremId::T4_1,
        TheoremId::T4_2,
        TheoremId::T4_3,
        TheoremId::P1,
        TheoremId::P2,
        TheoremId::P3,
        TheoremId::P4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T3_2 => "3.2",
            TheoremId::T3_3 => "3.3",
            TheoremId::T3_4 => "3.4",
            TheoremId::T3_5 => "3.5",
            TheoremId::T3_6 => "3.6",
            TheoremId::T4_1 => "4.1",
            TheoremId::T4_2 => "4.2",
            TheoremId::T4_3 => "4.3",
            TheoremId::P1 => "P1",
            TheoremId::P2 => "P2",
            TheoremId::P3 => "P3",
            TheoremId::P4 => "P4",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T3_2 => "C4-free iff nilpotent of order p^n or 2p^n",
            TheoremId::T3_3 => "claw-free iff |G| <= 3; K_{1,4}-free iff |G| <= 4",
            TheoremId::T3_4 => "nilpotent: cograph iff |pi(G)| < 3",
            TheoremId::T3_5 => "cograph iff no orders divisible by p1p2 and p2p3",
            TheoremId::T3_6 => "split iff nilpotent of order p^n or 2p^n",
            TheoremId::T4_1 => "nilpotent: AT-free iff |pi(G)| < 3",
            TheoremId::T4_2 => "|pi(G)| = 3: AT iff orders p1p2, p1p3, p2p3 all occur",
            TheoremId::T4_3 => "S_n is AT-free iff n <= 7",
            TheoremId::P1 => "adjacency iff disjoint supports; support containment iff reverse neighbourhood containment",
            TheoremId::P2 => "cograph implies P3-free Gruenberg-Kegel graph",
            TheoremId::P3 => "an AT forces |pi(G)| >= 3",
            TheoremId::P4 => "AT-free with |pi(G)| >= 4 forces a trivial center",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem id {s:?}"))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `Z(n)`, `1 <= n <= bound`.
    Cyclic,
    /// `D(n)`, even total order `2 <= n <= bound`.
    Dihedral,
    /// `Dic(n)`, total order `8 <= n <= bound`, `n ≡ 0 mod 4`.
    Dicyclic,
    /// `S(n)`, `1 <= n <= bound`.
    Symmetric,
    /// `A(n)`, `1 <= n <= bound`.
    Alternating,
    /// `Z(a) x Z(b)`, `2 <= a <= b`, `ab <= bound`.
    AbelianPairs,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Cyclic,
        Family::Dihedral,
        Family::Dicyclic,
        Family::Symmetric,
        Family::Alternating,
        Family::AbelianPairs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Dicyclic => "dicyclic",
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
            Family::AbelianPairs => "abelian-pairs",
        }
    }

    /// Whether the bound is a permutation degree rather than a group order.
    pub fn bounds_degree(self) -> bool {
        matches!(self, Family::Symmetric | Family::Alternating)
    }

    fn members(self, bound: u64) -> Vec<GroupHandle> {
        let ok = |r: Result<GroupHandle, GroupError>| r.expect("family parameters are valid");
        match self {
            Family::Cyclic => (1..=bound).map(|n| ok(GroupHandle::cyclic(n))).collect(),
            Family::Dihedral => (2..=bound).step_by(2).map(|n| ok(GroupHandle::dihedral(n))).collect(),
            Family::Dicyclic => (8..=bound).step_by(4).map(|n| ok(GroupHandle::dicyclic(n))).collect(),
            Family::Symmetric => (1..=bound as u32).map(|n| ok(GroupHandle::symmetric(n))).collect(),
            Family::Alternating => (1..=bound as u32).map(|n| ok(GroupHandle::alternating(n))).collect(),
            Family::AbelianPairs => {
                let mut out = Vec::new();
                for a in 2..=bound {
                    for b in a..=bound / a {
                        let f = vec![ok(GroupHandle::cyclic(a)), ok(GroupHandle::cyclic(b))];
                        out.push(ok(GroupHandle::direct_product(f)));
                    }
                }
                out
            }
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .or(match s.as_str() {
                "abelian" | "products" => Some(Family::AbelianPairs),
                _ => None,
            })
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// The groups a harness run covers: whole families up to a bound, plus
/// individually named groups (including Cayley tables).
#[derive(Debug, Clone, Default)]
pub struct Universe {
    pub families: Vec<(Family, u64)>,
    pub extra: Vec<GroupHandle>,
}

impl Universe {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_family(mut self, family: Family, bound: u64) -> Self {
        self.families.push((family, bound));
        self
    }

    pub fn with_group(mut self, g: GroupHandle) -> Self {
        self.extra.push(g);
        self
    }

    /// Cyclic to 500; dihedral and dicyclic to 200; symmetric and alternating
    /// to degree 8; `Z(a) x Z(b)` with `ab <= 200`; `S(3)xZ(5)`.
    pub fn default_corpus() -> Self {
        let s3z5 = GroupHandle::direct_product(vec![
            GroupHandle::symmetric(3).unwrap(),
            GroupHandle::cyclic(5).unwrap(),
        ])
        .unwrap();
        Universe::new()
            .with_family(Family::Cyclic, 500)
            .with_family(Family::Dihedral, 200)
            .with_family(Family::Dicyclic, 200)
            .with_family(Family::Symmetric, 8)
            .with_family(Family::Alternating, 8)
            .with_family(Family::AbelianPairs, 200)
            .with_group(s3z5)
    }

    pub fn is_empty(&self) -> bool {
        self.families.iter().all(|&(f, b)| f.members(b).is_empty()) && self.extra.is_empty()
    }

    /// Every group, in canonical order: families as listed, then extras.
    pub fn groups(&self) -> Vec<GroupHandle> {
        let mut out: Vec<GroupHandle> =
            self.families.iter().flat_map(|&(f, b)| f.members(b)).collect();
        out.extend(self.extra.iter().cloned());
        out
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self
            .families
            .iter()
            .map(|&(f, b)| {
                let what = if f.bounds_degree() { "degree" } else { "order" };
                format!("{} {what} <= {b}", f.name())
            })
            .collect();
        parts.extend(self.extra.iter().map(|g| g.to_string()));
        parts.join("; ")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[derive(Default)]
pub struct HarnessOptions {
    /// Worker threads; 0 lets rayon choose.
    pub jobs: usize,
    pub classify: ClassifyOptions,
}


#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub group: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremResult {
    pub theorem: TheoremId,
    pub statement: &'static str,
    pub universe: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremResult {
    pub fn upheld(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HarnessRun {
    pub reports: Vec<ClassReport>,
    #[serde(rename = "summary")]
    pub results: Vec<TheoremResult>,
}

impl HarnessRun {
    pub fn result(&self, id: TheoremId) -> Option<&TheoremResult> {
        self.results.iter().find(|r| r.theorem == id)
    }

    pub fn all_upheld(&self) -> bool {
        self.results.iter().all(TheoremResult::upheld)
    }
}

/// Outcome of one theorem on one group.
enum Outcome {
    Skipped,
    Holds,
    Violated(String, Option<Witness>),
}

fn compare(report: &ClassReport, class: &str, expected: bool, why: &str) -> Outcome {
    match report.flag(class) {
        Some(f) if f.detector == expected => Outcome::Holds,
        Some(f) => Outcome::Violated(
            format!("{class}: detector says {}, {why} says {expected}", f.detector),
            f.witness.clone(),
        ),
        None => Outcome::Violated(
            format!("{class}: no detector verdict ({})", report.error.as_deref().unwrap_or("missing")),
            None,
        ),
    }
}

fn against_criterion(report: &ClassReport, class: &str) -> Outcome {
    match report.flag(class).map(|f| f.criterion) {
        Some(Some(c)) => compare(report, class, c, "criterion"),
        Some(None) => Outcome::Skipped,
        None => compare(report, class, false, "criterion"),
    }
}

fn both(a: Outcome, b: Outcome) -> Outcome {
    match (a, b) {
        (v @ Outcome::Violated(..), _) | (_, v @ Outcome::Violated(..)) => v,
        (Outcome::Holds, _) | (_, Outcome::Holds) => Outcome::Holds,
        _ => Outcome::Skipped,
    }
}

fn proposition(prop: Proposition, g: &GroupHandle) -> Outcome {
    match check_proposition(prop, g) {
        Ok(c) if c.holds() => Outcome::Holds,
        Ok(c) => Outcome::Violated(
            format!("premise holds but conclusion fails ({prop:?})"),
            c.witness,
        ),
        Err(GroupError::Unsupported(_)) => Outcome::Skipped,
        Err(e) => Outcome::Violated(e.to_string(), None),
    }
}

/// Per-group evaluation; the extra count is the number of identity
/// exceptions seen by the law check.
fn evaluate(
    id: TheoremId,
    g: &GroupHandle,
    report: &ClassReport,
    cap: u64,
) -> (Outcome, usize) {
    let k = report.primes.len();
    let outcome = match id {
        TheoremId::T3_2 => against_criterion(report, "c4_free"),
        TheoremId::T3_6 => against_criterion(report, "split"),
        TheoremId::T3_3 => both(against_criterion(report, "claw_free"), against_criterion(report, "k14_free")),
        TheoremId::T3_5 => against_criterion(report, "cograph"),
        TheoremId::T3_4 if report.nilpotent => compare(report, "cograph", k < 3, "nilpotent rule"),
        TheoremId::T4_1 if report.nilpotent => compare(report, "at_free", k < 3, "nilpotent rule"),
        TheoremId::T4_2 if k == 3 => against_criterion(report, "at_free"),
        TheoremId::T4_3 => match g.kind() {
            GroupKind::Symmetric(n) => {
                compare(report, "at_free", criterion_symmetric_at_free(*n), "degree rule")
            }
            _ => Outcome::Skipped,
        },
        TheoremId::P1 if g.order() <= LAW_CHECK_LIMIT.min(cap) => match CoprimeGraph::build(g, cap) {
            Ok(cg) => {
                let laws = check_laws(&cg);
                let exceptions = laws.identity_exceptions;
                let outcome = if laws.is_clean() {
                    Outcome::Holds
                } else {
                    Outcome::Violated(format!("{laws:?}"), None)
                };
                return (outcome, exceptions);
            }
            Err(GroupError::TooLarge { .. }) | Err(GroupError::Unsupported(_)) => Outcome::Skipped,
            Err(e) => Outcome::Violated(e.to_string(), None),
        },
        TheoremId::P2 => proposition(Proposition::P2, g),
        TheoremId::P3 => proposition(Proposition::P3, g),
        TheoremId::P4 => proposition(Proposition::P4, g),
        _ => Outcome::Skipped,
    };
    (outcome, 0)
}

/// The two readings of the dihedral group named `D_30`: order 30 and order 60.
/// Each entry is the group and its asteroidal triple, if any.
pub fn dihedral_example_readings() -> Vec<(GroupHandle, Option<Witness>)> {
    [30, 60]
        .into_iter()
        .map(|n| {
            let g = GroupHandle::dihedral(n).expect("even order");
            let at = detect::find_asteroidal_triple(&PrimeSetGraph::build(&g));
            (g, at)
        })
        .collect()
}

fn dihedral_note() -> String {
    let parts: Vec<String> = dihedral_example_readings()
        .into_iter()
        .map(|(g, at)| match at {
            Some(w) => format!("{g} has an AT with orders {:?}", w.orders),
            None => format!("{g} is AT-free"),
        })
        .collect();
    format!("dihedral readings of the D_30 example: {}", parts.join("; "))
}

/// Classifies every group of `universe` and checks each requested theorem.
/// Per-group failures are recorded as violations; the run never aborts.
pub fn run_theorem_harness(
    universe: &Universe,
    theorems: &[TheoremId],
    opts: &HarnessOptions,
) -> Result<HarnessRun, GroupError> {
    let groups = universe.groups();
    if groups.is_empty() {
        return Err(GroupError::InvalidParameter("empty universe".into()));
    }
    let mut theorems = theorems.to_vec();
    theorems.sort_unstable();
    theorems.dedup();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| GroupError::InvalidParameter(format!("thread pool: {e}")))?;
    let cap = opts.classify.order_cap;
    let per_group: Vec<(ClassReport, Vec<(Outcome, usize)>)> = pool.install(|| {
        groups
            .par_iter()
            .map(|g| {
                let report = classify_group(g, &opts.classify);
                let outcomes = theorems.iter().map(|&t| evaluate(t, g, &report, cap)).collect();
                (report, outcomes)
            })
            .collect()
    });

    let universe_text = universe.describe();
    let mut results: Vec<TheoremResult> = theorems
        .iter()
        .map(|&t| TheoremResult {
            theorem: t,
            statement: t.statement(),
            universe: universe_text.clone(),
            checked: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        })
        .collect();
    let mut identity_exceptions = 0;
    for (report, outcomes) in &per_group {
        for (result, (outcome, exceptions)) in results.iter_mut().zip(outcomes) {
            identity_exceptions += exceptions;
            match outcome {
                Outcome::Skipped => {}
                Outcome::Holds => result.checked += 1,
                Outcome::Violated(detail, witness) => {
                    result.checked += 1;
                    result.violations.push(Violation {
                        group: report.group.clone(),
                        detail: detail.clone(),
                        witness: witness.clone(),
                    });
                }
            }
        }
    }
    for result in &mut results {
        match result.theorem {
            TheoremId::P1 => result.notes.push(format!(
                "containment law checked on non-identity pairs; it fails for x = e in {identity_exceptions} ordered pairs"
            )),
            TheoremId::T4_2 => result.notes.push(dihedral_note()),
            TheoremId::T3_5 => result
                .notes
                .push("criterion requires p1, p2, p3 pairwise distinct".into()),
            _ => {}
        }
    }
    Ok(HarnessRun { reports: per_group.into_iter().map(|(r, _)| r).collect(), results })
}
