use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::arith::PrimeSet;
use crate::coprime::{CoprimeGraph, PrimeSetGraph, DEFAULT_ORDER_CAP};
use crate::detect::{self, Host, SplitPartition, Witness};
use crate::group::GroupHandle;

use super::{
    at_free_from_facts, c4_free_from_facts, cograph_from_facts, criterion_claw_free,
    criterion_k14_free, split_from_facts, AtRule,
    GroupFacts,
};

/// Class names in report order.
pub const CLASS_NAMES: [&str; 6] = ["c4_free", "claw_free", "k14_free", "cograph", "split", "at_free"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Run detectors on the element graph instead of the prime-set quotient.
    pub full_graph: bool,
    /// Element cap for the element graph.
    pub order_cap: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { full_graph: false, order_cap: DEFAULT_ORDER_CAP }
    }
}

/// Detector verdict next to the group-level criterion for one class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassFlag {
    pub detector: bool,
    /// `None` where no criterion is known.
    pub criterion: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<SplitPartition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ClassFlag {
    fn new(d: detect::Decision, criterion: Option<bool>) -> Self {
        ClassFlag { detector: d.holds, criterion, witness: d.witness, partition: None, note: None }
    }

    pub fn agrees(&self) -> Option<bool> {
        self.criterion.map(|c| c == self.detector)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub group: String,
    pub order: u64,
    pub primes: PrimeSet,
    pub nilpotent: bool,
    /// `"reduced"` or `"full"`.
    pub graph: &'static str,
    pub flags: BTreeMap<String, ClassFlag>,
    /// `detector == criterion` for every class with a criterion.
    pub agreements: BTreeMap<String, bool>,
    pub failed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing_ms: BTreeMap<String, f64>,
}

impl ClassReport {
    pub fn flag(&self, class: &str) -> Option<&ClassFlag> {
        self.flags.get(class)
    }

    /// Classes where detector and criterion differ.
    pub fn disagreements(&self) -> Vec<&str> {
        self.agreements.iter().filter(|(_, &ok)| !ok).map(|(c, _)| c.as_str()).collect()
    }

    fn record(&mut self, name: &str, start: Instant, flag: ClassFlag) {
        self.timing_ms.insert(name.to_owned(), start.elapsed().as_secs_f64() * 1e3);
        if let Some(ok) = flag.agrees() {
            self.agreements.insert(name.to_owned(), ok);
            self.failed |= !ok;
        }
        self.flags.insert(name.to_owned(), flag);
    }
}

fn at_rule_note(rule: AtRule) -> &'static str {
    match rule {
        AtRule::FewPrimes => "at most two primes",
        AtRule::Nilpotent => "nilpotent",
        AtRule::ThreePrimes => "three primes: pairwise products",
        AtRule::OpenProblem => "no criterion known for four or more primes (open problem); detector only",
    }
}

/// Runs every detector and criterion on `g`. Failures are recorded in the
/// report rather than returned.
pub fn classify_group(g: &GroupHandle, opts: &ClassifyOptions) -> ClassReport {
    let facts = GroupFacts::of(g);
    let mut report = ClassReport {
        group: facts.spec.clone(),
        order: facts.order,
        primes: facts.primes.clone(),
        nilpotent: facts.nilpotent,
        graph: if opts.full_graph { "full" } else { "reduced" },
        flags: BTreeMap::new(),
        agreements: BTreeMap::new(),
        failed: false,
        error: None,
        timing_ms: BTreeMap::new(),
    };

    let full;
    let reduced;
    let start = Instant::now();
    let host: Host<'_> = if opts.full_graph {
        match CoprimeGraph::build(g, opts.order_cap) {
            Ok(cg) => {
                full = cg;
                Host::Elements(&full)
            }
            Err(e) => {
                report.error = Some(e.to_string());
                report.failed = true;
                return report;
            }
        }
    } else {
        reduced = PrimeSetGraph::from_spectrum(&facts.spectrum);
        Host::Classes(&reduced)
    };
    report.timing_ms.insert("build".into(), start.elapsed().as_secs_f64() * 1e3);

    let t = Instant::now();
    let flag = ClassFlag::new(detect::is_c4_free(host), Some(c4_free_from_facts(&facts)));
    report.record("c4_free", t, flag);

    let t = Instant::now();
    let flag = ClassFlag::new(detect::is_star_free(host, 3), Some(criterion_claw_free(g)));
    report.record("claw_free", t, flag);

    let t = Instant::now();
    let flag = ClassFlag::new(detect::is_star_free(host, 4), Some(criterion_k14_free(g)));
    report.record("k14_free", t, flag);

    let t = Instant::now();
    let flag = ClassFlag::new(detect::is_cograph(host), Some(cograph_from_facts(&facts)));
    report.record("cograph", t, flag);

    let t = Instant::now();
    match detect::is_split(host) {
        Ok(d) => {
            let criterion = split_from_facts(&facts);
            assert_eq!(criterion, c4_free_from_facts(&facts));
            let flag = ClassFlag {
                detector: d.holds,
                criterion: Some(criterion),
                witness: d.witness,
                partition: d.partition,
                note: None,
            };
            report.record("split", t, flag);
        }
        Err(e) => {
            report.error = Some(e.to_string());
            report.failed = true;
        }
    }

    let t = Instant::now();
    let at = at_free_from_facts(&facts);
    let mut flag = ClassFlag::new(detect::is_at_free(host), at.at_free);
    flag.note = Some(at_rule_note(at.rule).to_owned());
    report.record("at_free", t, flag);

    report
}
