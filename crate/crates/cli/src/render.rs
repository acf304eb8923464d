//! Human-readable tables. JSON output is the stable interface; these are not.

use std::fmt::Write;

use coprime_core::classify::{ClassReport, HarnessRun, TheoremId, CLASS_NAMES};
use coprime_core::detect::{Witness, WitnessKind, WitnessVertex};
use coprime_core::{CoprimeGraph, PrimeSetGraph};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn witness(w: &Witness) -> String {
    let kind = match &w.kind {
        WitnessKind::InducedC4 => "C4".to_string(),
        WitnessKind::Claw { s } => format!("K1,{s}"),
        WitnessKind::P4 => "P4".into(),
        WitnessKind::P3 => "P3".into(),
        WitnessKind::TwoK2 => "2K2".into(),
        WitnessKind::C5 => "C5".into(),
        WitnessKind::AsteroidalTriple => "AT".into(),
        WitnessKind::InducedPattern { .. } => "pattern".into(),
    };
    let vs: Vec<String> = w
        .vertices
        .iter()
        .map(|v| match v {
            WitnessVertex::Vertex(id) => id.to_string(),
            WitnessVertex::Class { class, copy } => format!("c{class}#{copy}"),
        })
        .collect();
    let mut out = format!("{kind} [{}]", vs.join(" "));
    if !w.orders.is_empty() {
        let os: Vec<String> = w.orders.iter().map(u64::to_string).collect();
        write!(out, " orders {}", os.join(",")).unwrap();
    }
    out
}

pub fn coprime_table(g: &CoprimeGraph) -> String {
    let mut out = String::from("vertex  order  degree\n");
    for v in 0..g.len() {
        writeln!(out, "{v:>6}  {:>5}  {:>6}", g.orders()[v], g.graph().degree(v)).unwrap();
    }
    writeln!(out, "{} vertices, {} edges", g.len(), g.graph().edge_count()).unwrap();
    out
}

pub fn reduced_table(r: &PrimeSetGraph) -> String {
    let mut out = String::from("class  primes          multiplicity  degree  orders\n");
    for (c, class) in r.classes().iter().enumerate() {
        let os: Vec<String> = class.orders.iter().map(u64::to_string).collect();
        writeln!(
            out,
            "{:>5}  {:<14}  {:>12}  {:>6}  {}",
            format!("c{c}"),
            class.primes.to_string(),
            class.multiplicity,
            r.lifted_degree(c),
            os.join(",")
        )
        .unwrap();
    }
    writeln!(out, "{} classes, {} elements", r.len(), r.total()).unwrap();
    out
}

pub fn report_table(r: &ClassReport) -> String {
    let mut out = String::new();
    writeln!(out, "group      {}", r.group).unwrap();
    writeln!(out, "order      {}", r.order).unwrap();
    writeln!(out, "primes     {}", r.primes).unwrap();
    writeln!(out, "nilpotent  {}", r.nilpotent).unwrap();
    writeln!(out, "graph      {}", r.graph).unwrap();
    if let Some(e) = &r.error {
        writeln!(out, "error      {e}").unwrap();
    }
    writeln!(out).unwrap();
    writeln!(out, "{:<10} {:<9} {:<10} {:<6} certificate", "class", "detector", "criterion", "agree").unwrap();
    for name in CLASS_NAMES {
        let Some(f) = r.flag(name) else { continue };
        let criterion = f.criterion.map_or("unknown".to_string(), |c| c.to_string());
        let agree = f.agrees().map_or("-", yes_no);
        let cert = match (&f.witness, &f.partition) {
            (Some(w), _) => witness(w),
            (None, Some(p)) => format!("partition {}", serde_json::to_string(p).unwrap_or_default()),
            (None, None) => String::new(),
        };
        let line = format!("{name:<10} {:<9} {criterion:<10} {agree:<6} {cert}", f.detector);
        writeln!(out, "{}", line.trim_end()).unwrap();
        if let Some(note) = &f.note {
            writeln!(out, "{:<10} note: {note}", "").unwrap();
        }
    }
    writeln!(out).unwrap();
    let bad = r.disagreements();
    if bad.is_empty() && r.error.is_none() {
        writeln!(out, "status     ok").unwrap();
    } else {
        writeln!(out, "status     FAILED {}", bad.join(",")).unwrap();
    }
    out
}

pub fn harness_table(run: &HarnessRun) -> String {
    let mut out = String::new();
    writeln!(out, "{} groups", run.reports.len()).unwrap();
    if let Some(first) = run.results.first() {
        writeln!(out, "universe: {}", first.universe).unwrap();
    }
    writeln!(out).unwrap();
    writeln!(out, "{:<7} {:>8} {:>10}  statement", "theorem", "checked", "violations").unwrap();
    for t in &run.results {
        writeln!(out, "{:<7} {:>8} {:>10}  {}", t.theorem.as_str(), t.checked, t.violations.len(), t.statement)
            .unwrap();
        for v in &t.violations {
            let w = v.witness.as_ref().map(witness).unwrap_or_default();
            writeln!(out, "        ! {}: {} {w}", v.group, v.detail).unwrap();
        }
        for n in &t.notes {
            writeln!(out, "        note: {n}").unwrap();
        }
        if t.theorem == TheoremId::T4_3 {
            for r in run.reports.iter().filter(|r| r.group.starts_with("S(") && !r.group.contains('x')) {
                let Some(f) = r.flag("at_free") else { continue };
                match &f.witness {
                    Some(w) => writeln!(out, "        {}: {}", r.group, witness(w)).unwrap(),
                    None => writeln!(out, "        {}: AT-free", r.group).unwrap(),
                }
            }
        }
    }
    writeln!(out).unwrap();
    let failed = run.results.iter().filter(|t| !t.upheld()).count();
    if failed == 0 {
        writeln!(out, "all {} checks upheld", run.results.len()).unwrap();
    } else {
        writeln!(out, "{failed} of {} checks have violations", run.results.len()).unwrap();
    }
    out
}
