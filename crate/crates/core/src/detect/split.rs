//! Split-graph recognition by two independent routes that must agree:
//! absence of induced `2K2`, `C4` and `C5`, and the Hammer–Simeone
//! degree-sequence identity. On a quotient the degree sequence is handled
//! run-length encoded, so groups with billions of elements cost nothing extra.

use serde::Serialize;

use crate::coprime::PrimeSetGraph;
use crate::graph::SimpleGraph;

use super::{find_kind, DetectError, Host, Witness, WitnessKind};

/// A clique plus independent-set partition of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SplitPartition {
    Vertices { clique: Vec<usize>, independent: Vec<usize> },
    Classes { clique: Vec<ClassSplit>, independent: Vec<ClassSplit> },
}

/// `count` elements of `class`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassSplit {
    pub class: usize,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitDecision {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub partition: Option<SplitPartition>,
}

/// Hammer–Simeone on a nonincreasing degree sequence given as `(degree, count)` runs.
/// Returns `(is_split, m)` where `m` is the number of leading vertices
/// with `d_i >= i - 1`.
fn hammer_simeone(runs: &[(u64, u64)]) -> (bool, u128) {
    let mut m: u128 = 0;
    let mut pos: u128 = 0;
    for &(d, c) in runs {
        let (d, c) = (d as u128, c as u128);
        // positions pos+1 ..= pos+c satisfy d >= i - 1 iff i <= d + 1
        let last_ok = (pos + c).min(d + 1);
        if last_ok > pos {
            m = last_ok;
        }
        pos += c;
        if last_ok < pos {
            break;
        }
    }
    let mut head: u128 = 0;
    let mut tail: u128 = 0;
    let mut pos: u128 = 0;
    for &(d, c) in runs {
        let (d, c) = (d as u128, c as u128);
        let in_head = c.min(m.saturating_sub(pos));
        head += in_head * d;
        tail += (c - in_head) * d;
        pos += c;
    }
    (head == m * m.saturating_sub(1) + tail, m)
}

fn vertex_degree_route(g: &SimpleGraph) -> (bool, Option<SplitPartition>) {
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut runs: Vec<(u64, u64)> = Vec::new();
    for &v in &order {
        let d = g.degree(v) as u64;
        match runs.last_mut() {
            Some((rd, c)) if *rd == d => *c += 1,
            _ => runs.push((d, 1)),
        }
    }
    let (split, m) = hammer_simeone(&runs);
    if !split {
        return (false, None);
    }
    let m = m as usize;
    let mut clique = order[..m].to_vec();
    let mut independent = order[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    (true, Some(SplitPartition::Vertices { clique, independent }))
}

fn class_degree_route(r: &PrimeSetGraph) -> (bool, Option<SplitPartition>) {
    let mut order: Vec<usize> = (0..r.len()).collect();
    order.sort_by_key(|&c| (std::cmp::Reverse(r.lifted_degree(c)), c));
    let mut runs: Vec<(u64, u64)> = Vec::new();
    for &c in &order {
        let d = r.lifted_degree(c);
        let k = r.classes()[c].multiplicity;
        match runs.last_mut() {
            Some((rd, cnt)) if *rd == d => *cnt += k,
            _ => runs.push((d, k)),
        }
    }
    let (split, m) = hammer_simeone(&runs);
    if !split {
        return (false, None);
    }
    let mut remaining = m;
    let (mut clique, mut independent) = (Vec::new(), Vec::new());
    for &c in &order {
        let k = r.classes()[c].multiplicity as u128;
        let take = k.min(remaining);
        remaining -= take;
        if take > 0 {
            clique.push(ClassSplit { class: c, count: take as u64 });
        }
        if k > take {
            independent.push(ClassSplit { class: c, count: (k - take) as u64 });
        }
    }
    clique.sort_by_key(|s| s.class);
    independent.sort_by_key(|s| s.class);
    (true, Some(SplitPartition::Classes { clique, independent }))
}

fn partition_is_valid(host: Host<'_>, p: &SplitPartition) -> bool {
    match (host, p) {
        (Host::Classes(r), SplitPartition::Classes { clique, independent }) => {
            let clique_ok = clique.iter().all(|s| s.count == 1)
                && clique.iter().enumerate().all(|(i, a)| {
                    clique[i + 1..].iter().all(|b| r.lifts_adjacent(a.class, b.class))
                });
            let independent_ok = independent.iter().all(|s| s.count == 1 || r.classes()[s.class].is_coclique())
                && independent.iter().enumerate().all(|(i, a)| {
                    independent[i + 1..].iter().all(|b| !r.lifts_adjacent(a.class, b.class))
                });
            clique_ok && independent_ok
        }
        (Host::Plain(_) | Host::Elements(_), SplitPartition::Vertices { clique, independent }) => {
            let g = match host {
                Host::Plain(g) => g,
                Host::Elements(cg) => cg.graph(),
                Host::Classes(_) => unreachable!(),
            };
            clique.iter().enumerate().all(|(i, &a)| clique[i + 1..].iter().all(|&b| g.has_edge(a, b)))
                && independent
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| independent[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
        }
        _ => false,
    }
}

/// Decides splitness both ways. A mismatch between the routes is reported
/// as [`DetectError::InternalDisagreement`].
pub fn is_split<'a>(host: impl Into<Host<'a>>) -> Result<SplitDecision, DetectError> {
    let host = host.into();
    let witness = [WitnessKind::InducedC4, WitnessKind::TwoK2, WitnessKind::C5]
        .into_iter()
        .find_map(|kind| find_kind(host, kind));
    let forbidden_free = witness.is_none();

    let (degree_split, partition) = match host {
        Host::Plain(g) => vertex_degree_route(g),
        Host::Elements(cg) => vertex_degree_route(cg.graph()),
        Host::Classes(r) => class_degree_route(r),
    };
    if forbidden_free != degree_split {
        return Err(DetectError::InternalDisagreement {
            forbidden: forbidden_free,
            degree: degree_split,
        });
    }
    if let Some(p) = &partition {
        if !partition_is_valid(host, p) {
            return Err(DetectError::InvalidPartition);
        }
    }
    Ok(SplitDecision { holds: forbidden_free, witness, partition })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hammer_simeone_runs() {
        // star K_{1,3}: degrees 3,1,1,1
        assert_eq!(hammer_simeone(&[(3, 1), (1, 3)]), (true, 2));
        // C4: 2,2,2,2
        assert!(!hammer_simeone(&[(2, 4)]).0);
        // 2K2: 1,1,1,1
        assert!(!hammer_simeone(&[(1, 4)]).0);
        // K3: 2,2,2
        assert_eq!(hammer_simeone(&[(2, 3)]), (true, 3));
        // single vertex
        assert_eq!(hammer_simeone(&[(0, 1)]), (true, 1));
        // empty graph on 3 vertices
        assert_eq!(hammer_simeone(&[(0, 3)]), (true, 1));
    }
}
