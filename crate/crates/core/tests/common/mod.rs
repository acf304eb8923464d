//! Shared corpus builders and brute-force oracles for the integration tests.
//! The oracles deliberately avoid the library's own search code.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};
use std::path::PathBuf;

use coprime_core::classify::{Family, Universe};
use coprime_core::group::{CayleyTable, CayleyTableJson};
use coprime_core::{GroupHandle, SimpleGraph};
use itertools::Itertools;

pub const TABLE_FIXTURES: [&str; 5] = [
    "q8.json",
    "heisenberg27.json",
    "frobenius20.json",
    "frobenius21.json",
    "frobenius21_x_z5.json",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture_table(name: &str) -> GroupHandle {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    let json: CayleyTableJson = serde_json::from_str(&text).expect("fixture parses");
    GroupHandle::from_json(&json).expect("fixture is a group")
}

pub fn fixture_tables() -> Vec<GroupHandle> {
    TABLE_FIXTURES.iter().map(|n| fixture_table(n)).collect()
}

pub fn s3z5() -> GroupHandle {
    GroupHandle::direct_product(vec![GroupHandle::symmetric(3).unwrap(), GroupHandle::cyclic(5).unwrap()])
        .unwrap()
}

/// The default corpus plus the Cayley-table fixtures.
pub fn corpus() -> Vec<GroupHandle> {
    let mut u = Universe::default_corpus();
    for t in fixture_tables() {
        u = u.with_group(t);
    }
    u.groups()
}

/// Corpus members of order at most `bound`.
pub fn corpus_upto(bound: u64) -> Vec<GroupHandle> {
    corpus().into_iter().filter(|g| g.order() <= bound).collect()
}

pub fn universe_with_tables() -> Universe {
    let mut u = Universe::default_corpus();
    for t in fixture_tables() {
        u = u.with_group(t);
    }
    u
}

pub fn small_universe(bound: u64) -> Universe {
    let mut u = Universe::new();
    for f in Family::ALL {
        u = u.with_family(f, if f.bounds_degree() { 5 } else { bound });
    }
    u
}

/// Element orders by repeated multiplication in a table.
pub fn table_orders(t: &CayleyTable) -> Vec<u64> {
    (0..t.len())
        .map(|a| {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = t.mul(x, a);
                k += 1;
            }
            k
        })
        .collect()
}

pub fn spectrum_of(orders: &[u64]) -> BTreeMap<u64, u64> {
    let mut m = BTreeMap::new();
    for &o in orders {
        *m.entry(o).or_insert(0) += 1;
    }
    m
}

fn inverse(t: &CayleyTable, a: usize) -> usize {
    (0..t.len()).find(|&b| t.mul(a, b) == 0).expect("inverse exists")
}

/// Nilpotency via the upper central series `Z_0 = 1 ≤ Z_1 ≤ ...`:
/// `x ∈ Z_{i+1}` iff the commutator `[x, g]` lies in `Z_i` for all `g`.
pub fn nilpotent_by_upper_central_series(t: &CayleyTable) -> bool {
    let n = t.len();
    let inv: Vec<usize> = (0..n).map(|a| inverse(t, a)).collect();
    let mut z = vec![false; n];
    z[0] = true;
    loop {
        let next: Vec<bool> = (0..n)
            .map(|x| {
                (0..n).all(|g| {
                    let comm = t.mul(t.mul(inv[x], inv[g]), t.mul(x, g));
                    z[comm]
                })
            })
            .collect();
        if next.iter().all(|&b| b) {
            return true;
        }
        if next == z {
            return false;
        }
        z = next;
    }
}

pub fn center_by_table(t: &CayleyTable) -> Vec<usize> {
    (0..t.len()).filter(|&z| (0..t.len()).all(|x| t.mul(z, x) == t.mul(x, z))).collect()
}

/// Brute-force induced-subgraph test: tries every injective placement.
pub fn brute_has_induced(g: &SimpleGraph, pattern: &SimpleGraph) -> bool {
    let k = pattern.len();
    if k > g.len() {
        return false;
    }
    (0..g.len()).permutations(k).any(|img| {
        (0..k).all(|i| (i + 1..k).all(|j| g.has_edge(img[i], img[j]) == pattern.has_edge(i, j)))
    })
}

/// Whether `a` reaches `b` through vertices outside `N[c]`.
fn reach_avoiding(g: &SimpleGraph, a: usize, b: usize, c: usize) -> bool {
    let banned = |v: usize| v == c || g.has_edge(v, c);
    if banned(a) || banned(b) {
        return false;
    }
    let mut seen = vec![false; g.len()];
    let mut q = VecDeque::from([a]);
    seen[a] = true;
    while let Some(u) = q.pop_front() {
        if u == b {
            return true;
        }
        let next: Vec<usize> = (0..g.len()).filter(|&w| g.has_edge(u, w) && !seen[w] && !banned(w)).collect();
        for w in next {
            seen[w] = true;
            q.push_back(w);
        }
    }
    false
}

pub fn brute_has_at(g: &SimpleGraph) -> bool {
    (0..g.len()).tuple_combinations().any(|(x, y, z)| {
        !g.has_edge(x, y)
            && !g.has_edge(y, z)
            && !g.has_edge(x, z)
            && reach_avoiding(g, x, y, z)
            && reach_avoiding(g, y, z, x)
            && reach_avoiding(g, x, z, y)
    })
}

/// Graph on `n` vertices whose edges are the set bits of `mask` over the
/// pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let pairs = (0..n).tuple_combinations::<(usize, usize)>();
    SimpleGraph::from_edges(n, pairs.enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e))
}

pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> SimpleGraph {
    let edges: Vec<(usize, usize)> =
        (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    SimpleGraph::from_edges(n, edges)
}
