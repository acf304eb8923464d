//! Embedding an arbitrary graph `H` as an induced subgraph of `Γ(Z_k)`.
//!
//! Each non-edge `α` of `H` gets its own prime `f(α)`, which divides the
//! orders of both endpoints and so makes them non-adjacent. Adjacent vertices
//! share no such prime. [`plan_embedding`] additionally gives every vertex a
//! fresh prime `q_v`, which makes all orders distinct; [`paper_literal_plan`]
//! reserves fresh primes for full-degree vertices only, and can then ask for
//! more elements of one order than `Z_k` has.

mod input;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::primes;
use crate::graph::SimpleGraph;

pub use input::{parse_dot, parse_edge_list, ParsedGraph};

/// Default cap on the number of vertices of `H`.
pub const DEFAULT_VERTEX_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("vertices {} and {} both need an element of order {order}, but Z_k has only {available}", pair.0, pair.1)]
pub struct CollisionError {
    pub pair: (usize, usize),
    pub order: BigUint,
    pub available: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("graph has {vertices} vertices; the cap is {cap}")]
    CapExceeded { vertices: usize, cap: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error(transparent)]
    Collision(#[from] CollisionError),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Primes and target orders for an embedding of `H` into `Γ(Z_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingPlan {
    pub n: usize,
    /// Product of all allocated primes.
    pub k: BigUint,
    /// Prime factors (ascending) of the order assigned to each vertex.
    pub assignment: Vec<Vec<u64>>,
    /// Non-edges `(u, v)`, `u < v`, in lexicographic order, with their primes.
    pub nonedge_primes: Vec<((usize, usize), u64)>,
    /// Fresh prime of each vertex; the literal plan only has them on `W`.
    pub vertex_primes: Vec<Option<u64>>,
    pub s: usize,
    pub r: usize,
    /// Vertices of degree `n - 1`.
    pub w_set: Vec<usize>,
    pub literal: bool,
}

impl EmbeddingPlan {
    pub fn order(&self, v: usize) -> BigUint {
        self.assignment[v].iter().map(|&p| BigUint::from(p)).product()
    }

    /// All allocated primes, ascending.
    pub fn primes(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.nonedge_primes.iter().map(|&(_, p)| p).collect();
        out.extend(self.vertex_primes.iter().flatten());
        out.sort_unstable();
        out
    }

    /// `{k, assignment, primes, ...}` with big numbers as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Vertex {
            vertex: usize,
            order: String,
            primes: Vec<u64>,
        }
        #[derive(Serialize)]
        struct NonEdge {
            pair: (usize, usize),
            prime: u64,
        }
        #[derive(Serialize)]
        struct PlanJson {
            k: String,
            construction: &'static str,
            assignment: Vec<Vertex>,
            primes: Vec<u64>,
            nonedge_primes: Vec<NonEdge>,
            vertex_primes: BTreeMap<usize, u64>,
            s: usize,
            r: usize,
            w_set: Vec<usize>,
        }
        let json = PlanJson {
            k: self.k.to_string(),
            construction: if self.literal { "literal" } else { "repaired" },
            assignment: (0..self.n)
                .map(|v| Vertex { vertex: v, order: self.order(v).to_string(), primes: self.assignment[v].clone() })
                .collect(),
            primes: self.primes(),
            nonedge_primes: self.nonedge_primes.iter().map(|&(pair, prime)| NonEdge { pair, prime }).collect(),
            vertex_primes: self
                .vertex_primes
                .iter()
                .enumerate()
                .filter_map(|(v, p)| p.map(|p| (v, p)))
                .collect(),
            s: self.s,
            r: self.r,
            w_set: self.w_set.clone(),
        };
        serde_json::to_value(json).expect("plan serializes")
    }
}

fn check_size(h: &SimpleGraph, cap: usize) -> Result<(), EmbedError> {
    if h.is_empty() {
        return Err(EmbedError::Empty);
    }
    if h.len() > cap {
        return Err(EmbedError::CapExceeded { vertices: h.len(), cap });
    }
    Ok(())
}

/// Non-edges in lexicographic order, the full-degree vertices, and the
/// per-vertex non-edge primes, with primes allocated from 2 upwards.
struct Skeleton {
    nonedge_primes: Vec<((usize, usize), u64)>,
    w_set: Vec<usize>,
    per_vertex: Vec<Vec<u64>>,
}

fn skeleton(h: &SimpleGraph, primes: &mut impl Iterator<Item = u64>) -> Skeleton {
    let n = h.len();
    let mut nonedge_primes = Vec::new();
    let mut per_vertex = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            if !h.has_edge(u, v) {
                let p = primes.next().expect("infinitely many primes");
                nonedge_primes.push(((u, v), p));
                per_vertex[u].push(p);
                per_vertex[v].push(p);
            }
        }
    }
    let w_set = (0..n).filter(|&v| h.degree(v) + 1 == n).collect();
    Skeleton { nonedge_primes, w_set, per_vertex }
}

fn product(ps: impl IntoIterator<Item = u64>) -> BigUint {
    ps.into_iter().map(BigUint::from).product()
}

/// Repaired construction: every vertex gets a fresh prime, so orders are
/// pairwise distinct and one element of each order is always available.
pub fn plan_embedding(h: &SimpleGraph) -> Result<EmbeddingPlan, EmbedError> {
    plan_embedding_with_cap(h, DEFAULT_VERTEX_CAP)
}

pub fn plan_embedding_with_cap(h: &SimpleGraph, cap: usize) -> Result<EmbeddingPlan, EmbedError> {
    check_size(h, cap)?;
    let mut ps = primes();
    let Skeleton { nonedge_primes, w_set, mut per_vertex } = skeleton(h, &mut ps);
    let vertex_primes: Vec<Option<u64>> = (0..h.len()).map(|_| ps.next()).collect();
    for (v, q) in vertex_primes.iter().enumerate() {
        per_vertex[v].push(q.expect("fresh prime"));
        per_vertex[v].sort_unstable();
    }
    let k = product(nonedge_primes.iter().map(|&(_, p)| p).chain(vertex_primes.iter().flatten().copied()));
    Ok(EmbeddingPlan {
        n: h.len(),
        k,
        s: nonedge_primes.len(),
        r: w_set.len(),
        assignment: per_vertex,
        nonedge_primes,
        vertex_primes,
        w_set,
        literal: false,
    })
}

fn phi_squarefree(ps: &[u64]) -> BigUint {
    product(ps.iter().map(|&p| p - 1))
}

/// The construction with fresh primes on full-degree vertices only. Fails
/// when more vertices share an order than `Z_k` has elements of that order.
pub fn paper_literal_plan(h: &SimpleGraph) -> Result<EmbeddingPlan, EmbedError> {
    check_size(h, DEFAULT_VERTEX_CAP)?;
    let mut ps = primes();
    let Skeleton { nonedge_primes, w_set, mut per_vertex } = skeleton(h, &mut ps);
    let mut vertex_primes = vec![None; h.len()];
    for &u in &w_set {
        let q = ps.next().expect("infinitely many primes");
        vertex_primes[u] = Some(q);
        per_vertex[u].push(q);
    }
    for f in &mut per_vertex {
        f.sort_unstable();
    }
    let mut demand: BTreeMap<&[u64], Vec<usize>> = BTreeMap::new();
    for (v, f) in per_vertex.iter().enumerate() {
        demand.entry(f.as_slice()).or_default().push(v);
    }
    // report the collision with the smallest vertex pair
    let collision = demand
        .iter()
        .filter_map(|(f, vs)| {
            let available = phi_squarefree(f);
            (BigUint::from(vs.len()) > available).then(|| CollisionError {
                pair: (vs[0], vs[1]),
                order: product(f.iter().copied()),
                available,
            })
        })
        .min_by_key(|c| c.pair);
    if let Some(c) = collision {
        return Err(c.into());
    }
    let k = product(nonedge_primes.iter().map(|&(_, p)| p).chain(vertex_primes.iter().flatten().copied()));
    Ok(EmbeddingPlan {
        n: h.len(),
        k,
        s: nonedge_primes.len(),
        r: w_set.len(),
        assignment: per_vertex,
        nonedge_primes,
        vertex_primes,
        w_set,
        literal: true,
    })
}

/// Result of checking a plan against `H` inside `Z_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingCheck {
    /// The chosen element `x_v` of `Z_k` for each vertex.
    pub elements: Vec<BigUint>,
    /// The order of each chosen element, computed as `k / gcd(k, x_v)`.
    pub orders: Vec<BigUint>,
    /// Vertex pairs whose adjacency in `Γ(Z_k)` differs from `H`.
    pub mismatches: Vec<(usize, usize)>,
    /// Other defects: malformed plan, repeated elements, wrong orders.
    pub problems: Vec<String>,
}

impl EmbeddingCheck {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.problems.is_empty()
    }
}

fn order_in(k: &BigUint, x: &BigUint) -> BigUint {
    k / k.gcd(x)
}

/// Picks one element of each assigned order in `Z_k` (distinct elements for
/// repeated orders) and compares the induced co-prime graph with `H`.
pub fn verify_embedding(h: &SimpleGraph, plan: &EmbeddingPlan) -> EmbeddingCheck {
    let mut check = EmbeddingCheck { elements: vec![], orders: vec![], mismatches: vec![], problems: vec![] };
    if plan.n != h.len() || plan.assignment.len() != h.len() {
        check.problems.push(format!("plan covers {} vertices, graph has {}", plan.assignment.len(), h.len()));
        return check;
    }
    let k = &plan.k;
    // elements of order d in Z_k are (k/d)·t with t a unit mod d; repeated
    // orders take successive units
    let mut used: BTreeMap<BigUint, BigUint> = BTreeMap::new();
    for v in 0..h.len() {
        let d = plan.order(v);
        if d <= BigUint::one() || !(k % &d).is_zero() {
            check.problems.push(format!("order {d} of vertex {v} does not divide k or is 1"));
            check.elements.push(BigUint::zero());
            check.orders.push(BigUint::one());
            continue;
        }
        let next = used.entry(d.clone()).or_insert_with(BigUint::zero);
        let mut t = &*next + 1u32;
        while !t.gcd(&d).is_one() {
            t += 1u32;
        }
        *next = t.clone();
        if t >= d {
            check.problems.push(format!("no unused element of order {d} left for vertex {v}"));
        }
        let x = (k / &d) * (t % &d);
        check.orders.push(order_in(k, &x));
        check.elements.push(x);
    }
    for v in 0..h.len() {
        if check.orders[v] != plan.order(v) {
            check.problems.push(format!("vertex {v}: element has order {}, plan says {}", check.orders[v], plan.order(v)));
        }
        for u in 0..v {
            if check.elements[u] == check.elements[v] {
                check.problems.push(format!("vertices {u} and {v} map to the same element"));
            }
            let adjacent = check.orders[u].gcd(&check.orders[v]).is_one();
            if adjacent != h.has_edge(u, v) {
                check.mismatches.push((u, v));
            }
        }
    }
    check
}

/// DOT rendering of the induced subgraph on the chosen elements.
pub fn embedding_to_dot(h: &SimpleGraph, check: &EmbeddingCheck, names: Option<&[String]>) -> String {
    let mut out = String::from("graph embedding {\n");
    for v in 0..h.len() {
        let name = names.map_or_else(|| v.to_string(), |n| n[v].clone());
        let _ = writeln!(out, "  {v} [label=\"{name}: x={} (o={})\"];", check.elements[v], check.orders[v]);
    }
    for v in 0..h.len() {
        for u in 0..v {
            if check.orders[u].gcd(&check.orders[v]).is_one() {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}
