//! Certificate-producing recognizers for forbidden induced subgraphs and
//! asteroidal triples.
//!
//! Every recognizer runs on a [`Host`]: a plain graph, a full co-prime graph,
//! or a prime-set quotient. On a quotient the search runs on a bounded
//! expansion in which a class of multiplicity `m` contributes
//! `min(m, copies)` pairwise non-adjacent twins. Twins are interchangeable,
//! so a pattern on `k` vertices occurs in `Γ(G)` iff it occurs in the
//! expansion with `k` copies per class. How many copies of one class a role
//! can actually use depends on the pattern: the two opposite corners of a
//! `C4`, the endpoints of distinct edges of a `2K2`, the leaves of a star,
//! the two ends of a `P4`; never for `C5` or asteroidal triples.

mod at;
mod search;
mod split;
pub mod verify;

use std::borrow::Cow;

use serde::Serialize;
use thiserror::Error;

use crate::coprime::{CoprimeGraph, GkGraph, PrimeSetGraph};
use crate::graph::{PatternGraph, SimpleGraph};

pub use split::{is_split, ClassSplit, SplitDecision, SplitPartition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DetectError {
    #[error("split recognition disagrees: forbidden-subgraph route says {forbidden}, degree-sequence route says {degree}")]
    InternalDisagreement { forbidden: bool, degree: bool },
    #[error("degree-sequence partition is not a clique plus an independent set")]
    InvalidPartition,
}

/// Graph a recognizer runs on.
#[derive(Debug, Clone, Copy)]
pub enum Host<'a> {
    Plain(&'a SimpleGraph),
    Elements(&'a CoprimeGraph),
    Classes(&'a PrimeSetGraph),
}

impl<'a> From<&'a SimpleGraph> for Host<'a> {
    fn from(g: &'a SimpleGraph) -> Self {
        Host::Plain(g)
    }
}

impl<'a> From<&'a CoprimeGraph> for Host<'a> {
    fn from(g: &'a CoprimeGraph) -> Self {
        Host::Elements(g)
    }
}

impl<'a> From<&'a PrimeSetGraph> for Host<'a> {
    fn from(g: &'a PrimeSetGraph) -> Self {
        Host::Classes(g)
    }
}

/// A vertex named in a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum WitnessVertex {
    /// Vertex (element) id in a plain or full graph.
    Vertex(usize),
    /// The `copy`-th element of a prime-set class.
    Class { class: usize, copy: usize },
}

impl WitnessVertex {
    pub fn class(&self) -> Option<usize> {
        match self {
            WitnessVertex::Class { class, .. } => Some(*class),
            WitnessVertex::Vertex(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessKind {
    /// `v0 - v1 - v2 - v3 - v0`.
    InducedC4,
    /// `K_{1,s}` with the centre listed first.
    Claw { s: usize },
    /// `v0 - v1 - v2 - v3`.
    P4,
    /// `v0 - v1 - v2`.
    P3,
    /// `v0 - v1` and `v2 - v3`.
    TwoK2,
    /// `v0 - v1 - v2 - v3 - v4 - v0`.
    C5,
    /// Three pairwise non-adjacent vertices, each pair joined by a path
    /// avoiding the closed neighbourhood of the third.
    AsteroidalTriple,
    /// Vertex `i` plays pattern vertex `i`.
    InducedPattern { pattern: PatternGraph },
}

impl WitnessKind {
    /// The pattern (with the documented vertex order); `None` for asteroidal triples.
    pub fn pattern(&self) -> Option<PatternGraph> {
        Some(match self {
            WitnessKind::InducedC4 => PatternGraph::cycle(4),
            WitnessKind::Claw { s } => PatternGraph::star(*s),
            WitnessKind::P4 => PatternGraph::path(4),
            WitnessKind::P3 => PatternGraph::path(3),
            WitnessKind::TwoK2 => PatternGraph::two_k2(),
            WitnessKind::C5 => PatternGraph::cycle(5),
            WitnessKind::AsteroidalTriple => return None,
            WitnessKind::InducedPattern { pattern } => pattern.clone(),
        })
    }
}

/// Certificate that a pattern occurs. `orders` holds the element order of
/// each vertex where one is known: the exact order on full co-prime graphs,
/// the smallest order of the class on quotients, empty on plain graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<WitnessVertex>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub orders: Vec<u64>,
}

/// Outcome of a class-membership test: `holds` is true when the graph is in
/// the class (the forbidden structure is absent); otherwise `witness` shows it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Decision {
    fn from_witness(witness: Option<Witness>) -> Self {
        Decision { holds: witness.is_none(), witness }
    }
}

/// The simple graph a search runs on, with the origin of each vertex.
pub(crate) struct SearchView<'a> {
    pub graph: Cow<'a, SimpleGraph>,
    origin: Vec<WitnessVertex>,
    orders: Option<Vec<u64>>,
}

impl<'a> Host<'a> {
    pub(crate) fn view(&self, copies: usize) -> SearchView<'a> {
        match *self {
            Host::Plain(g) => SearchView {
                origin: (0..g.len()).map(WitnessVertex::Vertex).collect(),
                graph: Cow::Borrowed(g),
                orders: None,
            },
            Host::Elements(g) => SearchView {
                origin: (0..g.len()).map(WitnessVertex::Vertex).collect(),
                graph: Cow::Borrowed(g.graph()),
                orders: Some(g.orders().to_vec()),
            },
            Host::Classes(g) => {
                let (graph, origin) = g.expand(copies);
                let orders = origin
                    .iter()
                    .map(|&(c, _)| g.classes()[c].representative_order())
                    .collect();
                SearchView {
                    graph: Cow::Owned(graph),
                    origin: origin
                        .into_iter()
                        .map(|(class, copy)| WitnessVertex::Class { class, copy })
                        .collect(),
                    orders: Some(orders),
                }
            }
        }
    }
}

impl SearchView<'_> {
    /// Wraps search-graph vertices as a witness, re-checking the claimed structure.
    pub(crate) fn witness(&self, kind: WitnessKind, vertices: &[usize]) -> Witness {
        let ok = match kind.pattern() {
            Some(p) => verify::induces_pattern(&self.graph, vertices, &p),
            None => verify::is_asteroidal_triple(&self.graph, vertices),
        };
        assert!(ok, "search produced an invalid {kind:?} witness {vertices:?}");
        Witness {
            vertices: vertices.iter().map(|&v| self.origin[v]).collect(),
            orders: self
                .orders
                .as_ref()
                .map(|o| vertices.iter().map(|&v| o[v]).collect())
                .unwrap_or_default(),
            kind,
        }
    }
}

fn find_kind<'a>(host: impl Into<Host<'a>>, kind: WitnessKind) -> Option<Witness> {
    let pattern = kind.pattern().expect("pattern kinds only");
    let view = host.into().view(pattern.len());
    search::find_induced(&view.graph, &pattern).map(|vs| view.witness(kind, &vs))
}

/// Searches `host` for an induced copy of `pattern`.
pub fn find_induced<'a>(pattern: &PatternGraph, host: impl Into<Host<'a>>) -> Option<Witness> {
    find_kind(host, WitnessKind::InducedPattern { pattern: pattern.clone() })
}

pub fn is_c4_free<'a>(host: impl Into<Host<'a>>) -> Decision {
    Decision::from_witness(find_kind(host, WitnessKind::InducedC4))
}

/// `K_{1,s}`-freeness; `s = 3` is claw-freeness.
pub fn is_star_free<'a>(host: impl Into<Host<'a>>, s: usize) -> Decision {
    assert!(s >= 2, "K_(1,s) needs s >= 2");
    Decision::from_witness(find_kind(host, WitnessKind::Claw { s }))
}

/// Cograph test (`P4`-freeness).
pub fn is_cograph<'a>(host: impl Into<Host<'a>>) -> Decision {
    Decision::from_witness(find_kind(host, WitnessKind::P4))
}

pub fn find_asteroidal_triple<'a>(host: impl Into<Host<'a>>) -> Option<Witness> {
    let host = host.into();
    // two copies per class, so that a same-class member could show up if the
    // theory allowed it
    let view = host.view(2);
    let triple = at::find_asteroidal_triple(&view.graph)?;
    let w = view.witness(WitnessKind::AsteroidalTriple, &triple);
    if let Host::Classes(_) = host {
        let classes: Vec<_> = w.vertices.iter().filter_map(|v| v.class()).collect();
        assert!(
            classes[0] != classes[1] && classes[0] != classes[2] && classes[1] != classes[2],
            "asteroidal triple with two members in one prime class: {w:?}"
        );
    }
    Some(w)
}

pub fn is_at_free<'a>(host: impl Into<Host<'a>>) -> Decision {
    Decision::from_witness(find_asteroidal_triple(host))
}

/// Induced `P3` in a Gruenberg–Kegel graph; witness vertices are prime indices
/// and `orders` lists the primes themselves.
pub fn is_p3_free(gk: &GkGraph) -> Decision {
    let g = gk.to_graph();
    let found = search::find_induced(&g, &PatternGraph::path(3)).map(|vs| {
        let view = Host::Plain(&g).view(1);
        let mut w = view.witness(WitnessKind::P3, &vs);
        w.orders = vs.iter().map(|&i| gk.vertices.as_slice()[i]).collect();
        w
    });
    Decision::from_witness(found)
}

#[cfg(test)]
mod tests;
