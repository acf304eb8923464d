//! Co-prime graphs `Γ(G)`: elements adjacent iff their orders are coprime.
//!
//! Adjacency depends only on the prime supports of the two orders, so all
//! elements with the same support are false twins. [`PrimeSetGraph`] keeps
//! one vertex per support together with its multiplicity; it is built from
//! the order spectrum alone and stays small for groups far beyond the reach
//! of [`CoprimeGraph`].

pub mod export;
mod laws;

pub use laws::{check_laws, LawReport};

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::arith::{gcd, prime_support, PrimeSet};
use crate::graph::SimpleGraph;
use crate::group::{ElementRef, GroupError, GroupHandle, OrderSpectrum};

/// Default cap on the number of elements of a materialized co-prime graph.
pub const DEFAULT_ORDER_CAP: u64 = 50_000;

/// `Γ(G)` on all group elements, ids in canonical element order.
#[derive(Debug, Clone)]
pub struct CoprimeGraph {
    orders: Vec<u64>,
    graph: SimpleGraph,
}

impl CoprimeGraph {
    pub fn build(g: &GroupHandle, cap: u64) -> Result<Self, GroupError> {
        let orders = g.element_orders(cap)?;
        Ok(Self::from_orders(orders))
    }

    /// Builds the graph from element orders directly; `orders[0]` should be
    /// the identity's order 1.
    pub fn from_orders(orders: Vec<u64>) -> Self {
        let n = orders.len();
        // members of each radical class, then rows as unions of adjacent classes
        let mut classes: BTreeMap<u64, FixedBitSet> = BTreeMap::new();
        for (v, &o) in orders.iter().enumerate() {
            classes
                .entry(crate::arith::radical(o))
                .or_insert_with(|| FixedBitSet::with_capacity(n))
                .insert(v);
        }
        let mut class_rows: BTreeMap<u64, FixedBitSet> = BTreeMap::new();
        for &a in classes.keys() {
            let mut row = FixedBitSet::with_capacity(n);
            for (&b, members) in &classes {
                if gcd(a, b) == 1 {
                    row.union_with(members);
                }
            }
            class_rows.insert(a, row);
        }
        let mut graph = SimpleGraph::new(n);
        for (v, &o) in orders.iter().enumerate() {
            let row = &class_rows[&crate::arith::radical(o)];
            for u in row.ones().filter(|&u| u > v) {
                graph.add_edge(v, u);
            }
        }
        CoprimeGraph { orders, graph }
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn element(&self, id: usize) -> ElementRef {
        ElementRef { id, order: self.orders[id] }
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.graph.has_edge(x, y)
    }

    /// Open neighbourhood `N(v)`, ascending ids.
    pub fn neighborhood(&self, v: usize) -> Vec<usize> {
        self.graph.neighbors(v).collect()
    }
}

/// One vertex of the quotient: all elements whose orders share a prime support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeClass {
    pub primes: PrimeSet,
    pub multiplicity: u64,
    /// Element orders present in the class, ascending.
    pub orders: Vec<u64>,
}

impl PrimeClass {
    /// Smallest element order in the class; always realised, since powers
    /// of any member reach the product of its primes.
    pub fn representative_order(&self) -> u64 {
        self.primes.product()
    }

    /// Copies within a class are pairwise non-adjacent unless the support is empty.
    pub fn is_coclique(&self) -> bool {
        !self.primes.is_empty()
    }
}

/// The co-prime graph modulo equal prime supports.
#[derive(Debug, Clone)]
pub struct PrimeSetGraph {
    classes: Vec<PrimeClass>,
    adjacency: SimpleGraph,
}

impl PrimeSetGraph {
    /// Classes are ordered by the product of their primes, so the identity
    /// class is always class 0.
    pub fn from_spectrum(spectrum: &OrderSpectrum) -> Self {
        let mut grouped: BTreeMap<PrimeSet, (u64, Vec<u64>)> = BTreeMap::new();
        for (&d, &c) in spectrum.counts() {
            let e = grouped.entry(prime_support(d)).or_default();
            e.0 += c;
            e.1.push(d);
        }
        let mut classes: Vec<PrimeClass> = grouped
            .into_iter()
            .map(|(primes, (multiplicity, orders))| PrimeClass { primes, multiplicity, orders })
            .collect();
        classes.sort_by_key(|c| c.primes.product());
        let n = classes.len();
        let mut adjacency = SimpleGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if classes[a].primes.is_disjoint(&classes[b].primes) {
                    adjacency.add_edge(a, b);
                }
            }
        }
        PrimeSetGraph { classes, adjacency }
    }

    pub fn build(g: &GroupHandle) -> Self {
        Self::from_spectrum(&g.order_spectrum())
    }

    pub fn classes(&self) -> &[PrimeClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class-level adjacency (distinct classes with disjoint supports).
    pub fn adjacency(&self) -> &SimpleGraph {
        &self.adjacency
    }

    pub fn class_of(&self, primes: &PrimeSet) -> Option<usize> {
        self.classes.iter().position(|c| &c.primes == primes)
    }

    pub fn total(&self) -> u64 {
        self.classes.iter().map(|c| c.multiplicity).sum()
    }

    /// Whether an element of class `a` and a distinct element of class `b` are adjacent.
    pub fn lifts_adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.adjacency.has_edge(a, b)
    }

    /// Bounded expansion: each class contributes `min(multiplicity, copies)`
    /// mutually non-adjacent twin vertices. Returns the graph and, for each
    /// vertex, its `(class, copy)` origin.
    pub fn expand(&self, copies: usize) -> (SimpleGraph, Vec<(usize, usize)>) {
        let mut origin = Vec::new();
        for (c, class) in self.classes.iter().enumerate() {
            let k = class.multiplicity.min(copies as u64) as usize;
            origin.extend((0..k).map(|i| (c, i)));
        }
        let mut g = SimpleGraph::new(origin.len());
        for u in 0..origin.len() {
            for v in u + 1..origin.len() {
                if self.lifts_adjacent(origin[u].0, origin[v].0) {
                    g.add_edge(u, v);
                }
            }
        }
        (g, origin)
    }

    /// Degree in `Γ(G)` of any element of class `c`.
    pub fn lifted_degree(&self, c: usize) -> u64 {
        self.adjacency.neighbors(c).map(|b| self.classes[b].multiplicity).sum()
    }
}

/// Gruenberg–Kegel (prime) graph: vertices `π(G)`, `p ~ q` iff an element of order `pq` exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GkGraph {
    pub vertices: PrimeSet,
    pub edges: Vec<(u64, u64)>,
}

impl GkGraph {
    pub fn build(g: &GroupHandle) -> Self {
        Self::from_spectrum(&g.primes(), &g.order_spectrum())
    }

    pub fn from_spectrum(primes: &PrimeSet, spectrum: &OrderSpectrum) -> Self {
        let ps = primes.as_slice();
        let mut edges = Vec::new();
        for (i, &p) in ps.iter().enumerate() {
            for &q in &ps[i + 1..] {
                if spectrum.count(p * q) > 0 {
                    edges.push((p, q));
                }
            }
        }
        GkGraph { vertices: primes.clone(), edges }
    }

    /// Same graph on vertex indices `0..|π|`.
    pub fn to_graph(&self) -> SimpleGraph {
        let idx = |p: u64| {
            self.vertices
                .as_slice()
                .binary_search(&p)
                .expect("edge endpoints are vertices")
        };
        SimpleGraph::from_edges(self.vertices.len(), self.edges.iter().map(|&(p, q)| (idx(p), idx(q))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> GroupHandle {
        GroupHandle::cyclic(n).unwrap()
    }

    #[test]
    fn z2_is_an_edge() {
        let g = CoprimeGraph::build(&z(2), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.graph().edges(), vec![(0, 1)]);
    }

    #[test]
    fn z6_edges() {
        let g = CoprimeGraph::build(&z(6), DEFAULT_ORDER_CAP).unwrap();
        // orders by residue: 0:1 1:6 2:3 3:2 4:3 5:6
        assert_eq!(
            g.graph().edges(),
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (2, 3), (3, 4)]
        );
        assert_eq!(g.neighborhood(0), vec![1, 2, 3, 4, 5]);
        assert_eq!(g.neighborhood(1), vec![0]);
        assert_eq!(g.neighborhood(3), vec![0, 2, 4]);
    }

    #[test]
    fn p_groups_are_stars() {
        for g in [z(27), GroupHandle::dihedral(16).unwrap(), GroupHandle::dicyclic(8).unwrap()] {
            let cg = CoprimeGraph::build(&g, DEFAULT_ORDER_CAP).unwrap();
            let n = cg.len();
            assert_eq!(cg.graph().edge_count(), n - 1);
            assert_eq!(cg.graph().degree(0), n - 1);
        }
    }

    #[test]
    fn too_large() {
        assert!(matches!(
            CoprimeGraph::build(&z(100), 50),
            Err(GroupError::TooLarge { order: 100, cap: 50 })
        ));
    }

    #[test]
    fn reduced_z6_and_s7() {
        let r = PrimeSetGraph::build(&z(6));
        let summary: Vec<(String, u64)> =
            r.classes().iter().map(|c| (c.primes.to_string(), c.multiplicity)).collect();
        assert_eq!(
            summary,
            vec![("{}".into(), 1), ("{2}".into(), 1), ("{3}".into(), 2), ("{2,3}".into(), 2)]
        );
        let s7 = PrimeSetGraph::build(&GroupHandle::symmetric(7).unwrap());
        let sigs: Vec<String> = s7.classes().iter().map(|c| c.primes.to_string()).collect();
        assert_eq!(sigs, vec!["{}", "{2}", "{3}", "{5}", "{2,3}", "{7}", "{2,5}"]);
        let c23 = s7.class_of(&PrimeSet::from_primes([2, 3])).unwrap();
        assert_eq!(s7.classes()[c23].orders, vec![6, 12]);
        assert_eq!(s7.total(), 5040);
        let trivial = PrimeSetGraph::build(&z(1));
        assert_eq!(trivial.len(), 1);
        assert!(trivial.classes()[0].primes.is_empty());
    }

    #[test]
    fn gk_examples() {
        let gk = GkGraph::build(&z(30));
        assert_eq!(gk.edges, vec![(2, 3), (2, 5), (3, 5)]);
        let s3z5 = GroupHandle::direct_product(vec![GroupHandle::symmetric(3).unwrap(), z(5)]).unwrap();
        assert_eq!(GkGraph::build(&s3z5).edges, vec![(2, 5), (3, 5)]);
        let z8 = GkGraph::build(&z(8));
        assert_eq!(z8.vertices.as_slice(), &[2]);
        assert!(z8.edges.is_empty());
    }

    #[test]
    fn expansion_caps_copies() {
        let r = PrimeSetGraph::build(&z(6));
        let (g, origin) = r.expand(2);
        assert_eq!(origin, vec![(0, 0), (1, 0), (2, 0), (2, 1), (3, 0), (3, 1)]);
        assert!(!g.has_edge(2, 3));
        assert!(g.has_edge(1, 2));
        assert_eq!(r.lifted_degree(1), 3);
    }
}
