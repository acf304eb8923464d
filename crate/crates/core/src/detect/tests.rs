use super::verify::verify_witness;
use super::*;
use crate::coprime::{CoprimeGraph, GkGraph, PrimeSetGraph, DEFAULT_ORDER_CAP};
use crate::group::GroupHandle;

// u v w x y z r s
const U: usize = 0;
const V: usize = 1;
const W: usize = 2;
const X: usize = 3;
const Y: usize = 4;
const Z: usize = 5;
const R: usize = 6;
const S: usize = 7;

/// The eight-vertex example: a 2x2 grid of squares with four diagonals
/// around the centre.
fn example_graph() -> SimpleGraph {
    SimpleGraph::from_edges(
        8,
        [
            (Z, X),
            (X, U),
            (Z, R),
            (R, S),
            (U, V),
            (V, W),
            (S, Y),
            (Y, W),
            (R, V),
            (X, Y),
            (X, R),
            (V, Y),
            (X, V),
            (R, Y),
        ],
    )
}

fn full(g: &GroupHandle) -> CoprimeGraph {
    CoprimeGraph::build(g, DEFAULT_ORDER_CAP).unwrap()
}

fn z(n: u64) -> GroupHandle {
    GroupHandle::cyclic(n).unwrap()
}

fn vertex_ids(w: &Witness) -> Vec<usize> {
    w.vertices
        .iter()
        .map(|v| match v {
            WitnessVertex::Vertex(id) => *id,
            other => panic!("unexpected {other:?}"),
        })
        .collect()
}

#[test]
fn example_graph_claw_at_and_split() {
    let g = example_graph();
    let claw = is_star_free(&g, 3).witness.unwrap();
    assert_eq!(vertex_ids(&claw), vec![V, U, W, R]);
    let at = find_asteroidal_triple(&g).unwrap();
    assert_eq!(vertex_ids(&at), vec![U, W, Z]);
    let split = is_split(&g).unwrap();
    assert!(split.holds);
    assert_eq!(
        split.partition,
        Some(SplitPartition::Vertices { clique: vec![V, X, Y, R], independent: vec![U, W, Z, S] })
    );
}

#[test]
fn example_graph_is_not_a_cograph() {
    // u - x - y - w is an induced P4, so the graph cannot be a cograph
    // (cographs are also AT-free, and this graph has an AT)
    let g = example_graph();
    let d = is_cograph(&g);
    assert!(!d.holds);
    assert!(verify::induces_pattern(&g, &[U, X, Y, W], &PatternGraph::path(4)));
}

#[test]
fn c4_in_z15() {
    let g = full(&z(15));
    let d = is_c4_free(&g);
    let w = d.witness.expect("C4 present");
    assert!(verify_witness(&g, &w));
    let o = &w.orders;
    assert_eq!(o[0], o[2]);
    assert_eq!(o[1], o[3]);
    let mut pair = [o[0], o[1]];
    pair.sort_unstable();
    assert_eq!(pair, [3, 5]);
}

#[test]
fn c4_free_cases() {
    assert!(is_c4_free(&full(&z(18))).holds);
    assert!(is_c4_free(&full(&z(13))).holds);
    let s3 = full(&GroupHandle::symmetric(3).unwrap());
    let w = is_c4_free(&s3).witness.unwrap();
    let mut o = w.orders.clone();
    o.sort_unstable();
    assert_eq!(o, vec![2, 2, 3, 3]);
}

#[test]
fn claws_and_k14() {
    let z6 = full(&z(6));
    let w = is_star_free(&z6, 3).witness.unwrap();
    assert_eq!(w.orders[0], 1);
    // the claw named for Z_6: identity with two order-6 elements and the involution
    let named = Witness {
        kind: WitnessKind::Claw { s: 3 },
        vertices: [0, 1, 5, 3].map(WitnessVertex::Vertex).to_vec(),
        orders: vec![],
    };
    assert!(verify_witness(&z6, &named));
    assert!(is_star_free(&full(&z(3)), 3).holds);
    assert!(is_star_free(&full(&z(4)), 4).holds);
    assert!(!is_star_free(&full(&z(4)), 3).holds);
    // S_3 has a claw but no K_{1,4}: its largest independent sets have three elements
    let s3 = GroupHandle::symmetric(3).unwrap();
    assert!(!is_star_free(&full(&s3), 3).holds);
    assert!(is_star_free(&full(&s3), 4).holds);
    assert!(is_star_free(&PrimeSetGraph::build(&s3), 4).holds);
}

#[test]
fn cographs() {
    let d = is_cograph(&full(&z(30)));
    let w = d.witness.unwrap();
    assert!(verify_witness(&full(&z(30)), &w));
    assert!(is_cograph(&full(&z(72))).holds);
    assert!(is_cograph(&full(&z(1))).holds);
    assert!(!is_cograph(&PrimeSetGraph::build(&z(30))).holds);
}

#[test]
fn split_examples() {
    let d = is_split(&full(&z(15))).unwrap();
    assert!(!d.holds);
    assert_eq!(d.witness.unwrap().kind, WitnessKind::InducedC4);
    let d = is_split(&full(&z(32))).unwrap();
    assert!(d.holds);
    let r = is_split(&PrimeSetGraph::build(&z(32))).unwrap();
    assert!(r.holds);
    assert_eq!(
        r.partition,
        Some(SplitPartition::Classes {
            clique: vec![ClassSplit { class: 0, count: 1 }, ClassSplit { class: 1, count: 1 }],
            independent: vec![ClassSplit { class: 1, count: 30 }],
        })
    );
}

#[test]
fn asteroidal_triples_in_symmetric_groups() {
    let s8 = PrimeSetGraph::build(&GroupHandle::symmetric(8).unwrap());
    let w = find_asteroidal_triple(&s8).unwrap();
    let mut o = w.orders.clone();
    o.sort_unstable();
    assert_eq!(o, vec![6, 10, 15]);
    assert!(verify_witness(&s8, &w));
    let s7 = PrimeSetGraph::build(&GroupHandle::symmetric(7).unwrap());
    assert!(find_asteroidal_triple(&s7).is_none());
}

#[test]
fn gk_p3() {
    assert!(is_p3_free(&GkGraph::build(&z(30))).holds);
    let s3z5 = GroupHandle::direct_product(vec![GroupHandle::symmetric(3).unwrap(), z(5)]).unwrap();
    let d = is_p3_free(&GkGraph::build(&s3z5));
    assert_eq!(d.witness.unwrap().orders, vec![2, 5, 3]);
    assert!(is_p3_free(&GkGraph::build(&z(8))).holds);
}

#[test]
fn trivial_hosts() {
    let one = SimpleGraph::new(1);
    for p in [PatternGraph::path(2), PatternGraph::cycle(4), PatternGraph::claw()] {
        assert!(find_induced(&p, &one).is_none());
    }
    assert!(is_split(&one).unwrap().holds);
    assert!(find_asteroidal_triple(&one).is_none());
}

#[test]
fn witness_verifier_rejects_bad_witnesses() {
    let g = full(&z(15));
    let mut w = is_c4_free(&g).witness.unwrap();
    w.vertices.swap(0, 1);
    assert!(!verify_witness(&g, &w));
    let r = PrimeSetGraph::build(&z(15));
    let mut w = is_c4_free(&r).witness.unwrap();
    assert!(verify_witness(&r, &w));
    if let WitnessVertex::Class { copy, .. } = &mut w.vertices[0] {
        *copy = 99;
    }
    assert!(!verify_witness(&r, &w));
}
