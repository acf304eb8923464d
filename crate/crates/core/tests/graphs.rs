mod common;

use coprime_core::arith::{gcd, prime_support};
use coprime_core::coprime::{check_laws, export, DEFAULT_ORDER_CAP};
use coprime_core::{CoprimeGraph, GkGraph, GroupHandle, PrimeSetGraph};

use common::*;

#[test]
fn quotient_lifts_to_the_element_graph() {
    for g in corpus_upto(200) {
        let full = CoprimeGraph::build(&g, DEFAULT_ORDER_CAP).unwrap();
        let r = PrimeSetGraph::build(&g);
        let class: Vec<usize> = full
            .orders()
            .iter()
            .map(|&o| r.class_of(&prime_support(o)).expect("class exists"))
            .collect();
        for (c, pc) in r.classes().iter().enumerate() {
            assert_eq!(class.iter().filter(|&&k| k == c).count() as u64, pc.multiplicity, "{g}");
        }
        for x in 0..full.len() {
            for y in x + 1..full.len() {
                assert_eq!(full.adjacent(x, y), r.lifts_adjacent(class[x], class[y]), "{g}: {x} {y}");
            }
        }
    }
}

#[test]
fn adjacency_is_coprimality() {
    for g in corpus_upto(200) {
        let full = CoprimeGraph::build(&g, DEFAULT_ORDER_CAP).unwrap();
        let o = full.orders();
        for x in 0..full.len() {
            for y in x + 1..full.len() {
                assert_eq!(full.adjacent(x, y), gcd(o[x], o[y]) == 1);
            }
        }
    }
}

#[test]
fn neighbourhood_containment_law_without_the_identity() {
    for g in corpus_upto(60) {
        let full = CoprimeGraph::build(&g, DEFAULT_ORDER_CAP).unwrap();
        let laws = check_laws(&full);
        assert!(laws.is_clean(), "{g}: {laws:?}");
        assert_eq!(laws.identity_exceptions, full.len() - 1, "{g}");
    }
}

#[test]
fn gk_edges_divide_the_exponent() {
    for g in corpus() {
        let gk = GkGraph::build(&g);
        let exponent = g.order_spectrum().exponent();
        for &(p, q) in &gk.edges {
            assert!(gk.vertices.contains(p) && gk.vertices.contains(q));
            assert_eq!(exponent % (p * q), 0, "{g}: {p}{q}");
        }
        assert_eq!(gk.vertices, g.primes());
    }
}

#[test]
fn z6_dot_golden() {
    let dot = export::coprime_to_dot(&CoprimeGraph::build(&GroupHandle::cyclic(6).unwrap(), 100).unwrap());
    let golden = std::fs::read_to_string(fixture_path("z6.dot")).unwrap();
    assert_eq!(dot, golden);
}

#[test]
fn symmetric_8_quotient_is_small() {
    let r = PrimeSetGraph::build(&GroupHandle::symmetric(8).unwrap());
    assert!(r.len() <= 16);
    assert_eq!(r.total(), 40320);
    let json: serde_json::Value = serde_json::from_str(&export::reduced_to_json(&r)).unwrap();
    assert_eq!(json["classes"].as_array().unwrap().len(), r.len());
}

#[test]
fn json_export_shape() {
    let cg = CoprimeGraph::build(&GroupHandle::cyclic(6).unwrap(), 100).unwrap();
    let json: serde_json::Value = serde_json::from_str(&export::coprime_to_json(&cg)).unwrap();
    assert_eq!(json["vertices"][1], serde_json::json!({"id": 1, "order": 6}));
    assert_eq!(json["edges"].as_array().unwrap().len(), 7);
}
