//! DOT and JSON renderings. Output is byte-stable for a given graph.

use std::fmt::Write;

use serde::Serialize;

use super::{CoprimeGraph, PrimeSetGraph};

#[derive(Serialize)]
struct JsonVertex {
    id: usize,
    order: u64,
}

#[derive(Serialize)]
struct JsonGraph {
    vertices: Vec<JsonVertex>,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct JsonClass<'a> {
    id: usize,
    primes: &'a [u64],
    multiplicity: u64,
    orders: &'a [u64],
}

#[derive(Serialize)]
struct JsonReduced<'a> {
    classes: Vec<JsonClass<'a>>,
    edges: Vec<[usize; 2]>,
}

pub fn coprime_to_dot(g: &CoprimeGraph) -> String {
    let mut out = String::from("graph coprime {\n");
    for (v, o) in g.orders().iter().enumerate() {
        writeln!(out, "  {v} [label=\"{v} (o={o})\"];").unwrap();
    }
    for (u, v) in g.graph().edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn coprime_to_json(g: &CoprimeGraph) -> String {
    let doc = JsonGraph {
        vertices: g
            .orders()
            .iter()
            .enumerate()
            .map(|(id, &order)| JsonVertex { id, order })
            .collect(),
        edges: g.graph().edges().into_iter().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

pub fn reduced_to_dot(g: &PrimeSetGraph) -> String {
    let mut out = String::from("graph prime_classes {\n");
    for (c, class) in g.classes().iter().enumerate() {
        writeln!(out, "  c{c} [label=\"π={}×{}\"];", class.primes, class.multiplicity).unwrap();
    }
    for (a, b) in g.adjacency().edges() {
        writeln!(out, "  c{a} -- c{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn reduced_to_json(g: &PrimeSetGraph) -> String {
    let doc = JsonReduced {
        classes: g
            .classes()
            .iter()
            .enumerate()
            .map(|(id, c)| JsonClass {
                id,
                primes: c.primes.as_slice(),
                multiplicity: c.multiplicity,
                orders: &c.orders,
            })
            .collect(),
        edges: g.adjacency().edges().into_iter().map(|(a, b)| [a, b]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}
