//! Independent witness checks, looked up directly in the source graph.

use std::collections::VecDeque;

use crate::coprime::PrimeSetGraph;
use crate::graph::{PatternGraph, SimpleGraph};

use super::{Host, Witness, WitnessVertex};

/// Whether `vertices[i] -> i` is an isomorphism from the induced subgraph onto `pattern`.
pub fn induces_pattern(g: &SimpleGraph, vertices: &[usize], pattern: &PatternGraph) -> bool {
    if vertices.len() != pattern.len() || vertices.iter().any(|&v| v >= g.len()) {
        return false;
    }
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == vertices.len() && g.induced(vertices) == pattern.to_graph()
}

/// Path from `a` to `b` whose interior avoids `N[c]`.
fn joined_avoiding(g: &SimpleGraph, a: usize, b: usize, c: usize) -> bool {
    let blocked = |v: usize| v == c || g.has_edge(v, c);
    let mut seen = vec![false; g.len()];
    let mut queue = VecDeque::from([a]);
    seen[a] = true;
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if w == b {
                return true;
            }
            if !seen[w] && !blocked(w) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    false
}

pub fn is_asteroidal_triple(g: &SimpleGraph, t: &[usize]) -> bool {
    let [x, y, z] = match t {
        &[x, y, z] => [x, y, z],
        _ => return false,
    };
    if x == y || y == z || x == z || [x, y, z].iter().any(|&v| v >= g.len()) {
        return false;
    }
    !g.has_edge(x, y)
        && !g.has_edge(y, z)
        && !g.has_edge(x, z)
        && joined_avoiding(g, x, y, z)
        && joined_avoiding(g, y, z, x)
        && joined_avoiding(g, x, z, y)
}

/// Class-level path test: a path between elements of classes `a` and `b`
/// whose interior avoids the closed neighbourhood of an element of class `c`.
fn classes_joined_avoiding(r: &PrimeSetGraph, a: usize, b: usize, c: usize) -> bool {
    let adj = r.adjacency();
    let allowed = |k: usize| k != c && !adj.has_edge(k, c);
    let mut seen = vec![false; r.len()];
    let mut queue = VecDeque::new();
    for k in adj.neighbors(a) {
        if k == b {
            return true;
        }
        if allowed(k) && !seen[k] {
            seen[k] = true;
            queue.push_back(k);
        }
    }
    while let Some(u) = queue.pop_front() {
        for w in adj.neighbors(u) {
            if w == b {
                return true;
            }
            if allowed(w) && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    false
}

fn class_vertices(r: &PrimeSetGraph, w: &Witness) -> Option<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(w.vertices.len());
    for v in &w.vertices {
        match *v {
            WitnessVertex::Class { class, copy }
                if class < r.len() && (copy as u64) < r.classes()[class].multiplicity =>
            {
                out.push((class, copy))
            }
            _ => return None,
        }
    }
    let mut sorted = out.clone();
    sorted.sort_unstable();
    sorted.dedup();
    (sorted.len() == out.len()).then_some(out)
}

fn plain_vertices(w: &Witness) -> Option<Vec<usize>> {
    w.vertices
        .iter()
        .map(|v| match *v {
            WitnessVertex::Vertex(id) => Some(id),
            WitnessVertex::Class { .. } => None,
        })
        .collect()
}

/// Checks a witness against the graph it claims to come from.
pub fn verify_witness<'a>(host: impl Into<Host<'a>>, w: &Witness) -> bool {
    let host = host.into();
    match host {
        Host::Plain(_) | Host::Elements(_) => {
            let g = match host {
                Host::Plain(g) => g,
                Host::Elements(cg) => cg.graph(),
                Host::Classes(_) => unreachable!(),
            };
            let Some(vs) = plain_vertices(w) else { return false };
            match w.kind.pattern() {
                Some(p) => induces_pattern(g, &vs, &p),
                None => is_asteroidal_triple(g, &vs),
            }
        }
        Host::Classes(r) => {
            let Some(vs) = class_vertices(r, w) else { return false };
            let mut induced = SimpleGraph::new(vs.len());
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    if r.lifts_adjacent(vs[i].0, vs[j].0) {
                        induced.add_edge(i, j);
                    }
                }
            }
            match w.kind.pattern() {
                Some(p) => induced == p.to_graph(),
                None if vs.len() != 3 => false,
                None => {
                    let (a, b, c) = (vs[0].0, vs[1].0, vs[2].0);
                    induced.edge_count() == 0
                        && classes_joined_avoiding(r, a, b, c)
                        && classes_joined_avoiding(r, b, c, a)
                        && classes_joined_avoiding(r, a, c, b)
                }
            }
        }
    }
}
