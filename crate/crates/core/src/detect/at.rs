//! Asteroidal triples via component precomputation.
//!
//! For every vertex `v`, label the connected components of `G - N[v]`.
//! Pairwise non-adjacent `x, y, z` form an asteroidal triple iff for each
//! member, the other two lie in one component of the graph minus that
//! member's closed neighbourhood.

use crate::graph::SimpleGraph;

const BLOCKED: u32 = u32::MAX;

/// `labels[v][u]`: component of `u` in `G - N[v]`, or `BLOCKED` for `u ∈ N[v]`.
fn component_labels(g: &SimpleGraph) -> Vec<Vec<u32>> {
    let n = g.len();
    let mut out = Vec::with_capacity(n);
    let mut stack = Vec::new();
    for v in 0..n {
        let mut label = vec![u32::MAX - 1; n];
        label[v] = BLOCKED;
        for u in g.neighbors(v) {
            label[u] = BLOCKED;
        }
        let mut next = 0u32;
        for s in 0..n {
            if label[s] != u32::MAX - 1 {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(a) = stack.pop() {
                for b in g.neighbors(a) {
                    if label[b] == u32::MAX - 1 {
                        label[b] = next;
                        stack.push(b);
                    }
                }
            }
            next += 1;
        }
        out.push(label);
    }
    out
}

/// Lexicographically first asteroidal triple `x < y < z`.
pub(crate) fn find_asteroidal_triple(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.len();
    let labels = component_labels(g);
    for x in 0..n {
        for y in (x + 1..n).filter(|&y| !g.has_edge(x, y)) {
            // y and z share a component of G - N[x]; x and z share one of G - N[y]
            let lx = &labels[x];
            let ly = &labels[y];
            for z in y + 1..n {
                if lx[z] == lx[y] && ly[z] == ly[x] && lx[z] != BLOCKED && ly[z] != BLOCKED {
                    let lz = &labels[z];
                    if lz[x] == lz[y] && lz[x] != BLOCKED {
                        return Some(vec![x, y, z]);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivided_claw_has_an_at() {
        // centre 0, legs 0-1-2, 0-3-4, 0-5-6
        let g = SimpleGraph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        assert_eq!(find_asteroidal_triple(&g), Some(vec![2, 4, 6]));
    }

    #[test]
    fn paths_and_cycles() {
        let p = SimpleGraph::from_edges(8, (1..8).map(|i| (i - 1, i)));
        assert_eq!(find_asteroidal_triple(&p), None);
        // C6 has an AT (alternate vertices)
        let c6 = SimpleGraph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6)));
        assert_eq!(find_asteroidal_triple(&c6), Some(vec![0, 2, 4]));
    }
}
