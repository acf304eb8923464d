//! Backtracking induced-subgraph search.
//!
//! Pattern vertices are placed in a connectivity-first order so that each
//! new vertex is constrained by already placed neighbours. Candidates are
//! the intersection of the placed neighbours' rows minus the placed
//! non-neighbours' rows, filtered by degree. Symmetry breaking: every vertex
//! in the automorphism orbit of the first placed pattern vertex must map
//! above that vertex's image.

use fixedbitset::FixedBitSet;

use crate::graph::{PatternGraph, SimpleGraph};

struct Plan {
    order: Vec<usize>,
    /// For step `k`: placed pattern vertices (by step) adjacent / non-adjacent to `order[k]`.
    adjacent_steps: Vec<Vec<usize>>,
    nonadjacent_steps: Vec<Vec<usize>>,
    degree: Vec<usize>,
    /// Steps whose image must exceed the image at step 0.
    above_first: Vec<bool>,
}

fn placement_order(p: &SimpleGraph) -> Vec<usize> {
    let n = p.len();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| p.has_edge(u, v)).count();
                (links, p.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Whether some automorphism of `p` maps `from` to `to`.
fn maps_to(p: &SimpleGraph, from: usize, to: usize) -> bool {
    fn extend(p: &SimpleGraph, image: &mut Vec<Option<usize>>, used: &mut Vec<bool>, v: usize) -> bool {
        let n = p.len();
        if v == n {
            return true;
        }
        if image[v].is_some() {
            return extend(p, image, used, v + 1);
        }
        for t in 0..n {
            if used[t] || p.degree(t) != p.degree(v) {
                continue;
            }
            let consistent = (0..n).all(|u| match image[u] {
                Some(iu) if u != v => p.has_edge(u, v) == p.has_edge(iu, t),
                _ => true,
            });
            if consistent {
                image[v] = Some(t);
                used[t] = true;
                if extend(p, image, used, v + 1) {
                    return true;
                }
                image[v] = None;
                used[t] = false;
            }
        }
        false
    }
    if p.degree(from) != p.degree(to) {
        return false;
    }
    let n = p.len();
    let mut image = vec![None; n];
    let mut used = vec![false; n];
    image[from] = Some(to);
    used[to] = true;
    extend(p, &mut image, &mut used, 0)
}

fn plan(pattern: &PatternGraph) -> Plan {
    let p = pattern.to_graph();
    let order = placement_order(&p);
    let n = order.len();
    let mut adjacent_steps = vec![Vec::new(); n];
    let mut nonadjacent_steps = vec![Vec::new(); n];
    for k in 0..n {
        for j in 0..k {
            if p.has_edge(order[j], order[k]) {
                adjacent_steps[k].push(j);
            } else {
                nonadjacent_steps[k].push(j);
            }
        }
    }
    let first = order.first().copied();
    let above_first = order
        .iter()
        .enumerate()
        .map(|(k, &v)| k > 0 && first.is_some_and(|f| maps_to(&p, f, v)))
        .collect();
    let degree = order.iter().map(|&v| p.degree(v)).collect();
    Plan { order, adjacent_steps, nonadjacent_steps, degree, above_first }
}

/// First induced occurrence of `pattern` in `g` in canonical scan order;
/// `result[i]` is the image of pattern vertex `i`.
pub(crate) fn find_induced(g: &SimpleGraph, pattern: &PatternGraph) -> Option<Vec<usize>> {
    let k = pattern.len();
    if k > g.len() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let plan = plan(pattern);
    let degrees: Vec<usize> = (0..g.len()).map(|v| g.degree(v)).collect();
    let mut images = Vec::with_capacity(k);
    if !extend(g, &plan, &degrees, &mut images) {
        return None;
    }
    let mut result = vec![0; k];
    for (step, &pv) in plan.order.iter().enumerate() {
        result[pv] = images[step];
    }
    Some(result)
}

fn extend(g: &SimpleGraph, plan: &Plan, degrees: &[usize], images: &mut Vec<usize>) -> bool {
    let step = images.len();
    if step == plan.order.len() {
        return true;
    }
    let n = g.len();
    let mut candidates = match plan.adjacent_steps[step].first() {
        Some(&j) => g.row(images[j]).clone(),
        None => {
            let mut all = FixedBitSet::with_capacity(n);
            all.insert_range(..);
            all
        }
    };
    for &j in plan.adjacent_steps[step].iter().skip(1) {
        candidates.intersect_with(g.row(images[j]));
    }
    for &j in &plan.nonadjacent_steps[step] {
        candidates.difference_with(g.row(images[j]));
    }
    for &img in images.iter() {
        candidates.set(img, false);
    }
    let floor = if plan.above_first[step] { images[0] + 1 } else { 0 };
    let need = plan.degree[step];
    for v in candidates.ones().filter(|&v| v >= floor && degrees[v] >= need) {
        images.push(v);
        if extend(g, plan, degrees, images) {
            return true;
        }
        images.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &SimpleGraph, p: &PatternGraph) -> bool {
        use itertools::Itertools;
        let pg = p.to_graph();
        (0..g.len()).permutations(p.len()).any(|vs| g.induced(&vs) == pg)
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let patterns = [
            PatternGraph::cycle(4),
            PatternGraph::path(4),
            PatternGraph::claw(),
            PatternGraph::two_k2(),
            PatternGraph::cycle(5),
            PatternGraph::star(4),
            PatternGraph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(),
        ];
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let mut g = SimpleGraph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            for p in &patterns {
                let found = find_induced(&g, p);
                assert_eq!(found.is_some(), brute_force(&g, p), "{p:?} in {:?}", g.edges());
                if let Some(vs) = found {
                    assert_eq!(g.induced(&vs), p.to_graph());
                }
            }
        }
    }

    #[test]
    fn orbit_of_first_vertex() {
        let c4 = PatternGraph::cycle(4).to_graph();
        assert!((0..4).all(|v| maps_to(&c4, 0, v)));
        let paw = PatternGraph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap().to_graph();
        assert!(maps_to(&paw, 0, 1));
        assert!(!maps_to(&paw, 0, 2));
        assert!(!maps_to(&paw, 0, 3));
    }

    #[test]
    fn empty_and_oversized_patterns() {
        let g = SimpleGraph::new(1);
        assert_eq!(find_induced(&g, &PatternGraph::new(0, []).unwrap()), Some(vec![]));
        assert_eq!(find_induced(&g, &PatternGraph::new(1, []).unwrap()), Some(vec![0]));
        assert_eq!(find_induced(&g, &PatternGraph::path(2)), None);
        assert_eq!(find_induced(&g, &PatternGraph::new(2, []).unwrap()), None);
    }
}
