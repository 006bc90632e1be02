//! Vertex-transitivity by explicit automorphism search. Intended for the
//! small graphs (a dozen vertices or so) where the closed formulas apply.

use super::{DistanceMatrix, ExtDistance, Graph};

pub(crate) fn is_vertex_transitive(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    let d = g.distances();
    let profiles: Vec<Vec<ExtDistance>> = (0..n).map(|v| d.profile(v)).collect();
    if profiles.iter().any(|p| *p != profiles[0]) {
        return false;
    }
    // orbit of vertex 0 under Aut(g) must be everything
    let order = search_order(&d, n);
    (1..n).all(|target| {
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        image[0] = target;
        used[target] = true;
        extend(&d, &profiles, &order, 1, &mut image, &mut used)
    })
}

/// Vertex 0 first, then the rest by increasing distance from it so every
/// new vertex is constrained by already-placed neighbours.
fn search_order(d: &DistanceMatrix, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (d.get(0, v), v));
    order
}

fn extend(
    d: &DistanceMatrix,
    profiles: &[Vec<ExtDistance>],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for c in 0..image.len() {
        if used[c] || profiles[c] != profiles[v] {
            continue;
        }
        // distance-preserving bijections of a graph are exactly its automorphisms
        let consistent = order[..depth]
            .iter()
            .all(|&u| d.get(u, v) == d.get(image[u], c));
        if !consistent {
            continue;
        }
        image[v] = c;
        used[c] = true;
        if extend(d, profiles, order, depth + 1, image, used) {
            return true;
        }
        used[c] = false;
        image[v] = usize::MAX;
    }
    false
}
