#![allow(dead_code)]

use magnitude_core::Graph;
use rand::Rng;

/// Erdős–Rényi graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Uniformly attached random tree on `n >= 1` vertices.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}
