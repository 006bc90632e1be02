use super::Graph;
use crate::error::{Error, Result};

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_n`, n >= 1.
    Complete(usize),
    /// `C_n`, n >= 1; `C_1` is a single vertex and `C_2` a single edge.
    Cycle(usize),
    /// Path on n >= 0 vertices.
    Path(usize),
    /// n >= 0 isolated vertices.
    Edgeless(usize),
    /// `K_{m,n}`, m, n >= 1. Vertices `0..m` form the first side.
    CompleteBipartite(usize, usize),
    Petersen,
    /// `K_6` with the three edges of the triangle on `{0, 1, 2}` removed.
    WGraph,
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        let bad = |what: &str| Err(Error::InvalidParameter(what.to_string()));
        match self {
            Family::Complete(0) => bad("complete graph needs n >= 1"),
            Family::Cycle(0) => bad("cycle needs n >= 1"),
            Family::CompleteBipartite(m, n) if m == 0 || n == 0 => {
                bad("complete bipartite graph needs m, n >= 1")
            }
            Family::Complete(n) => complete(n),
            Family::Cycle(n) if n <= 2 => complete(n),
            Family::Cycle(n) => {
                let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edge_list(n, &pairs)
            }
            Family::Path(n) => {
                let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edge_list(n, &pairs)
            }
            Family::Edgeless(n) => Ok(Graph::edgeless(n)),
            Family::CompleteBipartite(m, n) => {
                let pairs: Vec<_> = (0..m)
                    .flat_map(|i| (0..n).map(move |j| (i, m + j)))
                    .collect();
                Graph::from_edge_list(m + n, &pairs)
            }
            Family::Petersen => {
                let mut pairs = Vec::with_capacity(15);
                for i in 0..5 {
                    pairs.push((i, (i + 1) % 5));
                    pairs.push((5 + i, 5 + (i + 2) % 5));
                    pairs.push((i, 5 + i));
                }
                Graph::from_edge_list(10, &pairs)
            }
            Family::WGraph => {
                let pairs: Vec<_> = (0..6)
                    .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
                    .filter(|&(i, j)| !(i < 3 && j < 3))
                    .collect();
                Graph::from_edge_list(6, &pairs)
            }
        }
    }
}

fn complete(n: usize) -> Result<Graph> {
    let pairs: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::from_edge_list(n, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn girth(g: &Graph) -> Option<usize> {
        // shortest cycle through each edge: remove it and measure
        g.edges()
            .iter()
            .filter_map(|&(u, v)| {
                let rest: Vec<_> = g.edges().iter().copied().filter(|&e| e != (u, v)).collect();
                let h = Graph::from_edge_list(g.vertex_count(), &rest).unwrap();
                h.distances().get(u, v).finite().map(|d| d + 1)
            })
            .min()
    }

    #[test]
    fn sizes() {
        let k3 = Family::Complete(3).build().unwrap();
        assert_eq!(k3, Family::Cycle(3).build().unwrap());
        assert_eq!(Family::Cycle(1).build().unwrap().vertex_count(), 1);
        assert_eq!(Family::Cycle(2).build().unwrap().edge_count(), 1);
        assert_eq!(Family::Path(0).build().unwrap().vertex_count(), 0);
        assert_eq!(Family::Path(3).build().unwrap().edge_count(), 2);
        assert_eq!(
            Family::CompleteBipartite(2, 3)
                .build()
                .unwrap()
                .edge_count(),
            6
        );
    }

    #[test]
    fn petersen() {
        let p = Family::Petersen.build().unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(girth(&p), Some(5));
    }

    #[test]
    fn w_graph() {
        let w = Family::WGraph.build().unwrap();
        assert_eq!((w.vertex_count(), w.edge_count()), (6, 12));
        let mut degrees: Vec<_> = (0..6).map(|v| w.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![3, 3, 3, 5, 5, 5]);
        assert_eq!(w.component_count(), 1);
    }

    #[test]
    fn invalid_sizes() {
        assert!(Family::Complete(0).build().is_err());
        assert!(Family::Cycle(0).build().is_err());
        assert!(Family::CompleteBipartite(0, 2).build().is_err());
    }
}
