//! Finite simple undirected graphs, their shortest-path metric, standard
//! families, combinators and the metric predicates used by the magnitude
//! theorems.

mod edgelist;
mod families;
mod metric;
mod ops;
mod subgraph;
mod symmetry;

pub use edgelist::{parse_edge_list, to_edge_list};
pub use families::Family;
pub use metric::{DistanceMatrix, ExtDistance};
pub use ops::{TwistSpec, WhitneyTwist};
pub use subgraph::{Projection, SubgraphSelection};

use crate::error::{Error, Result};

/// Immutable simple graph on vertices `0..vertex_count`.
///
/// Edges are stored once each as `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds the graph with exactly these vertices and edges; duplicate
    /// pairs (in either orientation) collapse to one edge.
    pub fn from_edge_list(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges,
            adjacency,
            labels: None,
        })
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        Self::edgeless(0)
    }

    pub fn edgeless(n: usize) -> Self {
        Self::from_edge_list(n, &[]).expect("edgeless graph is valid")
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        Ok(())
    }

    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::compute(self)
    }

    /// Number of connected components; 0 for the empty graph.
    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    /// Component index of every vertex, numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.vertex_count {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Whether the connected component containing `v` admits a proper
    /// 2-colouring.
    pub fn component_is_bipartite(&self, v: usize) -> bool {
        let mut colour = vec![None; self.vertex_count];
        colour[v] = Some(false);
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            let cx = colour[x].unwrap();
            for &y in &self.adjacency[x] {
                match colour[y] {
                    None => {
                        colour[y] = Some(!cx);
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => return false,
                    Some(_) => {}
                }
            }
        }
        true
    }

    pub fn is_bipartite(&self) -> bool {
        let comp = self.components();
        let mut seen = vec![false; self.component_count()];
        (0..self.vertex_count).all(|v| {
            if seen[comp[v]] {
                return true;
            }
            seen[comp[v]] = true;
            self.component_is_bipartite(v)
        })
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.vertex_count];
        if perm.len() != self.vertex_count
            || perm
                .iter()
                .any(|&p| p >= self.vertex_count || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        let pairs: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edge_list(self.vertex_count, &pairs)
    }

    pub fn is_vertex_transitive(&self) -> bool {
        symmetry::is_vertex_transitive(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        let c3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.edge_count(), 3);
        assert_eq!(c3.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let e2 = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!((e2.vertex_count(), e2.edge_count()), (2, 0));
        let dup = Graph::from_edge_list(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.edges(), &[(0, 1)]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
        assert_eq!(Graph::from_edge_list(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn components() {
        assert_eq!(Graph::empty().component_count(), 0);
        assert_eq!(Graph::edgeless(4).component_count(), 4);
        assert_eq!(Family::Complete(5).build().unwrap().component_count(), 1);
    }

    #[test]
    fn bipartiteness() {
        assert!(Family::Cycle(6).build().unwrap().is_bipartite());
        assert!(!Family::Cycle(5).build().unwrap().is_bipartite());
        let g = Family::Cycle(3)
            .build()
            .unwrap()
            .disjoint_union(&Family::Path(2).build().unwrap());
        assert!(!g.component_is_bipartite(0));
        assert!(g.component_is_bipartite(3));
    }

    #[test]
    fn labels() {
        let g = Graph::edgeless(2)
            .with_labels(vec!["a".into(), "b".into()])
            .unwrap();
        assert_eq!(g.label(1), "b");
        assert_eq!(Graph::edgeless(2).label(1), "1");
        assert!(Graph::edgeless(2).with_labels(vec![]).is_err());
    }
}
