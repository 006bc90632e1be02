//! Subgraphs given by explicit vertex and edge subsets, with the convexity
//! and projection predicates.

use std::collections::BTreeSet;

use super::{DistanceMatrix, Graph};
use crate::error::{Error, Result};

/// A subgraph of `host`: a vertex subset plus a subset of host edges whose
/// endpoints are all selected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphSelection<'g> {
    host: &'g Graph,
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl<'g> SubgraphSelection<'g> {
    pub fn new(host: &'g Graph, vertices: &[usize], edges: &[(usize, usize)]) -> Result<Self> {
        let vset: BTreeSet<usize> = vertices.iter().copied().collect();
        for &v in &vset {
            host.check_vertex(v)
                .map_err(|_| Error::InvalidSelection(format!("vertex {v} not in host")))?;
        }
        let mut eset = BTreeSet::new();
        for &(u, v) in edges {
            if !host.has_edge(u, v) {
                return Err(Error::InvalidSelection(format!(
                    "{{{u}, {v}}} is not a host edge"
                )));
            }
            if !vset.contains(&u) || !vset.contains(&v) {
                return Err(Error::InvalidSelection(format!(
                    "edge {{{u}, {v}}} has an unselected endpoint"
                )));
            }
            eset.insert((u.min(v), u.max(v)));
        }
        Ok(SubgraphSelection {
            host,
            vertices: vset.into_iter().collect(),
            edges: eset.into_iter().collect(),
        })
    }

    /// The induced subgraph on `vertices`.
    pub fn induced(host: &'g Graph, vertices: &[usize]) -> Result<Self> {
        let vset: BTreeSet<usize> = vertices.iter().copied().collect();
        let edges: Vec<_> = host
            .edges()
            .iter()
            .copied()
            .filter(|(u, v)| vset.contains(u) && vset.contains(v))
            .collect();
        Self::new(host, vertices, &edges)
    }

    pub fn full(host: &'g Graph) -> Self {
        SubgraphSelection {
            host,
            vertices: (0..host.vertex_count()).collect(),
            edges: host.edges().to_vec(),
        }
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    fn same_host(&self, other: &Self) -> Result<()> {
        if self.host != other.host {
            return Err(Error::InvalidSelection(
                "selections have different hosts".into(),
            ));
        }
        Ok(())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_host(other)?;
        let v: Vec<_> = self
            .vertices
            .iter()
            .chain(&other.vertices)
            .copied()
            .collect();
        let e: Vec<_> = self.edges.iter().chain(&other.edges).copied().collect();
        Self::new(self.host, &v, &e)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_host(other)?;
        let v: Vec<_> = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| other.contains_vertex(v))
            .collect();
        let e: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|e| other.edges.binary_search(e).is_ok())
            .collect();
        Self::new(self.host, &v, &e)
    }

    /// Whether vertex and edge sets are those of the whole host.
    pub fn is_full(&self) -> bool {
        self.vertices.len() == self.host.vertex_count()
            && self.edges.len() == self.host.edge_count()
    }

    /// The selection as a standalone graph, and the host index of each of
    /// its vertices.
    pub fn to_graph(&self) -> (Graph, Vec<usize>) {
        let local = |v: usize| self.vertices.binary_search(&v).expect("selected vertex");
        let pairs: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (local(u), local(v)))
            .collect();
        let g = Graph::from_edge_list(self.vertices.len(), &pairs).expect("closed selection");
        let g = match self.host.labels() {
            Some(labels) => g
                .with_labels(self.vertices.iter().map(|&v| labels[v].clone()).collect())
                .expect("label count matches"),
            None => g,
        };
        (g, self.vertices.clone())
    }

    /// True when the selection's own shortest-path metric agrees with the
    /// host metric on every pair of selected vertices, unreachable pairs
    /// included.
    pub fn is_convex(&self) -> bool {
        self.is_convex_with(&self.host.distances())
    }

    pub(crate) fn is_convex_with(&self, host_d: &DistanceMatrix) -> bool {
        let (sub, map) = self.to_graph();
        let sub_d = sub.distances();
        (0..map.len())
            .all(|i| (i + 1..map.len()).all(|j| sub_d.get(i, j) == host_d.get(map[i], map[j])))
    }

    /// Projection of the host onto this (convex) selection.
    ///
    /// Returns `Ok(None)` when the host does not project, and an error when
    /// the selection is not convex.
    pub fn projection(&self) -> Result<Option<Projection>> {
        let d = self.host.distances();
        if !self.is_convex_with(&d) {
            return Err(Error::NotConvex);
        }
        let mut map = vec![None; self.host.vertex_count()];
        for x in 0..self.host.vertex_count() {
            let nearest = self.vertices.iter().copied().min_by_key(|&u| d.get(x, u));
            let Some(star) = nearest else { break };
            let to_star = d.get(x, star);
            if !to_star.is_finite() {
                continue;
            }
            let factors = self
                .vertices
                .iter()
                .all(|&u| d.get(x, u) == to_star + d.get(star, u));
            if !factors {
                return Ok(None);
            }
            map[x] = Some(star);
        }
        Ok(Some(Projection { map }))
    }
}

/// The projection map `π` from the vertices at finite distance from a
/// convex subgraph onto that subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    map: Vec<Option<usize>>,
}

impl Projection {
    /// `π(x)`, or `None` when `x` lies outside the ball of finite radius.
    pub fn get(&self, x: usize) -> Option<usize> {
        self.map[x]
    }

    /// Vertices at finite distance from the target.
    pub fn ball(&self) -> Vec<usize> {
        (0..self.map.len())
            .filter(|&x| self.map[x].is_some())
            .collect()
    }

    /// `π^{-1}(u)`.
    pub fn fibre(&self, u: usize) -> Vec<usize> {
        (0..self.map.len())
            .filter(|&x| self.map[x] == Some(u))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn selection_validation() {
        let c3 = Family::Cycle(3).build().unwrap();
        assert!(SubgraphSelection::new(&c3, &[0, 1], &[(0, 2)]).is_err());
        assert!(SubgraphSelection::new(&c3, &[0, 5], &[]).is_err());
        let edge = SubgraphSelection::new(&c3, &[0, 1], &[(1, 0)]).unwrap();
        assert_eq!(edge.edges(), &[(0, 1)]);
    }

    #[test]
    fn convexity() {
        let c3 = Family::Cycle(3).build().unwrap();
        assert!(SubgraphSelection::new(&c3, &[0, 1], &[(0, 1)])
            .unwrap()
            .is_convex());
        let two_path = SubgraphSelection::new(&c3, &[0, 1, 2], &[(0, 2), (1, 2)]).unwrap();
        assert!(!two_path.is_convex());
        assert!(SubgraphSelection::full(&c3).is_convex());
        assert!(SubgraphSelection::new(&c3, &[2], &[]).unwrap().is_convex());
        // two isolated vertices of C3: unreachable inside, distance 1 outside
        assert!(!SubgraphSelection::new(&c3, &[0, 1], &[])
            .unwrap()
            .is_convex());

        let two = c3.edge_glue((0, 1), &c3, (0, 1)).unwrap();
        let tri = SubgraphSelection::induced(&two, &[0, 1, 2]).unwrap();
        assert!(tri.is_convex());
    }

    #[test]
    fn projections() {
        let c3 = Family::Cycle(3).build().unwrap();
        let edge = SubgraphSelection::induced(&c3, &[0, 1]).unwrap();
        assert_eq!(edge.projection().unwrap(), None);

        let c6 = Family::Cycle(6).build().unwrap();
        let e = SubgraphSelection::induced(&c6, &[0, 1]).unwrap();
        let pi = e.projection().unwrap().unwrap();
        assert_eq!(pi.get(2), Some(1));
        assert_eq!(pi.get(3), Some(1));
        assert_eq!(pi.get(4), Some(0));
        assert_eq!(pi.fibre(0), vec![0, 4, 5]);

        let bad = SubgraphSelection::new(&c3, &[0, 1, 2], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(bad.projection(), Err(Error::NotConvex));
    }

    #[test]
    fn projection_ignores_other_components() {
        let g = Family::Path(3)
            .build()
            .unwrap()
            .disjoint_union(&Graph::edgeless(1));
        let end = SubgraphSelection::induced(&g, &[0]).unwrap();
        let pi = end.projection().unwrap().unwrap();
        assert_eq!(pi.ball(), vec![0, 1, 2]);
        assert_eq!(pi.get(3), None);
    }
}
