//! Graph combinators.
//!
//! Every gluing keeps the first graph's vertex indices. Vertices of the
//! second graph that are identified with a vertex of the first take that
//! (lower) index; the rest follow in their original relative order.

use super::Graph;
use crate::error::{Error, Result};

fn merged_labels(g: &Graph, h: &Graph, h_map: &[usize], n: usize) -> Option<Vec<String>> {
    if g.labels().is_none() && h.labels().is_none() {
        return None;
    }
    let mut labels: Vec<String> = (0..g.vertex_count()).map(|v| g.label(v)).collect();
    labels.resize(n, String::new());
    for (v, &t) in h_map.iter().enumerate() {
        if t >= g.vertex_count() {
            labels[t] = h.label(v);
        }
    }
    Some(labels)
}

/// Disjoint union of `g` and `h` with `h`'s vertex `b` identified to `g`'s
/// vertex `a` for each `(a, b)` in `pairs`. Returns the glued graph and the
/// image of every `h` vertex.
fn glue(g: &Graph, h: &Graph, pairs: &[(usize, usize)]) -> Result<(Graph, Vec<usize>)> {
    let ng = g.vertex_count();
    let mut h_map = vec![usize::MAX; h.vertex_count()];
    for &(a, b) in pairs {
        g.check_vertex(a)?;
        h.check_vertex(b)?;
        if h_map[b] != usize::MAX || h_map.contains(&a) {
            return Err(Error::InvalidParameter(
                "each vertex may be identified at most once".into(),
            ));
        }
        h_map[b] = a;
    }
    let mut next = ng;
    for m in h_map.iter_mut().filter(|m| **m == usize::MAX) {
        *m = next;
        next += 1;
    }
    let mut edges = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (h_map[u], h_map[v])));
    let glued = Graph::from_edge_list(next, &edges)?;
    let glued = match merged_labels(g, h, &h_map, next) {
        Some(labels) => glued.with_labels(labels)?,
        None => glued,
    };
    Ok((glued, h_map))
}

impl Graph {
    /// `self ⊔ h`; `h`'s vertices are offset by `self.vertex_count()`.
    pub fn disjoint_union(&self, h: &Graph) -> Graph {
        glue(self, h, &[]).expect("disjoint union cannot fail").0
    }

    /// `self □ h` with vertex `(x, y)` at index `x * h.vertex_count() + y`.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let nh = h.vertex_count();
        let mut pairs = Vec::new();
        for x in 0..self.vertex_count() {
            pairs.extend(h.edges().iter().map(|&(y, y2)| (x * nh + y, x * nh + y2)));
        }
        for &(x, x2) in self.edges() {
            pairs.extend((0..nh).map(|y| (x * nh + y, x2 * nh + y)));
        }
        let g = Graph::from_edge_list(self.vertex_count() * nh, &pairs)
            .expect("product edges are in range");
        if self.labels().is_none() && h.labels().is_none() {
            return g;
        }
        let labels = (0..self.vertex_count())
            .flat_map(|x| (0..nh).map(move |y| (x, y)))
            .map(|(x, y)| format!("({},{})", self.label(x), h.label(y)))
            .collect();
        g.with_labels(labels).expect("label count matches")
    }

    /// `self ∨ h`, identifying vertex `x` of `self` with vertex `y` of `h`.
    pub fn one_point_join(&self, x: usize, h: &Graph, y: usize) -> Result<Graph> {
        Ok(glue(self, h, &[(x, y)])?.0)
    }

    /// Identifies edge `eg = (a, b)` of `self` with edge `eh = (c, d)` of `h`,
    /// `a` with `c` and `b` with `d`.
    pub fn edge_glue(&self, eg: (usize, usize), h: &Graph, eh: (usize, usize)) -> Result<Graph> {
        if !self.has_edge(eg.0, eg.1) {
            return Err(Error::NotAnEdge(eg.0, eg.1));
        }
        if !h.has_edge(eh.0, eh.1) {
            return Err(Error::NotAnEdge(eh.0, eh.1));
        }
        Ok(glue(self, h, &[(eg.0, eh.0), (eg.1, eh.1)])?.0)
    }
}

/// Two doubly-pointed graphs `(G, g+, g-)` and `(H, h+, h-)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSpec {
    pub g: Graph,
    pub g_plus: usize,
    pub g_minus: usize,
    pub h: Graph,
    pub h_plus: usize,
    pub h_minus: usize,
}

impl TwistSpec {
    pub fn new(
        g: Graph,
        g_plus: usize,
        g_minus: usize,
        h: Graph,
        h_plus: usize,
        h_minus: usize,
    ) -> Result<Self> {
        g.check_vertex(g_plus)?;
        g.check_vertex(g_minus)?;
        h.check_vertex(h_plus)?;
        h.check_vertex(h_minus)?;
        if g_plus == g_minus || h_plus == h_minus {
            return Err(Error::InvalidParameter(
                "distinguished vertices must be distinct".into(),
            ));
        }
        Ok(TwistSpec {
            g,
            g_plus,
            g_minus,
            h,
            h_plus,
            h_minus,
        })
    }

    /// Builds both sides of the Whitney twist.
    pub fn build(&self) -> WhitneyTwist {
        let (x, h_in_x) = glue(
            &self.g,
            &self.h,
            &[(self.g_plus, self.h_plus), (self.g_minus, self.h_minus)],
        )
        .expect("spec vertices validated");
        let (y, h_in_y) = glue(
            &self.g,
            &self.h,
            &[(self.g_plus, self.h_minus), (self.g_minus, self.h_plus)],
        )
        .expect("spec vertices validated");
        WhitneyTwist {
            x,
            y,
            gluing: (self.g_plus, self.g_minus),
            g_count: self.g.vertex_count(),
            h_in_x,
            h_in_y,
        }
    }
}

/// The graphs `X` (gluing `g+~h+`, `g-~h-`) and `Y` (gluing `g+~h-`,
/// `g-~h+`).
///
/// Both graphs share their vertex numbering: `G`'s vertices keep their
/// indices and the non-gluing vertices of `H` land on the same indices in
/// `X` and `Y`, so the canonical bijection between them is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhitneyTwist {
    pub x: Graph,
    pub y: Graph,
    /// `(g+, g-)` as vertices of both `X` and `Y`.
    pub gluing: (usize, usize),
    g_count: usize,
    h_in_x: Vec<usize>,
    h_in_y: Vec<usize>,
}

impl WhitneyTwist {
    pub fn gluing_points_adjacent(&self) -> bool {
        self.x.has_edge(self.gluing.0, self.gluing.1)
    }

    /// Vertices of `X` coming from `G`.
    pub fn g_side(&self) -> Vec<usize> {
        (0..self.g_count).collect()
    }

    /// Vertices of `X` coming from `H`, indexed by `H` vertex.
    pub fn h_side_in_x(&self) -> &[usize] {
        &self.h_in_x
    }

    /// Vertices of `Y` coming from `H`, indexed by `H` vertex.
    pub fn h_side_in_y(&self) -> &[usize] {
        &self.h_in_y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ExtDistance, Family};

    fn fam(f: Family) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn unions() {
        let k1 = fam(Family::Complete(1));
        assert_eq!(k1.disjoint_union(&k1), Graph::edgeless(2));
        let c3 = fam(Family::Cycle(3));
        let u = c3.disjoint_union(&c3);
        assert_eq!(
            (u.vertex_count(), u.edge_count(), u.component_count()),
            (6, 6, 2)
        );
        let w = fam(Family::WGraph);
        let five = (1..5).fold(w.clone(), |acc, _| acc.disjoint_union(&w));
        assert_eq!(five.vertex_count(), 30);
        assert_eq!(five.component_count(), 5);
        assert_eq!(Graph::empty().disjoint_union(&c3), c3);
    }

    #[test]
    fn products() {
        let k2 = fam(Family::Complete(2));
        let c4 = k2.cartesian_product(&k2);
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert_eq!(c4.component_count(), 1);
        let h = fam(Family::Petersen);
        assert_eq!(fam(Family::Complete(1)).cartesian_product(&h), h);
        let prism = k2.cartesian_product(&fam(Family::Complete(3)));
        assert_eq!((prism.vertex_count(), prism.edge_count()), (6, 9));
        assert!((0..6).all(|v| prism.degree(v) == 3));
    }

    #[test]
    fn joins() {
        let k2 = fam(Family::Complete(2));
        let p3 = k2.one_point_join(0, &k2, 0).unwrap();
        assert_eq!((p3.vertex_count(), p3.edge_count()), (3, 2));
        assert_eq!(p3.distances().max_finite(), 2);
        let tail = fam(Family::Cycle(3)).one_point_join(2, &k2, 1).unwrap();
        assert_eq!((tail.vertex_count(), tail.edge_count()), (4, 4));
        let h = fam(Family::Petersen);
        assert_eq!(
            fam(Family::Complete(1)).one_point_join(0, &h, 0).unwrap(),
            h
        );
        assert!(k2.one_point_join(2, &k2, 0).is_err());
    }

    #[test]
    fn edge_gluing() {
        let c3 = fam(Family::Cycle(3));
        let two = c3.edge_glue((0, 1), &c3, (0, 1)).unwrap();
        assert_eq!((two.vertex_count(), two.edge_count()), (4, 5));
        let b = c3
            .edge_glue((0, 1), &fam(Family::Cycle(4)), (0, 1))
            .unwrap();
        assert_eq!((b.vertex_count(), b.edge_count()), (5, 6));
        let k2 = fam(Family::Complete(2));
        assert_eq!(k2.edge_glue((0, 1), &k2, (0, 1)).unwrap(), k2);
        assert_eq!(
            k2.edge_glue((0, 1), &c3, (0, 5)),
            Err(Error::NotAnEdge(0, 5))
        );
        assert!(fam(Family::Path(3)).edge_glue((0, 2), &k2, (0, 1)).is_err());
    }

    #[test]
    fn whitney_twists() {
        let k2 = fam(Family::Complete(2));
        let t = TwistSpec::new(k2.clone(), 0, 1, k2.clone(), 0, 1)
            .unwrap()
            .build();
        assert_eq!(t.x, k2);
        assert_eq!(t.y, k2);
        assert!(t.gluing_points_adjacent());

        let p3 = fam(Family::Path(3));
        let t = TwistSpec::new(p3.clone(), 0, 2, p3, 0, 2).unwrap().build();
        for g in [&t.x, &t.y] {
            assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
            assert!((0..4).all(|v| g.degree(v) == 2));
        }
        assert_eq!(t.x.distances().get(0, 2), ExtDistance::Finite(2));
        assert!(!t.gluing_points_adjacent());
        assert!(TwistSpec::new(k2.clone(), 0, 0, k2, 0, 1).is_err());
    }
}
