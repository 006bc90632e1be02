//! Magnitude of graphs.
//!
//! The similarity matrix `Z_G(q)` has entry `q^d(x,y)` (zero between
//! components). Magnitude is the sum of the entries of its inverse,
//! `sum(adj Z) / det Z`, and the weighting is the vector of row sums of the
//! inverse. Two independent routes are provided: the determinant route
//! (exact rational function) and the alternating-walk route (truncated power
//! series), which serve as cross-checks for each other.

mod closed_form;
mod inclusion_exclusion;
mod whitney;

pub use closed_form::ClosedForm;
pub use inclusion_exclusion::{check_inclusion_exclusion, IeReport, IeVerdict};
pub use whitney::{
    twist_partition, whitney_weight_transform, TwistClass, TwistPartition, TwistTransform,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{ExtDistance, Graph};
use crate::poly::{IntPoly, PolyMatrix, RationalFunction, TruncatedSeries};

/// Series order used when none is requested.
pub const DEFAULT_SERIES_ORDER: usize = 16;

/// `q^d`, with `q^∞ = 0`.
pub fn q_power(d: ExtDistance) -> IntPoly {
    match d {
        ExtDistance::Finite(k) => IntPoly::q_pow(k),
        ExtDistance::Unreachable => IntPoly::zero(),
    }
}

/// The similarity matrix `Z_G(q)`.
pub fn z_matrix(g: &Graph) -> PolyMatrix {
    let d = g.distances();
    PolyMatrix::from_fn(g.vertex_count(), g.vertex_count(), |x, y| {
        q_power(d.get(x, y))
    })
}

/// `|G|` in canonical form. The empty graph has magnitude 0.
///
/// `sm(adj Z)` and `det Z` come from the multi-modular route, which is
/// exact and much faster than fraction-free elimination once entries have
/// high degree; [`magnitude_rational_bareiss`] computes the same pair by
/// Bareiss elimination.
pub fn magnitude_rational(g: &Graph) -> RationalFunction {
    let z = z_matrix(g);
    match z.det_and_adjugate_sum_modular() {
        Some((det, adj_sum)) => {
            RationalFunction::new(adj_sum, det).expect("det Z has constant term 1")
        }
        None => magnitude_rational_bareiss(g),
    }
}

/// `|G|` through fraction-free elimination of `Z_G(q)` and its bordered
/// matrix.
pub fn magnitude_rational_bareiss(g: &Graph) -> RationalFunction {
    let (det, adj_sum) = z_matrix(g)
        .det_and_adjugate_sum()
        .expect("similarity matrix is square");
    RationalFunction::new(adj_sum, det).expect("det Z has constant term 1")
}

/// Per-vertex weights solving `sum_y q^d(x,y) w(y) = 1` for every `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weighting {
    weights: Vec<RationalFunction>,
}

impl Weighting {
    pub fn new(weights: Vec<RationalFunction>) -> Self {
        Weighting { weights }
    }

    pub fn weights(&self) -> &[RationalFunction] {
        &self.weights
    }

    pub fn get(&self, v: usize) -> &RationalFunction {
        &self.weights[v]
    }

    pub fn total(&self) -> RationalFunction {
        self.weights.iter().sum()
    }

    pub fn into_inner(self) -> Vec<RationalFunction> {
        self.weights
    }
}

pub fn weighting(g: &Graph) -> Weighting {
    Weighting::new(
        z_matrix(g)
            .cramer_row_sums()
            .expect("similarity matrix is nonsingular"),
    )
}

/// Whether `w` satisfies the weighting equations of `g` exactly. A weighting
/// is unique when it exists, so a `true` answer certifies `w` as the
/// weighting and its total as the magnitude.
pub fn verify_weighting(g: &Graph, w: &[RationalFunction]) -> bool {
    if w.len() != g.vertex_count() {
        return false;
    }
    let d = g.distances();
    let one = RationalFunction::one();
    (0..g.vertex_count()).all(|x| {
        // group by distance so each power of q multiplies one partial sum
        let mut by_distance: Vec<RationalFunction> = Vec::new();
        for (y, wy) in w.iter().enumerate() {
            if let Some(k) = d.get(x, y).finite() {
                if by_distance.len() <= k {
                    by_distance.resize(k + 1, RationalFunction::zero());
                }
                by_distance[k] = &by_distance[k] + wy;
            }
        }
        let lhs: RationalFunction = by_distance
            .into_iter()
            .enumerate()
            .map(|(k, s)| s * RationalFunction::from_poly(IntPoly::q_pow(k)))
            .sum();
        lhs == one
    })
}

/// Magnitude as a truncated series by the alternating-walk expansion
/// `sum_k (-1)^k sum(B^k)`, where `B` is `Z_G` with its diagonal zeroed.
///
/// Every nonzero entry of `B` has valuation at least 1, so `B^k` vanishes
/// below `q^k` and the sum stops at `k = order`. This never touches a
/// determinant.
pub fn magnitude_series_oracle(g: &Graph, order: usize) -> TruncatedSeries {
    let n = g.vertex_count();
    let d = g.distances();
    // row[x][j] is the q^j coefficient of (1^T B^k)_x
    let mut row: Vec<Vec<BigInt>> = vec![
        {
            let mut c = vec![BigInt::zero(); order + 1];
            c[0] = BigInt::one();
            c
        };
        n
    ];
    let mut total = vec![BigInt::zero(); order + 1];
    for k in 0..=order {
        for r in &row {
            for (t, c) in total.iter_mut().zip(r) {
                if k % 2 == 0 {
                    *t += c;
                } else {
                    *t -= c;
                }
            }
        }
        if k == order {
            break;
        }
        let mut next = vec![vec![BigInt::zero(); order + 1]; n];
        for (x, rx) in row.iter().enumerate() {
            for (y, ny) in next.iter_mut().enumerate() {
                let Some(dist) = d.get(x, y).finite().filter(|&s| s > 0) else {
                    continue;
                };
                for j in 0..=order.saturating_sub(dist) {
                    if !rx[j].is_zero() {
                        ny[j + dist] += &rx[j];
                    }
                }
            }
        }
        row = next;
    }
    TruncatedSeries::new(order, total)
}

/// Which computation produced a [`MagnitudeResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MagnitudeSource {
    GenericMatrix,
    ClosedForm,
    SeriesOracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnitudeResult {
    pub rational: RationalFunction,
    pub series: Option<TruncatedSeries>,
    pub source: MagnitudeSource,
}

impl MagnitudeResult {
    /// Magnitude by the determinant route, optionally expanded to `order`.
    ///
    /// With `check` set, the expansion is compared against the walk
    /// oracle and a mismatch is reported as an error.
    pub fn compute(g: &Graph, order: Option<usize>, check: bool) -> Result<Self> {
        let rational = magnitude_rational(g);
        let series = match order {
            None => None,
            Some(n) => {
                let s = TruncatedSeries::from_rational(&rational, n)?;
                if check {
                    let oracle = magnitude_series_oracle(g, n);
                    if oracle != s {
                        return Err(Error::HypothesisViolation(format!(
                            "series mismatch: determinant route {s}, walk oracle {oracle}"
                        )));
                    }
                }
                Some(s)
            }
        };
        Ok(MagnitudeResult {
            rational,
            series,
            source: MagnitudeSource::GenericMatrix,
        })
    }
}

/// `v(G) / sum_x q^d(g0, x)` for a vertex-transitive `G`.
pub fn vertex_transitive_magnitude(g: &Graph) -> Result<RationalFunction> {
    if !g.is_vertex_transitive() {
        return Err(Error::HypothesisViolation(
            "graph is not vertex-transitive".into(),
        ));
    }
    if g.vertex_count() == 0 {
        return Ok(RationalFunction::zero());
    }
    let d = g.distances();
    let s = d
        .row(0)
        .iter()
        .fold(IntPoly::zero(), |acc, &dist| acc + q_power(dist));
    RationalFunction::new(IntPoly::constant(g.vertex_count() as i64), s)
}

/// The value `|G|(1)` set against the component count `k(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtOneReport {
    pub magnitude: RationalFunction,
    /// `None` when `q = 1` is a pole.
    pub value_at_one: Option<BigRational>,
    pub components: usize,
}

impl AtOneReport {
    pub fn agrees(&self) -> bool {
        self.value_at_one
            .as_ref()
            .is_some_and(|v| *v == BigRational::from_integer(self.components.into()))
    }
}

pub fn connected_components_vs_mag_at_1(g: &Graph) -> AtOneReport {
    let magnitude = magnitude_rational(g);
    let value_at_one = magnitude.evaluate(&BigRational::one()).ok();
    AtOneReport {
        magnitude,
        value_at_one,
        components: g.component_count(),
    }
}

/// `|G ∨ H| = |G| + |H| - 1`.
pub fn magnitude_one_point_join(mg: &RationalFunction, mh: &RationalFunction) -> RationalFunction {
    mg + mh - RationalFunction::one()
}

/// `|G| + |H| - 2/(1+q)`, valid when the glued component of `H` is
/// bipartite; the caller checks that.
pub fn magnitude_bipartite_edge_glue(
    mg: &RationalFunction,
    mh: &RationalFunction,
) -> RationalFunction {
    let k2 = RationalFunction::from_i64s(&[2], &[1, 1]).expect("nonzero denominator");
    mg + mh - k2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::from_i64s(n, d).unwrap()
    }

    fn fam(f: Family) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn z_matrices() {
        let z = z_matrix(&fam(Family::Complete(2)));
        assert_eq!(z.get(0, 1), &IntPoly::from_i64s(&[0, 1]));
        assert_eq!(z_matrix(&Graph::edgeless(2)), PolyMatrix::identity(2));
        let c4 = z_matrix(&fam(Family::Cycle(4)));
        assert_eq!(c4.get(0, 2), &IntPoly::q_pow(2));
        assert_eq!(c4.get(1, 3), &IntPoly::q_pow(2));
        assert_eq!(c4.get(0, 1), &IntPoly::q_pow(1));
    }

    #[test]
    fn magnitudes() {
        assert_eq!(
            magnitude_rational(&fam(Family::Complete(5))),
            rf(&[5], &[1, 4])
        );
        assert_eq!(magnitude_rational(&fam(Family::WGraph)), rf(&[6], &[1, 4]));
        assert_eq!(
            magnitude_rational(&Graph::empty()),
            RationalFunction::zero()
        );
        assert_eq!(magnitude_rational(&Graph::edgeless(7)), rf(&[7], &[1]));
        assert_eq!(
            magnitude_rational(&fam(Family::Cycle(4))),
            rf(&[4], &[1, 2, 1])
        );
        let c3 = fam(Family::Cycle(3));
        let two = c3.edge_glue((0, 1), &c3, (0, 1)).unwrap();
        assert_eq!(magnitude_rational(&two), rf(&[4, -2], &[1, 2, -1]));
    }

    #[test]
    fn weightings() {
        let p3 = weighting(&fam(Family::Path(3)));
        assert_eq!(
            p3.weights(),
            &[rf(&[1], &[1, 1]), rf(&[1, -1], &[1, 1]), rf(&[1], &[1, 1])]
        );
        assert_eq!(p3.total(), rf(&[3, -1], &[1, 1]));
        let k4 = weighting(&fam(Family::Complete(4)));
        assert!(k4.weights().iter().all(|w| *w == rf(&[1], &[1, 3])));
        assert!(weighting(&Graph::edgeless(3))
            .weights()
            .iter()
            .all(|w| *w == RationalFunction::one()));
    }

    #[test]
    fn weighting_verification() {
        let k2 = fam(Family::Complete(2));
        assert!(!verify_weighting(
            &k2,
            &[RationalFunction::one(), RationalFunction::one()]
        ));
        let pet = fam(Family::Petersen);
        let uniform = vec![rf(&[1], &[1, 3, 6]); 10];
        assert!(verify_weighting(&pet, &uniform));
        assert!(verify_weighting(&pet, weighting(&pet).weights()));
        assert!(!verify_weighting(&pet, &uniform[..9]));
    }

    #[test]
    fn series_oracle() {
        assert_eq!(
            magnitude_series_oracle(&fam(Family::Complete(3)), 2),
            TruncatedSeries::from_i64s(2, &[3, -6, 12])
        );
        assert_eq!(
            magnitude_series_oracle(&fam(Family::Petersen), 4),
            TruncatedSeries::from_i64s(4, &[10, -30, 30, 90, -450])
        );
        assert_eq!(
            magnitude_series_oracle(&fam(Family::WGraph), 3),
            TruncatedSeries::from_i64s(3, &[6, -24, 96, -384])
        );
        assert_eq!(
            magnitude_series_oracle(&Graph::empty(), 2),
            TruncatedSeries::zero(2)
        );
    }

    #[test]
    fn transitive_formula() {
        let c6 = fam(Family::Cycle(6));
        // 6(q-1)/((q^3-1)(q+1))
        let expect = RationalFunction::new(
            IntPoly::from_i64s(&[-6, 6]),
            IntPoly::from_i64s(&[-1, 0, 0, 1]) * IntPoly::from_i64s(&[1, 1]),
        )
        .unwrap();
        assert_eq!(vertex_transitive_magnitude(&c6).unwrap(), expect);
        assert_eq!(magnitude_rational(&c6), expect);
        assert_eq!(
            vertex_transitive_magnitude(&fam(Family::Petersen)).unwrap(),
            rf(&[10], &[1, 3, 6])
        );
        assert_eq!(
            vertex_transitive_magnitude(&fam(Family::Complete(1))).unwrap(),
            rf(&[1], &[1])
        );
        assert!(matches!(
            vertex_transitive_magnitude(&fam(Family::Path(3))),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn value_at_one() {
        let w = connected_components_vs_mag_at_1(&fam(Family::WGraph));
        assert_eq!(w.value_at_one, Some(BigRational::new(6.into(), 5.into())));
        assert_eq!(w.components, 1);
        assert!(!w.agrees());
        let tree = connected_components_vs_mag_at_1(&fam(Family::Path(5)));
        assert!(tree.agrees());
    }

    #[test]
    fn derived_formulas() {
        let k3 = magnitude_rational(&fam(Family::Complete(3)));
        let k2 = magnitude_rational(&fam(Family::Complete(2)));
        let j = magnitude_one_point_join(&magnitude_one_point_join(&k3, &k2), &k2);
        assert_eq!(j, rf(&[5, 5, -4], &[1, 3, 2]));
        assert_eq!(magnitude_one_point_join(&RationalFunction::one(), &k3), k3);
        assert_eq!(magnitude_bipartite_edge_glue(&k2, &k2), k2);
    }
}
