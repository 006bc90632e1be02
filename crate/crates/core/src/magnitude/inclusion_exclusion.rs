//! Checks `|X| = |G| + |H| - |G ∩ H|` for a decomposition `X = G ∪ H`
//! together with the hypotheses that guarantee it: `G ∩ H` convex in `X`
//! and one side projecting onto `G ∩ H`.

use serde::Serialize;

use super::magnitude_rational;
use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphSelection};
use crate::poly::RationalFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IeVerdict {
    /// Hypotheses hold, so the identity is guaranteed (and was confirmed).
    TheoremApplies,
    /// Hypotheses fail but the identity holds.
    IdentityHoldsAnyway,
    IdentityFails,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IeReport {
    pub covers: bool,
    pub intersection_convex: bool,
    /// Whether `H` projects onto `G ∩ H`; `None` when the intersection is
    /// not convex (projection is then undefined).
    pub h_projects: Option<bool>,
    pub g_projects: Option<bool>,
    pub mag_x: RationalFunction,
    pub mag_g: RationalFunction,
    pub mag_h: RationalFunction,
    pub mag_intersection: RationalFunction,
    pub identity_holds: bool,
    pub verdict: IeVerdict,
}

impl IeReport {
    pub fn theorem_applies(&self) -> bool {
        self.covers
            && self.intersection_convex
            && (self.h_projects == Some(true) || self.g_projects == Some(true))
    }
}

/// Whether `side` (as a graph of its own) projects onto `inter ⊆ side`.
fn side_projects(
    side: &SubgraphSelection<'_>,
    inter: &SubgraphSelection<'_>,
) -> Result<Option<bool>> {
    let (g, map) = side.to_graph();
    let local: Vec<usize> = inter
        .vertices()
        .iter()
        .map(|v| map.binary_search(v).expect("intersection lies in side"))
        .collect();
    let edges: Vec<_> = inter
        .edges()
        .iter()
        .map(|(u, v)| (map.binary_search(u).unwrap(), map.binary_search(v).unwrap()))
        .collect();
    let target = SubgraphSelection::new(&g, &local, &edges)?;
    match target.projection() {
        Ok(p) => Ok(Some(p.is_some())),
        Err(Error::NotConvex) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn check_inclusion_exclusion(
    x: &Graph,
    g_sel: &SubgraphSelection<'_>,
    h_sel: &SubgraphSelection<'_>,
) -> Result<IeReport> {
    if g_sel.host() != x || h_sel.host() != x {
        return Err(Error::InvalidSelection(
            "selections are not subgraphs of X".into(),
        ));
    }
    let covers = g_sel.union(h_sel)?.is_full();
    let inter = g_sel.intersection(h_sel)?;
    let intersection_convex = inter.is_convex();
    let (h_projects, g_projects) = if intersection_convex {
        (side_projects(h_sel, &inter)?, side_projects(g_sel, &inter)?)
    } else {
        (None, None)
    };
    let mag_x = magnitude_rational(x);
    let mag_g = magnitude_rational(&g_sel.to_graph().0);
    let mag_h = magnitude_rational(&h_sel.to_graph().0);
    let mag_intersection = magnitude_rational(&inter.to_graph().0);
    let identity_holds = mag_x == &(&mag_g + &mag_h) - &mag_intersection;
    let mut report = IeReport {
        covers,
        intersection_convex,
        h_projects,
        g_projects,
        mag_x,
        mag_g,
        mag_h,
        mag_intersection,
        identity_holds,
        verdict: IeVerdict::IdentityFails,
    };
    report.verdict = match (report.theorem_applies(), identity_holds) {
        (_, false) => IeVerdict::IdentityFails,
        (true, true) => IeVerdict::TheoremApplies,
        (false, true) => IeVerdict::IdentityHoldsAnyway,
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn two_triangles() {
        let c3 = Family::Cycle(3).build().unwrap();
        let x = c3.edge_glue((0, 1), &c3, (0, 1)).unwrap();
        let g = SubgraphSelection::induced(&x, &[0, 1, 2]).unwrap();
        let h = SubgraphSelection::induced(&x, &[0, 1, 3]).unwrap();
        let r = check_inclusion_exclusion(&x, &g, &h).unwrap();
        assert!(r.covers && r.intersection_convex);
        assert_eq!((r.h_projects, r.g_projects), (Some(false), Some(false)));
        assert!(!r.identity_holds);
        assert_eq!(r.verdict, IeVerdict::IdentityFails);
    }

    #[test]
    fn tree_split() {
        let x = Family::Path(5).build().unwrap();
        let g = SubgraphSelection::induced(&x, &[0, 1, 2]).unwrap();
        let h = SubgraphSelection::induced(&x, &[2, 3, 4]).unwrap();
        let r = check_inclusion_exclusion(&x, &g, &h).unwrap();
        assert_eq!(r.verdict, IeVerdict::TheoremApplies);
    }

    #[test]
    fn not_covering() {
        let x = Family::Path(3).build().unwrap();
        let g = SubgraphSelection::induced(&x, &[0, 1]).unwrap();
        let h = SubgraphSelection::induced(&x, &[2]).unwrap();
        let r = check_inclusion_exclusion(&x, &g, &h).unwrap();
        assert!(!r.covers);
        assert!(!r.theorem_applies());
    }

    #[test]
    fn foreign_selection_is_rejected() {
        let x = Family::Path(3).build().unwrap();
        let other = Family::Cycle(3).build().unwrap();
        let g = SubgraphSelection::full(&other);
        let h = SubgraphSelection::full(&x);
        assert!(check_inclusion_exclusion(&x, &g, &h).is_err());
    }
}
