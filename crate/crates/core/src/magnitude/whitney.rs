//! Weight transform across a Whitney twist with adjacent gluing points.
//!
//! For each side `S` of the twist (with gluing points `s+`, `s-`), every
//! vertex `s` gets `δ(s) = min(d(s, s+), d(s, s-))` and a class `+`, `0`
//! or `-` by the sign of `d(s, s-) - d(s, s+)`. With
//! `u_c = sum over class c of q^δ(s) w_X(s)`, the weighting of `Y` is `w_X`
//! away from the gluing points and
//!
//! ```text
//! w_Y(g+) = w_X(g+) - u+ + u-
//! w_Y(g-) = w_X(g-) - u- + u+
//! ```
//!
//! at them (computed on the `G` side; the `H` side gives the same values).

use serde::Serialize;

use super::{q_power, Weighting};
use crate::error::{Error, Result};
use crate::graph::{ExtDistance, Graph, WhitneyTwist};
use crate::poly::RationalFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TwistClass {
    Plus,
    Zero,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistPartition {
    /// The side's vertices, as vertices of `X`.
    pub vertices: Vec<usize>,
    pub delta: Vec<ExtDistance>,
    pub classes: Vec<TwistClass>,
    pub u_plus: RationalFunction,
    pub u_zero: RationalFunction,
    pub u_minus: RationalFunction,
}

impl TwistPartition {
    pub fn class_of(&self, v: usize) -> Option<TwistClass> {
        self.vertices
            .iter()
            .position(|&s| s == v)
            .map(|i| self.classes[i])
    }

    pub fn delta_of(&self, v: usize) -> Option<ExtDistance> {
        self.vertices
            .iter()
            .position(|&s| s == v)
            .map(|i| self.delta[i])
    }
}

/// Partitions one side of a twist, given as vertices of `x`, using the
/// metric of `x` and its weighting `w`.
///
/// The gluing points must be adjacent in `x`; each side together with the
/// gluing edge is then convex in `x`, so the metric of `x` is the side's
/// own metric.
pub fn twist_partition(
    x: &Graph,
    gluing: (usize, usize),
    side: &[usize],
    w: &Weighting,
) -> Result<TwistPartition> {
    let (plus, minus) = gluing;
    x.check_vertex(plus)?;
    x.check_vertex(minus)?;
    if !x.has_edge(plus, minus) {
        return Err(Error::HypothesisViolation(
            "gluing points are not adjacent".into(),
        ));
    }
    if w.weights().len() != x.vertex_count() {
        return Err(Error::InvalidParameter(
            "weighting size does not match X".into(),
        ));
    }
    let d = x.distances();
    let mut delta = Vec::with_capacity(side.len());
    let mut classes = Vec::with_capacity(side.len());
    let mut sums = [
        RationalFunction::zero(),
        RationalFunction::zero(),
        RationalFunction::zero(),
    ];
    for &s in side {
        x.check_vertex(s)?;
        let (dp, dm) = (d.get(s, plus), d.get(s, minus));
        let class = match dp.cmp(&dm) {
            std::cmp::Ordering::Less => TwistClass::Plus,
            std::cmp::Ordering::Equal => TwistClass::Zero,
            std::cmp::Ordering::Greater => TwistClass::Minus,
        };
        let ds = dp.min(dm);
        let slot = &mut sums[class as usize];
        *slot = &*slot + &(RationalFunction::from_poly(q_power(ds)) * w.get(s));
        delta.push(ds);
        classes.push(class);
    }
    let [u_plus, u_zero, u_minus] = sums;
    Ok(TwistPartition {
        vertices: side.to_vec(),
        delta,
        classes,
        u_plus,
        u_zero,
        u_minus,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistTransform {
    pub g_partition: TwistPartition,
    pub h_partition: TwistPartition,
    /// Candidate weighting of `Y` under the identity bijection of
    /// [`WhitneyTwist`] vertex numbering.
    pub weights_y: Weighting,
}

pub fn whitney_weight_transform(twist: &WhitneyTwist, w_x: &Weighting) -> Result<TwistTransform> {
    let (plus, minus) = twist.gluing;
    let g_partition = twist_partition(&twist.x, twist.gluing, &twist.g_side(), w_x)?;
    let h_partition = twist_partition(&twist.x, twist.gluing, twist.h_side_in_x(), w_x)?;
    let shift_g = &g_partition.u_minus - &g_partition.u_plus;
    let new_plus = w_x.get(plus) + &shift_g;
    let new_minus = w_x.get(minus) - &shift_g;

    // in Y, g+ is glued to h-, so the H-side formula lands on h- = g-'s partner
    let shift_h = &h_partition.u_minus - &h_partition.u_plus;
    if new_plus != w_x.get(minus) - &shift_h || new_minus != w_x.get(plus) + &shift_h {
        return Err(Error::HypothesisViolation(
            "G-side and H-side transforms disagree".into(),
        ));
    }
    let mut weights = w_x.weights().to_vec();
    weights[plus] = new_plus;
    weights[minus] = new_minus;
    Ok(TwistTransform {
        g_partition,
        h_partition,
        weights_y: Weighting::new(weights),
    })
}
