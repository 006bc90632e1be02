//! Exact magnitude of finite graphs.
//!
//! [`poly`] supplies exact arithmetic in Z[q], Q(q) and truncated Z[[q]]
//! plus fraction-free elimination; [`graph`] the graphs, their metric and
//! constructions; [`magnitude`] the invariant itself with its weightings,
//! closed forms and theorem checkers; [`dsl`] a small expression language
//! for naming graphs.

pub mod dsl;
pub mod error;
pub mod graph;
pub mod magnitude;
pub mod poly;

pub use error::{Error, Result};
pub use graph::{
    DistanceMatrix, ExtDistance, Family, Graph, SubgraphSelection, TwistSpec, WhitneyTwist,
};
pub use magnitude::{
    magnitude_rational, magnitude_series_oracle, weighting, MagnitudeResult, Weighting,
};
pub use poly::{IntPoly, PolyMatrix, RationalFunction, TruncatedSeries};
