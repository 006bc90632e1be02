//! Exact algebra: Z[q], canonical elements of Q(q), truncated Z[[q]] and
//! fraction-free matrix elimination.

mod json;
pub mod matrix;
mod modular;
pub mod polynomial;
pub mod rational;
pub mod series;

pub use matrix::PolyMatrix;
pub use polynomial::IntPoly;
pub use rational::RationalFunction;
pub use series::TruncatedSeries;
