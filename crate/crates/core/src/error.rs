use thiserror::Error;

/// Errors raised by graph construction, exact algebra and the theorem checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid subgraph selection: {0}")]
    InvalidSelection(String),

    #[error("target subgraph is not convex in its host")]
    NotConvex,

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("both polynomials are zero; gcd is undefined")]
    GcdOfZeros,

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("denominator constant term is not a unit in Z[[q]]")]
    NotInvertibleInPowerSeries,

    #[error("evaluation point is a pole")]
    Pole,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
