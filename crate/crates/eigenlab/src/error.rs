use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate body: {0}")]
    DegenerateBody(String),

    #[error("flat hull: input points are affinely dependent")]
    FlatHull,

    #[error("empty cross-section")]
    EmptyCrossSection,

    #[error("grid too coarse: spacing {spacing} exceeds inradius/8 = {limit}")]
    GridTooCoarse { spacing: f64, limit: f64 },

    #[error("eigensolver did not converge: residual {residual:.3e} after {iterations} iterations")]
    NoConvergence { residual: f64, iterations: usize },

    #[error("no convergence order: eigenvalue ladder is not monotone")]
    NoConvergenceOrder,

    #[error("section infeasible: {0}")]
    SectionInfeasible(String),

    #[error("level too high: {0} nodes above level, need at least dim+1")]
    LevelTooHigh(usize),

    #[error("height not concave at base vertex {0}")]
    HeightNotConcave(usize),

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("linear program: {0}")]
    LinearProgram(String),

    #[error("test function construction: {0}")]
    TestFunction(String),

    #[error("config: {0}")]
    Config(String),

    #[error("parse: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
