use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("genome lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("population is empty")]
    EmptyPopulation,

    #[error("population of size {0} is too small for crossover")]
    PopulationTooSmall(usize),

    #[error("operator pool is empty")]
    EmptyPool,

    #[error("genome does not satisfy the encoding of the problem")]
    InvalidGenome,

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },

    #[error("similarity matrix row {0} has non-positive degree")]
    ZeroDegree(usize),

    #[error("{}line {line}: {message}", path.as_ref().map(|p| format!("{}: ", p.display())).unwrap_or_default())]
    Parse { path: Option<PathBuf>, line: usize, message: String },

    #[error("unsupported EDGE_WEIGHT_TYPE {0:?} (only EUC_2D is supported)")]
    UnsupportedEdgeWeightType(String),

    #[error("search space of {size:.3e} genomes exceeds the brute-force limit of {limit:e}")]
    SpaceTooLarge { size: f64, limit: f64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("traces come from different configurations: {0}")]
    MismatchedConfigs(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { path: None, line, message: message.into() }
    }

    /// Line number for parse errors.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}
