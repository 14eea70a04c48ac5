use thiserror::Error;

/// Errors raised by graph construction, analysis and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HhError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("seed set must not be empty")]
    EmptySeedSet,

    #[error("graph has no non-hub vertices (n = {n})")]
    NoNonHubVertices { n: usize },

    #[error("oracle capacity exceeded: graph has {n} vertices, limit is {max}")]
    Capacity { n: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("weight overflow on edge ({u}, {v})")]
    WeightOverflow { u: usize, v: usize },

    #[error("tolerance {tau_new} at vertex {vertex} is below the baseline {tau_base}")]
    ToleranceNotDominating { vertex: usize, tau_base: u64, tau_new: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = HhError> = std::result::Result<T, E>;

pub(crate) fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(HhError::VertexOutOfRange { vertex: v, n })
    }
}
