use thiserror::Error;

/// Errors raised by the simulation, analysis and sweep layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A parameter lies outside its admissible range.
    #[error("domain error: {0}")]
    Domain(String),

    /// A Bloch vector or density matrix is not a valid quantum state.
    #[error("unphysical state: {0}")]
    Physicality(String),

    /// Closed-form evaluation was requested where the eigenvalues coincide.
    #[error("degenerate spectrum (discriminant {discriminant:e}); use the iterative engine")]
    DegenerateRegime { discriminant: f64 },

    /// A requested run exceeds the configured iteration cap.
    #[error("t_max = {requested} exceeds the iteration cap {cap}")]
    Resource { requested: u64, cap: u64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Two independent evaluation paths disagreed.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
