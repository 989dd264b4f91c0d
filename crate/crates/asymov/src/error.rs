use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Geometry that makes the requested quantity undefined (coincident
    /// points, equal AoDs, zero-length baselines).
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    /// Invalid or unreachable configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// Malformed input data (lengths, ranges, schema).
    #[error("input error: {0}")]
    Input(String),

    /// The LoS reference path is missing from one or more frames.
    #[error("missing LoS reference: {0}")]
    MissingReference(String),

    /// Not enough usable multipath components for the requested solve.
    #[error("insufficient paths: need {needed}, have {available}")]
    InsufficientPaths { needed: usize, available: usize },

    /// Not enough frames in the processing window.
    #[error("insufficient frames: have {0}, need at least 2")]
    InsufficientFrames(usize),

    /// A solve whose conditioning margin fell below the configured tolerance.
    #[error("ill-conditioned: {0}")]
    IllConditioned(String),

    /// Measurements incompatible with the supplied side information.
    #[error("inconsistent measurement: {0}")]
    InconsistentMeasurement(String),

    /// Operation requires uniform frame timing.
    #[error("unsupported timing: {0}")]
    UnsupportedTiming(String),

    /// Golay pair length that is not a power of two.
    #[error("unsupported length {0}: expected a power of two >= 2")]
    UnsupportedLength(usize),

    /// Trace or config parse failure, with a 1-based line number when known.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
