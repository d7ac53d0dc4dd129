//! Crate-wide error type.

/// All fallible operations in this crate return this error.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A text input could not be parsed; carries the source location.
    #[error("parse error at {path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    /// Structurally valid input violating a documented invariant.
    #[error("validation error: {0}")]
    Validation(String),

    /// A requested year (or year range) is not covered by the available data.
    #[error("coverage error: {0}")]
    Coverage(String),

    /// A decay anchor with zero or negative time span.
    #[error("degenerate anchor: {0}")]
    DegenerateAnchor(String),

    /// A target income fraction that the trajectory can never attain.
    #[error("unreachable level: {0}")]
    UnreachableLevel(String),

    /// A power-law tail exponent at or below 1 has no finite mean.
    #[error("divergent mean: {0}")]
    DivergentMean(String),

    /// Two curves that cannot be brought onto a common age grid.
    #[error("alignment error: {0}")]
    Alignment(String),

    /// A curve without a positive peak cannot be normalized.
    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),

    /// An input file with no usable records.
    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
