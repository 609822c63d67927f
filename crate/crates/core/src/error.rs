use thiserror::Error;

/// Errors raised by metric computations and input parsing.
///
/// Every variant maps to a stable machine-readable code (`E_SCHEMA`, ...)
/// and to a CLI exit status: `2` for input/validation problems, `3` for
/// failures that happen while computing on otherwise valid input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("malformed input: {0}")]
    Schema(String),
    #[error("invalid probability distribution: {0}")]
    Distribution(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("outside the metric's domain: {0}")]
    Domain(String),
    #[error("empty input: {0}")]
    Empty(String),
    #[error("did not converge: {0}")]
    Converge(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("unknown identifier: {0}")]
    Unknown(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl MetricError {
    pub fn code(&self) -> &'static str {
        match self {
            MetricError::Schema(_) => "E_SCHEMA",
            MetricError::Distribution(_) => "E_DIST",
            MetricError::Shape(_) => "E_SHAPE",
            MetricError::Param(_) => "E_PARAM",
            MetricError::Domain(_) => "E_DOMAIN",
            MetricError::Empty(_) => "E_EMPTY",
            MetricError::Converge(_) => "E_CONVERGE",
            MetricError::Degenerate(_) => "E_DEGENERATE",
            MetricError::Unknown(_) => "E_UNKNOWN",
            MetricError::Io(_) => "E_IO",
        }
    }

    pub fn detail(&self) -> &str {
        match self {
            MetricError::Schema(s)
            | MetricError::Distribution(s)
            | MetricError::Shape(s)
            | MetricError::Param(s)
            | MetricError::Domain(s)
            | MetricError::Empty(s)
            | MetricError::Converge(s)
            | MetricError::Degenerate(s)
            | MetricError::Unknown(s)
            | MetricError::Io(s) => s,
        }
    }

    /// Process exit status for the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            MetricError::Converge(_) | MetricError::Domain(_) | MetricError::Degenerate(_) => 3,
            _ => 2,
        }
    }
}

impl From<serde_json::Error> for MetricError {
    fn from(e: serde_json::Error) -> Self {
        MetricError::Schema(e.to_string())
    }
}

impl From<std::io::Error> for MetricError {
    fn from(e: std::io::Error) -> Self {
        MetricError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, MetricError>;

macro_rules! bail {
    ($variant:ident, $($arg:tt)*) => {
        return Err($crate::error::MetricError::$variant(format!($($arg)*)))
    };
}
pub(crate) use bail;
