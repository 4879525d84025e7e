use thiserror::Error;

/// Errors produced by `hammock-core`.
///
/// Every variant maps to a stable short code (see [`Error::code`]) so
/// front-ends can emit one-line diagnostics that scripts can match on.
#[derive(Debug, Error)]
pub enum Error {
    #[error("argument {value} outside the domain [{lo}, {hi}]")]
    Domain { value: f64, lo: f64, hi: f64 },

    #[error("coefficient vector has length {got}, expected {expected}")]
    Length { expected: usize, got: usize },

    #[error("coefficient vectors disagree on n ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },

    #[error("dual coefficient at k={k} would be negative; input is not a valid N-form vector")]
    NegativeDual { k: usize },

    #[error("invalid hammock dimensions l={l}, w={w}: {reason}")]
    Dimensions { l: usize, w: usize, reason: String },

    #[error("degenerate cubic interval: n-w-l = {span} (needs >= 2)")]
    Degenerate { span: i64 },

    #[error("invalid anchors: {0}")]
    Anchors(String),

    #[error("invalid bridge point {x}: must lie strictly inside ({lo}, {hi})")]
    BridgePoint { x: i64, lo: i64, hi: i64 },

    #[error("singular linear system: {0}")]
    Singular(String),

    #[error("linear-system residual {residual:e} exceeds {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },

    #[error("graph has {edges} edges, exhaustive enumeration is capped at {cap}; supply a fixture table instead")]
    EdgeCap { edges: usize, cap: usize },

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "E_DOMAIN",
            Error::Length { .. } => "E_LENGTH",
            Error::DegreeMismatch { .. } => "E_DEGREE",
            Error::NegativeDual { .. } => "E_DUAL",
            Error::Dimensions { .. } => "E_DIMS",
            Error::Degenerate { .. } => "E_DEGENERATE",
            Error::Anchors(_) => "E_ANCHORS",
            Error::BridgePoint { .. } => "E_BRIDGE",
            Error::Singular(_) => "E_SINGULAR",
            Error::Residual { .. } => "E_RESIDUAL",
            Error::EdgeCap { .. } => "E_CAP",
            Error::Graph(_) => "E_GRAPH",
            Error::Parse(_) => "E_PARSE",
            Error::Json(_) => "E_JSON",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
