use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("arc [{start}, {end}) has zero length")]
    ZeroLengthArc { start: String, end: String },

    #[error("arc endpoint out of range: {0}")]
    OutOfRange(String),

    #[error("cantor stage {stage}: {count} gaps of length {gap} do not fit in an arc of length {arc_length}")]
    SchemeOverdelete {
        stage: usize,
        count: u32,
        gap: String,
        arc_length: String,
    },

    #[error("requested stage {requested} but the scheme has only {available} stages")]
    StageOutOfRange { requested: usize, available: usize },

    #[error("rational arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("bad descriptor: {0}")]
    BadDescriptor(String),

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("need at least two points, found {0}")]
    TooFewPoints(usize),

    #[error("index set is empty")]
    EmptyIndexSet,

    #[error("matrix dimension {0} exceeds the eigensolver cap of {cap}", cap = crate::spectral::MAX_DIMENSION)]
    DimensionTooLarge(usize),

    #[error("eigensolver did not converge within {0} iterations")]
    ConvergenceFailure(usize),

    #[error("windows must be strictly nested and increasing")]
    WindowsNotNested,

    #[error("value must be positive, got {0}")]
    NonPositive(f64),

    #[error("set is not syndetic inside its window")]
    NotSyndetic,

    #[error("threshold {threshold} exceeds the single-element bound {measure}")]
    ThresholdTooHigh { threshold: f64, measure: f64 },

    #[error("bad threshold {0}: must lie in (0, 1]")]
    BadThreshold(f64),

    #[error("bad delta {0}")]
    BadDelta(f64),

    #[error("no witness arc of length {length} found on the search grid")]
    NoArcFound { length: String },

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("bad witness configuration: {0}")]
    BadConfig(String),

    #[error("malformed matrix dump: {0}")]
    BadDump(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
