use thiserror::Error;

/// Errors raised by the metrics, the symbolizer and the evaluation harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown metric code {0} (expected 1..=9)")]
    UnknownMetricCode(u32),

    #[error("empty left operand")]
    EmptyLeftOperand,

    #[error("threshold {0} out of range")]
    InvalidThreshold(f64),

    #[error("undefined average precision: the dataset has no correct pair")]
    UndefinedAveragePrecision,

    #[error("cannot calibrate: {0}")]
    CannotCalibrate(&'static str),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("pair {index}: {source}")]
    Pair {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
