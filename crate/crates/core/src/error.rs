use thiserror::Error;

/// Errors raised by the exact arithmetic, sequence and identity layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("negative argument {value} to {what}")]
    NegativeArgument { what: &'static str, value: i64 },
    #[error("index {index} out of range in {what}")]
    IndexOutOfRange { what: &'static str, index: i64 },
    #[error("singular diagonal entry at row {0}")]
    SingularDiagonal(usize),
    #[error("polynomial of degree {degree} does not fit a matrix of order {order}")]
    DegreeTooLarge { degree: usize, order: usize },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown reading `{reading}` for identity `{identity}`")]
    UnknownReading { identity: String, reading: String },
    #[error("invalid coefficient `{0}`")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
