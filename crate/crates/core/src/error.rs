use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("generator index {index} out of range for {strands} strands (expected 1..={max})", max = .strands.saturating_sub(1))]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("braid word must have at least one strand")]
    NoStrands,

    #[error("word {0} does not use every generator")]
    MissingSupport(String),

    #[error("no word with an adjacent square is reachable from {0}")]
    SearchExhausted(String),

    #[error("input outside the certified family: {0}")]
    NotInScope(String),

    #[error("Burau determinant is not divisible by the strand factor for {0}")]
    NonExactDivision(String),

    #[error("no unit normalization makes the Burau polynomial of {0} Conway-symmetric")]
    NoUnitNormalization(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
