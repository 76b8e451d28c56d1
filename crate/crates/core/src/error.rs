use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("t-level {level} exceeds the configured maximum {max}")]
    TauLevelOverflow { level: usize, max: usize },
    #[error("denominator factor u{0}-u{1} vanishes at the evaluation point")]
    PoleHit(usize, usize),
    #[error("no value assigned to generator {0}")]
    MissingAssignment(String),
    #[error("index pair ({0}, {1}) is not allowed here")]
    BadIndexPair(usize, usize),
    #[error("no closed form for {vector} at level {level}")]
    UnsupportedPairing { vector: String, level: usize },
    #[error("{genus}-genus correlator with {arity} indices is not supported")]
    ArityUnsupported { genus: u8, arity: usize },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("malformed expression: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
