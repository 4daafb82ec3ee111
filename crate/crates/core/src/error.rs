use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter index {index} out of range 1..={d}")]
    LetterOutOfRange { index: usize, d: u32 },

    #[error("generator index {index} out of range for {n} strands")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("order mismatch: expected d={expected}, got d={got}")]
    OrderMismatch { expected: u32, got: u32 },

    #[error("monomial inverse of a polynomial with {0} terms")]
    NotMonomial(usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot remove a box from empty part {part}")]
    EmptyPart { part: usize },

    #[error("composition {0} has a part outside {{0,1}}")]
    NotBaseComposition(String),

    #[error("element not supported on the Young subgroup of {0}")]
    NotParabolic(String),

    #[error("invalid block matrix: {0}")]
    BlockShape(String),

    #[error("framing token present in an unframed word")]
    FramedToken,

    #[error("malformed token `{0}`")]
    MalformedToken(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("empty subset S")]
    EmptySubset,
}

pub type Result<T> = std::result::Result<T, Error>;
