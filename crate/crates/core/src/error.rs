use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate vertex {0} in face")]
    DuplicateVertex(u32),
    #[error("alphabet must be nonempty")]
    EmptyAlphabet,
    #[error("alphabet of size {0} exceeds the supported maximum of {max}", max = crate::words::MAX_ALPHABET)]
    AlphabetTooLarge(usize),
    #[error("canonical colorful words need at least two letters, got {0}")]
    AlphabetTooSmall(usize),
    #[error("word is not colorful: {0}")]
    NotColorful(String),
    #[error("letter {0} does not occur in the word")]
    MissingLetter(u32),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed linear system: {0}")]
    MalformedSystem(String),
    #[error("empty list of parts")]
    NoParts,
    #[error("part {0} is empty")]
    EmptyPart(u32),
    #[error("point index {index} out of range for a sequence of {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("point index {0} assigned to more than one part")]
    OverlappingParts(usize),
    #[error("word length {word} does not match point count {points}")]
    LengthMismatch { word: usize, points: usize },
    #[error("point sequence is not in general position")]
    NotInGeneralPosition,
    #[error("complex is not a cone")]
    NotACone,
    #[error("partition does not induce the given complex")]
    NerveMismatch,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("construction too large: {0}")]
    TooLarge(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
