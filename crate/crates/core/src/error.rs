use thiserror::Error;

/// Errors raised by the library. Variants map onto the domain failure modes of
/// each module; the CLI turns any of them into exit status 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for {count} tuples")]
    IndexOutOfRange { index: u128, count: u128 },

    #[error("word {0:?} is not generated by this system")]
    NotInVocabulary(String),

    #[error("word {word:?} has {} parses", parses.len())]
    Ambiguous {
        word: String,
        /// Every fragment-index tuple that spells the word.
        parses: Vec<Vec<usize>>,
    },

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("a wheel must hold at least one fragment")]
    EmptyWheel,

    #[error("a wheel system must hold at least one wheel")]
    NoWheels,

    #[error("grille does not fit: {0}")]
    OutOfBounds(String),

    #[error("invalid grille: {0}")]
    InvalidGrille(String),

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("{total} is not divisible by 2^{trials}")]
    InexactScaling { trials: u32, total: u64 },

    #[error("grouping is not a contiguous partition of {wheels} wheels")]
    NonContiguousGrouping { wheels: usize },

    #[error("invalid grammar: {0}")]
    InvalidGrammar(String),

    #[error("line {line}: malformed locus tag {tag:?}")]
    MalformedLocus { line: usize, tag: String },

    #[error("no page carries tag {0:?}")]
    UnknownTag(String),

    #[error("splitter returned {got} parts, expected {expected}")]
    SplitterArity { expected: usize, got: usize },

    #[error("budget must be at least 1")]
    InvalidBudget,

    #[error("decomposition needs at least 2 wheels, got {0}")]
    TooFewWheels(usize),

    #[error("symbol {0:?} is not in the alphabet")]
    NotInAlphabet(char),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
