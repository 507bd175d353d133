use thiserror::Error;

/// Errors produced by word handling, channel operations, decoders and the
/// enumeration-backed verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("alphabet size must be at least 2, got {0}")]
    InvalidAlphabet(u32),

    #[error("symbol {symbol} at position {index} is outside Z_{q}")]
    SymbolOutOfRange { symbol: u32, index: usize, q: u32 },

    #[error("alphabet mismatch: Z_{left} vs Z_{right}")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("invalid duplication length {0}; must be at least 1")]
    InvalidLength(usize),

    #[error("invalid position {position} for a word of length {len} (operation length {l})")]
    InvalidPosition {
        position: usize,
        len: usize,
        l: usize,
    },

    #[error("not a tandem at {0}")]
    NotATandem(usize),

    #[error("not a palindrome at {0}")]
    NotAPalindrome(usize),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("word of length {len} is shorter than the required {required}")]
    WordTooShort { len: usize, required: usize },

    #[error("binary only: operation requires q = 2, got q = {0}")]
    BinaryOnly(u32),

    #[error("incompatible decomposition: {0}")]
    IncompatibleDecomposition(String),

    #[error("expected a {expected} error kind")]
    WrongKind { expected: &'static str },

    #[error("invalid code parameters: {0}")]
    InvalidParameters(String),

    #[error("decoding failure: {0}")]
    DecodingFailure(String),

    #[error("uncorrectable: no codeword explains the received word")]
    Uncorrectable,

    #[error("code is not correcting: {0} codewords explain the received word")]
    NotCorrecting(usize),

    #[error("unsupported duplication length {0}")]
    UnsupportedLength(usize),

    #[error(
        "instance too large: {size} words exceeds the guard of {guard} (use --force to override)"
    )]
    InstanceTooLarge { size: String, guard: u128 },

    #[error("root finding did not converge: {0}")]
    RootFinding(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
