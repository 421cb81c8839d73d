use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("symbol {symbol:?} is not in the alphabet {alphabet:?}")]
    SymbolNotInAlphabet { symbol: char, alphabet: String },

    #[error("invalid word token {0:?}: whitespace and control characters are not symbols")]
    InvalidWordToken(String),

    #[error("invalid character {found:?} at position {position} of an oc-sequence (expected '0' or '1')")]
    InvalidOcCharacter { position: usize, found: char },

    #[error("expected a binary word over {{a, b}}, found symbol {0:?}")]
    NotBinary(char),

    #[error("balance is only defined for words over at most two symbols, found {0}")]
    TooManySymbols(usize),

    #[error("invalid directive sequence {input:?}: {reason}")]
    InvalidDirective { input: String, reason: String },

    #[error(
        "directive digit d_0 = 0 describes a word starting with b; swap a and b and drop the \
         leading 0 (use {hint:?} instead)"
    )]
    ZeroLeadingDigit { hint: String },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("word length overflows the machine integer range")]
    LengthOverflow,

    #[error("oc-sequence must be nonempty and start with 1")]
    InvalidOcStart,

    #[error("{0} is not the oc-sequence of a Sturmian word")]
    NotSturmianOc(String),

    #[error("oc-sequence {0} does not have the shape 1^k0 0^k'0 ... 1")]
    ShapeMismatch(String),

    #[error("enumeration of {candidates} candidates exceeds the cap of {cap}")]
    BoundsExceeded { candidates: u128, cap: u128 },
}
