use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet symbol {0:?} occurs more than once")]
    DuplicateSymbol(char),
    #[error("symbol {symbol:?} is not in alphabet {alphabet:?}")]
    UnknownSymbol { symbol: char, alphabet: String },
    #[error("words are over different alphabets ({left:?} vs {right:?})")]
    AlphabetMismatch { left: String, right: String },
    #[error("enumeration of {required} candidate words exceeds the cap of {cap}")]
    EnumerationCap { required: String, cap: u64 },
    #[error("{0} is a Lyndon word and has no reducing split")]
    AlreadyLyndon(String),
    #[error("word {0:?} is too short to split")]
    TooShort(String),
    #[error("no valid Lyndon split found for {0:?}")]
    NoValidSplit(String),
    #[error("the empty word has no Lyndon property")]
    EmptyWord,
    #[error("reduction evaluated to a non-integer or negative value {0}")]
    NonIntegral(String),
    #[error("expected a binary alphabet, got {0} symbols")]
    NotBinary(usize),
    #[error("level {level} outside [0, {max}]")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("letter count {count} exceeds word length {n}")]
    CountExceedsLength { count: usize, n: usize },
    #[error("value {value} outside the feasible range [0, {max}]")]
    ValueOutOfRange { value: String, max: String },
    #[error("known levels are not a contiguous prefix: level {0} is missing")]
    NonContiguousLevels(usize),
    #[error("missing projection for pair {0}")]
    MissingPair(String),
    #[error("projection for pair {pair} contains letter {symbol:?}")]
    ForeignLetter { pair: String, symbol: char },
    #[error("inconsistent count for letter {symbol:?}: {first} in one projection, {second} in pair {pair}")]
    InconsistentCounts {
        symbol: char,
        first: usize,
        second: usize,
        pair: String,
    },
    #[error("invalid pair {0:?}")]
    InvalidPair(String),
    #[error("pair {0} appears in both orientations")]
    DuplicatePair(String),
    #[error("count of letter {0:?} cannot be determined from the coefficients")]
    UnknownLetterCount(char),
    #[error("binary reconstruction failed for pair {pair}: {reason}")]
    PairFailed { pair: String, reason: String },
    #[error("used {used} coefficients, above the bound {bound}")]
    BudgetExceeded { used: usize, bound: usize },
    #[error("invalid marking: {0}")]
    InvalidMarking(String),
    #[error("no word has the reconstructed pairwise projections")]
    NoConsistentWord,
    #[error("marking search exceeded {0} candidate markings")]
    MarkingSearchCap(u64),
    #[error("reconstruction from projections needs at least two letters")]
    NeedsTwoLetters,
    #[error("oracle cannot answer query {0:?}")]
    UnansweredQuery(String),
    #[error("invalid letter order: {0}")]
    InvalidOrder(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
