use thiserror::Error;

/// Errors raised by the word, graph and search operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("alphabet has more than 255 symbols")]
    AlphabetTooLarge,
    #[error("symbol {symbol:?} is not in the alphabet {alphabet:?}")]
    UnknownSymbol { symbol: char, alphabet: String },
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("operation requires a non-empty word")]
    EmptyWord,
    #[error("words must have equal length, got {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("exponent {exponent} gives a non-integral length for a root of length {root_len}")]
    NonIntegralLength { exponent: String, root_len: usize },
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("invalid switching: {0}")]
    InvalidSwitching(String),
    #[error("{0} is not a vertex of the graph")]
    NotAVertex(String),
    #[error("vertex {vertex} is out of range for a {size}x{size} matrix")]
    MatrixIndex { vertex: usize, size: usize },
    #[error("scan guard exceeded: {needed} items requested, limit is {limit}")]
    GuardExceeded { needed: u128, limit: u128 },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
    #[error("{0} is not a k-abelian singleton")]
    NotSingleton(String),
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("invalid cycle label {label}: {reason}")]
    InvalidCycle { label: String, reason: String },
    #[error("cycles {first} and {second} share vertex {vertex}")]
    OverlappingCycles { first: String, second: String, vertex: String },
    #[error("{found} disjoint cycles exceed the maximum {max} for order {order}")]
    TooManyCycles { found: usize, max: String, order: usize },
    #[error("maximal decomposition leaves {0} vertices uncovered")]
    UncoveredVertices(usize),
    #[error("invalid Gray code: {0}")]
    InvalidGrayCode(String),
    #[error("duplicate necklace {0} in ordering")]
    DuplicateNecklace(String),
    #[error("order {0} must be even")]
    OddOrder(usize),
    #[error("operation requires the binary alphabet")]
    NotBinary,
    #[error("graph is not bipartite: edge {0} -- {1} lies inside one part")]
    NotBipartite(String, String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
