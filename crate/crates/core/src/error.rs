use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pattern syntax error in {text:?}: {reason}")]
    PatternSyntax { text: String, reason: String },

    #[error("pattern {text:?} must use every letter of 1..={max} at least once; missing {missing}")]
    PatternAlphabet { text: String, max: u8, missing: u8 },

    #[error("invalid Catalan word {0:?}")]
    InvalidWord(String),

    #[error("length must be at least {min}, got {got}")]
    Length { min: usize, got: usize },

    #[error("inconsistent family specification: {0}")]
    FamilySpec(String),

    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),

    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),

    #[error("pattern {pattern} is not supported by {method}")]
    Unsupported { pattern: String, method: &'static str },

    #[error("division by a series of valuation {divisor} whose dividend has valuation {dividend}")]
    NotDivisible { dividend: usize, divisor: usize },

    #[error("division by a series that vanishes through order {0}")]
    DivisionByZero(usize),

    #[error("square root needs constant term 1")]
    SqrtConstant,

    #[error("composition needs an inner series with zero constant term")]
    ComposeConstant,

    #[error("coefficient of t^{index} is not an integer: {value}")]
    NonInteger { index: usize, value: String },

    #[error("iteration is not contracting at step {0}")]
    NonContracting(usize),

    #[error("term {index} has valuation {got}, below its lower bound {bound}")]
    ValuationBound { index: usize, bound: usize, got: usize },

    #[error("summation bound {bound} leaves terms of valuation {dropped} within order {order}")]
    ShortBound { bound: usize, dropped: usize, order: usize },

    #[error("series order {got} is below the requested order {want}")]
    OrderLoss { want: usize, got: usize },

    #[error("invalid lattice path {0:?}")]
    InvalidPath(String),

    #[error("path {path} lies outside the domain: {reason}")]
    PathDomain { path: String, reason: &'static str },

    #[error("word {word} lies outside the domain: {reason}")]
    WordDomain { word: String, reason: &'static str },

    #[error("invalid index {0}")]
    Index(String),

    #[error("malformed input: {0}")]
    Parse(String),
}
