use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 3, got {0}")]
    RankTooSmall(usize),
    #[error("generator s{gen} is out of range for rank {rank}")]
    GeneratorOutOfRange { gen: u32, rank: usize },
    #[error("relator is trivial after free reduction")]
    EmptyRelator,
    #[error("coset enumeration exceeded the budget of {budget} cosets")]
    BudgetExhausted { budget: usize },
    #[error("operation requires a finite realization")]
    NotFinite,
    #[error("ranks differ: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("reflection word has odd length {0}")]
    OddReflectionWord(usize),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("system is not polytopal: {0}")]
    NotPolytopal(String),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
