use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported field order {0}; supported primes are 2, 3, 5, 7")]
    UnsupportedField(u8),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("invalid graph6: {0}")]
    Graph6(String),

    #[error("vertex index {v} out of range for a graph on {n} vertices")]
    InvalidVertex { v: usize, n: usize },

    #[error("{what} supports at most {limit} vertices, got {n}")]
    SizeLimit {
        n: usize,
        limit: usize,
        what: &'static str,
    },

    #[error("enumeration would visit {required} matrices, which exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("weight {index} lies outside the column space of the matrix")]
    WeightOutsideColumnSpace { index: usize },

    #[error("the pattern graph has no induced copy in the host graph")]
    NoInducedCopy,

    #[error("invalid catalog file: {0}")]
    CatalogFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
