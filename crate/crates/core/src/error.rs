use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    ZeroArgument,

    #[error("element ({a}, {b}) is not a valid element of Z_{m} x Z_{n}")]
    InvalidElement { a: u64, b: u64, m: u64, n: u64 },

    #[error("group order {order} exceeds the configured cap {cap}")]
    TooLarge { order: u64, cap: u64 },

    #[error("vertex classes do not form a partition: {0}")]
    NotAPartition(String),

    #[error("partition is not equitable: class {class} has representatives with {first} and {second} neighbours in class {target}")]
    NotEquitable {
        class: usize,
        target: usize,
        first: usize,
        second: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no closed form applies to Z_{m} x Z_{n}")]
    NoClosedForm { m: u64, n: u64 },

    #[error("the zero polynomial has no roots to isolate")]
    ZeroPolynomial,

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("exact division failed: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
