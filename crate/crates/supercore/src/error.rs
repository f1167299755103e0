use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SuperError {
    #[error("series truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("series truncation order must be at least 1")]
    ZeroOrder,
    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("exp_h needs a series with zero constant term")]
    NonZeroConstant,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("operator is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("slot {index} out of range 1..={count}")]
    SlotOutOfRange { index: usize, count: usize },
    #[error("slots must differ (both {0})")]
    SameSlot(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("series exponential does not terminate at the truncation order")]
    NonTerminatingExp,
    #[error("parity flag {0} is not 0 or 1")]
    BadParity(u8),
    #[error("graded space must have dimension at least 1")]
    EmptySpace,
}

pub type Result<T> = std::result::Result<T, SuperError>;
