use thiserror::Error;

pub type Result<T> = std::result::Result<T, PolylogError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolylogError {
    #[error("unsupported index {index} (table holds 0..={max})")]
    UnsupportedIndex { index: usize, max: usize },

    #[error("unsupported order {order} (maximum {max})")]
    UnsupportedOrder { order: usize, max: usize },

    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("gamma pole at non-positive integer {0}")]
    GammaPole(f64),

    #[error("zeta pole at s = 1")]
    ZetaPole,

    #[error("Hurwitz path requires positive x, got {0}")]
    HurwitzNeedsPositive(f64),

    #[error("rational overflow: {0}")]
    RationalOverflow(&'static str),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("non-finite input")]
    NonFinite,

    #[error("series did not converge within {terms} terms")]
    NotConverged { terms: usize },

    #[error("recursion limit of {limit} reached in duplication step")]
    RecursionLimit { limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("pole at z = 1 for Re(s) <= 1")]
    Pole,

    #[error("oracle domain: {0}")]
    OracleDomain(&'static str),

    #[error("overflow in extended accumulation")]
    Overflow,
}
