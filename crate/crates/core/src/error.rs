use thiserror::Error;

/// Errors raised by ring construction, enumeration and core extraction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime; only prime fields GF(p) are supported")]
    NonPrimeModulus(u32),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("field order {q} exceeds the largest supported order {max} for table-driven ternions")]
    FieldTooLarge { q: u32, max: u32 },

    #[error("the 0-7 element labels exist only for q = 2 (got q = {0})")]
    LabelsUnavailable(u32),

    #[error("label {0} is outside 0..=7")]
    InvalidLabel(u8),

    #[error("module rank n must be at least 1 (got {0})")]
    InvalidRank(usize),

    #[error("tuple has {found} entries, expected {expected}")]
    TupleLength { expected: usize, found: usize },

    #[error("tuple code {code} is outside a space of {size} tuples")]
    CodeOutOfRange { code: u64, size: u128 },

    #[error("coordinate {value} is not a residue modulo {q}")]
    InvalidResidue { value: u32, q: u32 },

    #[error("exhaustive search over {needed} tuples exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("degenerate core: submodule {submodule} {reason}")]
    DegenerateCore { submodule: usize, reason: String },

    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
