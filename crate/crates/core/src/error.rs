use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    InvalidPrime(u64),

    #[error("extension degree must be at least 1, got {0}")]
    InvalidDegree(u32),

    #[error("d must be positive, got {0}")]
    InvalidD(u32),

    #[error("{q} is not a power of {p}")]
    NotAPowerOf { q: u64, p: u64 },

    #[error("field order {p}^{n} does not fit in 64 bits")]
    FieldTooLarge { p: u64, n: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("operands live over different fields")]
    FieldMismatch,

    /// An enumeration would exceed its budget. `what` names the limiting parameter.
    #[error("budget exceeded: {what} needs {required} but the cap is {cap}")]
    BudgetExceeded {
        what: String,
        required: String,
        cap: u64,
    },

    #[error("function has a pole at infinity of order {order}, not divisible by p")]
    RamifiedAtInfinity { order: usize },

    #[error("function is of the form z^p - z")]
    IsArtinSchreierTrivial,

    #[error("invalid multiplicity vector: {0}")]
    InvalidKappa(String),

    #[error("density undefined for p = {p}, d = {d}: M_p(d+2) = 0 (p = 2 requires even d)")]
    UndefinedDensity { p: u64, d: u32 },

    #[error("bound violation: {0}")]
    BoundViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn budget(what: impl Into<String>, required: impl ToString, cap: u64) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            required: required.to_string(),
            cap,
        }
    }
}
