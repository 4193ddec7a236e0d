use thiserror::Error;

/// Every failure the library can report.
///
/// Variants are grouped by the layer that raises them; the CLI maps them
/// onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // integers
    #[error("{0} is outside the supported 64-bit working range")]
    OutOfRange(String),
    #[error("gcd({0}, {1}) != 1")]
    NotCoprime(u64, u64),

    // fields
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("modulus has degree {found}, expected monic degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,

    // polynomials
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("enumeration cap exceeded: {needed} > {cap}")]
    CapExceeded { needed: u64, cap: u64 },
    #[error("no such polynomial: {0}")]
    NoSuchPolynomial(String),

    // recurrences
    #[error("last recurrence coefficient c_r must be nonzero")]
    ZeroLastCoefficient,
    #[error("characteristic polynomial must satisfy f(0) = 1")]
    BadConstantTerm,
    #[error("state has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("numerator degree {found} exceeds {max}")]
    DegreeTooHigh { max: usize, found: usize },

    // biperiodic construction
    #[error("not constructible: {0}")]
    NotConstructible(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
