use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different rings")]
    MismatchedRing,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid quadratic ring descriptor d = {d}: {reason}")]
    InvalidDescriptor { d: i64, reason: &'static str },
    #[error("quadratic ring with d = {0} is not norm-Euclidean")]
    UnsupportedRing(i64),
    #[error("gcd of two zero arguments")]
    ZeroArguments,
    #[error("denominator has prime factor {0}, which is not in W")]
    DenominatorNotInW(u64),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("value exceeds the trial-factoring limit of 10^12")]
    FactoringLimit,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("sample set is empty")]
    EmptySampleSet,
    #[error("divisor is not primitive (content {0})")]
    NotPrimitive(String),
    #[error("divisor must be nonconstant")]
    ConstantDivisor,
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("search cap of {0} exceeded")]
    CapExceeded(u64),
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}
