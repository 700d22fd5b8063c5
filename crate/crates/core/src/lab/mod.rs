//! Executable versions of the D-ring statements: evaluation-divisibility
//! oracles, the divisibility certifier for primitive divisors, prime
//! solvability sets, the ℤ[W] counterexample and the Chebyshev-style pairs.

mod cheb;
mod oracle;
mod primes;
mod zw;

pub use cheb::{cheb_certify, cheb_generate, ChebPair, ChebReport};
pub use oracle::{
    certify_divisibility, degree_dichotomy_check, eval_divisibility, find_witness, growth_witness,
    int_window, CertVerdict, DichotomyVerdict, DivisibilityCertificate, EvalDivReport, EvalVerdict,
    Witness, GROWTH_CAP,
};
pub use primes::{sf_excluding_growth, sf_search, PrimeSolvabilityRecord};
pub use zw::{
    zw_unit_demo, zw_value, ZwFailure, ZwReport, DENOMINATOR_PRIME_BOUND, MAX_DENOMINATOR_FACTORS,
    NUMERATOR_BOUND,
};

/// Sample window used when the caller does not supply one.
pub const DEFAULT_WINDOW: (i64, i64) = (-20, 20);
