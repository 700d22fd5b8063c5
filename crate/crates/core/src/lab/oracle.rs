use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, Poly};
use crate::ring::Ring;

/// Upper end of the scan in [`growth_witness`].
pub const GROWTH_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalVerdict {
    AllDivide,
    Failed,
}

/// A sample `k` with `g(k) ≠ 0` and `g(k) ∤ f(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<E> {
    pub k: E,
    pub g_value: E,
    pub f_value: E,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalDivReport<E> {
    pub checked: usize,
    /// Samples with `g(k) = 0`.
    pub vacuous: usize,
    pub divides: usize,
    pub failures: Vec<Witness<E>>,
    pub verdict: EvalVerdict,
}

/// Tests `g(k) | f(k)` at every sample, skipping zeros of `g`.
pub fn eval_divisibility<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    samples: &[R::Elem],
) -> Result<EvalDivReport<R::Elem>> {
    if f.ring() != g.ring() {
        return Err(Error::MismatchedRing);
    }
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if samples.is_empty() {
        return Err(Error::EmptySampleSet);
    }
    let ring = f.ring();
    let (mut vacuous, mut divides) = (0, 0);
    let mut failures = Vec::new();
    for k in samples {
        let g_value = g.eval(k)?;
        if ring.is_zero(&g_value) {
            vacuous += 1;
            continue;
        }
        let f_value = f.eval(k)?;
        if ring.div_exact(&f_value, &g_value)?.is_some() {
            divides += 1;
        } else {
            failures.push(Witness { k: k.clone(), g_value, f_value });
        }
    }
    let verdict = if failures.is_empty() { EvalVerdict::AllDivide } else { EvalVerdict::Failed };
    Ok(EvalDivReport { checked: samples.len(), vacuous, divides, failures, verdict })
}

/// The integers `from..=to`, the default sample window being `-20..=20`.
pub fn int_window(from: i64, to: i64) -> Vec<BigInt> {
    (from..=to).map(BigInt::from).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertVerdict {
    Divides,
    NotDivides,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityCertificate<R: Ring> {
    pub verdict: CertVerdict,
    /// Present iff the verdict is `Divides`; `g·quotient = f` has been
    /// re-verified.
    pub quotient: Option<Poly<R>>,
    /// A re-verified evaluation witness, when the bounded search found one.
    pub witness: Option<Witness<R::Elem>>,
}

/// Decides `g | f` in `R[x]` for a primitive nonconstant `g`. On failure,
/// searches `R::search_points(search_bound)` for an evaluation witness.
pub fn certify_divisibility<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    search_bound: u64,
) -> Result<DivisibilityCertificate<R>> {
    if f.ring() != g.ring() {
        return Err(Error::MismatchedRing);
    }
    if g.is_constant() {
        return Err(Error::ConstantDivisor);
    }
    let content = g.content()?;
    if !g.ring().is_unit(&content) {
        return Err(Error::NotPrimitive(content.to_string()));
    }
    if let Some(q) = f.exact_divide(g)? {
        if &(g * &q) != f {
            return Err(Error::InternalInvariantViolation("g·q does not re-expand to f".into()));
        }
        return Ok(DivisibilityCertificate {
            verdict: CertVerdict::Divides,
            quotient: Some(q),
            witness: None,
        });
    }
    let witness = find_witness(f, g, search_bound)?;
    Ok(DivisibilityCertificate { verdict: CertVerdict::NotDivides, quotient: None, witness })
}

/// The first point in search order where `g(k) ≠ 0` and `g(k) ∤ f(k)`.
pub fn find_witness<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    search_bound: u64,
) -> Result<Option<Witness<R::Elem>>> {
    let ring = f.ring();
    for k in ring.search_points(search_bound) {
        let g_value = g.eval(&k)?;
        if ring.is_zero(&g_value) {
            continue;
        }
        let f_value = f.eval(&k)?;
        if ring.div_exact(&f_value, &g_value)?.is_none() {
            return Ok(Some(Witness { k, g_value, f_value }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DichotomyVerdict {
    /// Divisibility held on the samples and `f = 0` or `deg g ≤ deg f`.
    Consistent,
    /// Divisibility already fails on the samples.
    RefutesSamples,
    /// Divisibility held but `deg g > deg f` with `f ≠ 0`. Over a D-ring this
    /// can only come from an undersized sample set.
    Violation,
}

/// Whether evaluation divisibility on `samples` is compatible with the
/// degree condition `f = 0 or deg g ≤ deg f`.
pub fn degree_dichotomy_check<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    samples: &[R::Elem],
) -> Result<DichotomyVerdict> {
    let report = eval_divisibility(f, g, samples)?;
    if report.verdict == EvalVerdict::Failed {
        return Ok(DichotomyVerdict::RefutesSamples);
    }
    Ok(match (f.degree(), g.degree()) {
        (None, _) => DichotomyVerdict::Consistent,
        (Some(df), Some(dg)) if dg <= df => DichotomyVerdict::Consistent,
        _ => DichotomyVerdict::Violation,
    })
}

/// For nonzero `f` with `deg g > deg f`: the least `k ≥ 1` with
/// `|g(k)| > |f(k)| > 0`, at which `g(k)` cannot divide `f(k)`.
pub fn growth_witness(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let df = f.degree().ok_or(Error::PreconditionViolated("f must be nonzero"))?;
    match g.degree() {
        Some(dg) if dg > df => {}
        _ => return Err(Error::PreconditionViolated("deg g must exceed deg f")),
    }
    for k in 1..=GROWTH_CAP {
        let k = BigInt::from(k);
        let fk = f.eval(&k)?.abs();
        if fk.is_zero() {
            continue;
        }
        if g.eval(&k)?.abs() > fk {
            return Ok(k);
        }
    }
    Err(Error::CapExceeded(GROWTH_CAP))
}
