//! Conjugate and norm polynomials for a quadratic extension, whose Galois
//! group is `{id, σ}`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{IntPoly, Poly};
use crate::ring::{IntRing, QuadInt, QuadRing, Ring};

/// Applies σ to every coefficient.
pub fn conjugate_poly(p: &Poly<QuadRing>) -> Poly<QuadRing> {
    p.map(*p.ring(), QuadInt::conjugate)
}

/// `p · p_σ`, projected to ℤ[x]. Every coefficient of the product is fixed
/// by σ; a nonzero ω-coordinate is reported as an invariant violation.
pub fn norm_poly(p: &Poly<QuadRing>) -> Result<IntPoly> {
    let product = p * &conjugate_poly(p);
    let coeffs = product
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.is_rational() {
                Ok(c.a().clone())
            } else {
                Err(Error::InternalInvariantViolation(format!(
                    "norm polynomial coefficient of x^{i} is {c}, not an integer"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_vec(IntRing, coeffs))
}

/// A polynomial together with its norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormPair {
    pub source: Poly<QuadRing>,
    pub norm: IntPoly,
}

impl NormPair {
    pub fn new(source: Poly<QuadRing>) -> Result<NormPair> {
        let norm = norm_poly(&source)?;
        let expected = source.degree().map(|d| 2 * d);
        if norm.degree() != expected {
            return Err(Error::InternalInvariantViolation(format!(
                "norm degree {:?}, expected {:?}",
                norm.degree(),
                expected
            )));
        }
        Ok(NormPair { source, norm })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransferStatus {
    /// `G(b) = 0`; there is nothing to divide.
    GZero,
    /// `g(b) ∤ f(b)` in ℤ[ω], so the sample imposes no obligation on `G, F`.
    Vacuous,
    /// `g(b) | f(b)` and `G(b) | F(b)`.
    Holds,
    /// `g(b) | f(b)` but `G(b) ∤ F(b)`.
    Broken,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferSample {
    pub b: BigInt,
    pub g_value: QuadInt,
    pub f_value: QuadInt,
    pub big_g_value: BigInt,
    pub big_f_value: BigInt,
    pub status: TransferStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransferVerdict {
    /// At least one sample carried an obligation and all of them held.
    Consistent,
    /// No sample carried an obligation.
    Vacuous,
    /// Some obligation failed.
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferReport {
    pub big_f: IntPoly,
    pub big_g: IntPoly,
    pub samples: Vec<TransferSample>,
    pub verdict: TransferVerdict,
}

/// Checks, for each integer sample `b`, that `g(b) | f(b)` in ℤ[ω] implies
/// `N(g)(b) | N(f)(b)` in ℤ. Samples are reported in ascending order.
pub fn norm_transfer_check(
    f: &Poly<QuadRing>,
    g: &Poly<QuadRing>,
    samples: &[BigInt],
) -> Result<TransferReport> {
    if f.ring() != g.ring() {
        return Err(Error::MismatchedRing);
    }
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let ring = *f.ring();
    let big_f = norm_poly(f)?;
    let big_g = norm_poly(g)?;
    let mut points = samples.to_vec();
    points.sort();
    points.dedup();

    let mut out = Vec::with_capacity(points.len());
    for b in points {
        let at = ring.from_int(b.clone());
        let g_value = g.eval(&at)?;
        let f_value = f.eval(&at)?;
        let big_g_value = big_g.eval(&b)?;
        let big_f_value = big_f.eval(&b)?;
        if big_g_value != g_value.norm() || big_f_value != f_value.norm() {
            return Err(Error::InternalInvariantViolation(format!(
                "norm polynomial disagrees with element norm at {b}"
            )));
        }
        let status = if big_g_value.is_zero() {
            TransferStatus::GZero
        } else if f_value.divided_by(&g_value)?.is_none() {
            TransferStatus::Vacuous
        } else if IntRing.div_exact(&big_f_value, &big_g_value)?.is_some() {
            TransferStatus::Holds
        } else {
            TransferStatus::Broken
        };
        out.push(TransferSample { b, g_value, f_value, big_g_value, big_f_value, status });
    }

    let verdict = if out.iter().any(|s| s.status == TransferStatus::Broken) {
        TransferVerdict::Inconsistent
    } else if out.iter().any(|s| s.status == TransferStatus::Holds) {
        TransferVerdict::Consistent
    } else {
        TransferVerdict::Vacuous
    };
    Ok(TransferReport { big_f, big_g, samples: out, verdict })
}
