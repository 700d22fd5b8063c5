//! Dense univariate polynomials over a [`Ring`].

mod content;
mod division;
pub(crate) mod text;

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{IntRing, Ring};

pub use division::PseudoDivResult;
pub use text::{parse_poly, RingSpec, TextRing};

/// A polynomial with coefficients in `R`, stored in ascending order:
/// `coeffs[i]` is the coefficient of `x^i`. The leading coefficient is
/// never zero; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

/// Polynomials over ℤ.
pub type IntPoly = Poly<IntRing>;

impl<R: Ring> Poly<R> {
    /// Builds a polynomial from ascending coefficients, dropping trailing
    /// zeros. Fails if a coefficient belongs to a different ring.
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Result<Self> {
        if coeffs.iter().any(|c| !ring.owns(c)) {
            return Err(Error::MismatchedRing);
        }
        Ok(Self::from_vec(ring, coeffs))
    }

    pub(crate) fn from_vec(ring: R, coeffs: Vec<R::Elem>) -> Self {
        let mut p = Poly { ring, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.ring.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn zero(ring: R) -> Self {
        Poly { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::constant(ring, one)
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::from_vec(ring, vec![c])
    }

    /// `c·x^n`
    pub fn monomial(ring: R, c: R::Elem, n: usize) -> Self {
        let mut coeffs = vec![ring.zero(); n];
        coeffs.push(c);
        Self::from_vec(ring, coeffs)
    }

    /// The polynomial `x`.
    pub fn x(ring: R) -> Self {
        let one = ring.one();
        Self::monomial(ring, one, 1)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    /// The coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, k: &R::Elem) -> Result<R::Elem> {
        if !self.ring.owns(k) {
            return Err(Error::MismatchedRing);
        }
        let r = &self.ring;
        Ok(self.coeffs.iter().rev().fold(r.zero(), |acc, c| r.add(&r.mul(&acc, k), c)))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MismatchedRing)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, |r, a, b| r.add(a, b)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, |r, a, b| r.sub(a, b)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone()));
        }
        let r = &self.ring;
        let mut out = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = r.add(&out[i + j], &r.mul(a, b));
            }
        }
        Ok(Self::from_vec(r.clone(), out))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R::Elem, &R::Elem) -> R::Elem) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f(&self.ring, &self.coeff(i), &other.coeff(i))).collect();
        Self::from_vec(self.ring.clone(), coeffs)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::from_vec(self.ring.clone(), coeffs)
    }

    /// `self · x^n`
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ring.zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { ring: self.ring.clone(), coeffs }
    }

    /// Applies `f` to each coefficient, landing in another ring.
    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> Poly<S> {
        Poly::from_vec(ring, self.coeffs.iter().map(f).collect())
    }
}

impl IntPoly {
    /// Convenience constructor from ascending `i64` coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_vec(IntRing, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<R: Ring> $tr for &Poly<R> {
            type Output = Poly<R>;

            /// Panics if the operands are over different rings; use the
            /// `try_` method to handle that case.
            fn $method(self, rhs: &Poly<R>) -> Poly<R> {
                self.$checked(rhs).expect("polynomials over different rings")
            }
        }

        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;

            fn $method(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;

    fn neg(self) -> Poly<R> {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Poly { ring: self.ring.clone(), coeffs }
    }
}
