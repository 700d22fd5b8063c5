//! Coefficient rings: the integers, quadratic rings of integers, and the
//! localization ℤ[W] used by the unit-valued counterexample.

mod factor;
mod quad;
mod wrational;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use factor::{is_prime, primes_up_to, trial_factor, TRIAL_FACTOR_LIMIT};
pub use quad::{BasisMode, QuadInt, QuadRing, NORM_EUCLIDEAN};
pub use wrational::{is_w_prime, WRational};

/// An integral domain with exact arithmetic, used as a polynomial
/// coefficient ring.
///
/// Ring values act as descriptors: elements are produced and combined
/// through the descriptor so that rings carrying parameters (the `d` of a
/// quadratic field) and parameterless rings share one interface. Callers
/// are responsible for only combining elements that the descriptor
/// [`owns`](Ring::owns); [`Poly`](crate::Poly) enforces this at
/// construction.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: BigInt) -> Self::Elem;

    /// Whether `x` is an element of this ring (as opposed to a sibling ring
    /// with a different descriptor).
    fn owns(&self, x: &Self::Elem) -> bool;

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;

    /// Returns `Some(q)` with `f = g·q` when `g | f`, `None` otherwise.
    fn div_exact(&self, f: &Self::Elem, g: &Self::Elem) -> Result<Option<Self::Elem>>;

    fn is_unit(&self, x: &Self::Elem) -> bool;

    /// A unit `u` such that `u·x` is the preferred associate of `x`.
    fn normalizing_unit(&self, _x: &Self::Elem) -> Self::Elem {
        self.one()
    }

    /// A greatest common divisor, unique up to units.
    fn gcd(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;

    /// Evaluation points in the order witness searches visit them. `bound`
    /// limits the coordinate size.
    fn search_points(&self, bound: u64) -> Vec<Self::Elem>;

    /// Human-readable ring name, matching the `--ring` syntax of the CLI.
    fn name(&self) -> String;

    fn pow(&self, x: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// The rational integers ℤ.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct IntRing;

impl Ring for IntRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_int(&self, n: BigInt) -> BigInt {
        n
    }

    fn owns(&self, _: &BigInt) -> bool {
        true
    }

    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }

    fn add(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x + y
    }

    fn sub(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x - y
    }

    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x * y
    }

    fn neg(&self, x: &BigInt) -> BigInt {
        -x
    }

    fn div_exact(&self, f: &BigInt, g: &BigInt) -> Result<Option<BigInt>> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = f.div_rem(g);
        Ok(r.is_zero().then_some(q))
    }

    fn is_unit(&self, x: &BigInt) -> bool {
        x.abs().is_one()
    }

    fn normalizing_unit(&self, x: &BigInt) -> BigInt {
        if x.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }

    /// Always nonnegative.
    fn gcd(&self, x: &BigInt, y: &BigInt) -> Result<BigInt> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroArguments);
        }
        Ok(x.gcd(y))
    }

    /// `0, 1, -1, 2, -2, …, bound, -bound`.
    fn search_points(&self, bound: u64) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(2 * bound as usize + 1);
        out.push(BigInt::zero());
        for k in 1..=bound {
            out.push(BigInt::from(k));
            out.push(-BigInt::from(k));
        }
        out
    }

    fn name(&self) -> String {
        "Z".to_string()
    }
}
