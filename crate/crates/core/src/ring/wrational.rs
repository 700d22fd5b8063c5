use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor::trial_factor;
use crate::error::{Error, Result};

/// Whether `p` (assumed prime) lies in W: `p = 2` or `p ≡ 1 (mod 4)`.
pub fn is_w_prime(p: u64) -> bool {
    p == 2 || p % 4 == 1
}

/// An element of ℤ[W]: a reduced fraction whose denominator factors over
/// W-primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WRational {
    num: BigInt,
    den: BigInt,
}

fn factor_big(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    let n = n.abs().to_u64().ok_or(Error::FactoringLimit)?;
    trial_factor(n)
}

/// The first prime factor of `n` outside W, if any.
fn first_non_w_prime(n: &BigInt) -> Result<Option<u64>> {
    Ok(factor_big(n)?.into_iter().map(|(p, _)| p).find(|&p| !is_w_prime(p)))
}

impl WRational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (mut num, mut den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        if let Some(p) = first_non_w_prime(&den)? {
            return Err(Error::DenominatorNotInW(p));
        }
        Ok(WRational { num, den })
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        WRational { num: n.into(), den: BigInt::one() }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Units of ℤ[W] are the fractions whose numerator also factors over
    /// W-primes.
    pub fn is_unit(&self) -> Result<bool> {
        if self.num.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(first_non_w_prime(&self.num)?.is_none())
    }

    pub fn add(&self, other: &WRational) -> Result<WRational> {
        WRational::new(&self.num * &other.den + &other.num * &self.den, &self.den * &other.den)
    }

    pub fn mul(&self, other: &WRational) -> Result<WRational> {
        WRational::new(&self.num * &other.num, &self.den * &other.den)
    }
}

impl fmt::Display for WRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
