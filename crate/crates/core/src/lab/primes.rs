use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::ring::primes_up_to;

/// A prime `p` and a root of `f` modulo `p`, certifying `p ∈ S(f)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeSolvabilityRecord {
    p: u64,
    root: u64,
}

impl PrimeSolvabilityRecord {
    /// Re-checks `f(root) ≡ 0 (mod p)` with exact arithmetic.
    pub fn new(f: &IntPoly, p: u64, root: u64) -> Result<Self> {
        if root >= p {
            return Err(Error::PreconditionViolated("root must lie in [0, p)"));
        }
        let value = f.eval(&BigInt::from(root))?;
        if !value.mod_floor(&BigInt::from(p)).is_zero() {
            return Err(Error::InternalInvariantViolation(format!("{root} is not a root mod {p}")));
        }
        Ok(PrimeSolvabilityRecord { p, root })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn root(&self) -> u64 {
        self.root
    }
}

/// `f` with coefficients reduced into `[0, p)`, ascending.
fn reduce_mod(f: &IntPoly, p: u64) -> Vec<u64> {
    let m = BigInt::from(p);
    f.coeffs()
        .iter()
        .map(|c| c.mod_floor(&m).to_u64().expect("residue below p"))
        .collect()
}

fn least_root_mod(coeffs: &[u64], p: u64) -> Option<u64> {
    let p128 = p as u128;
    (0..p).find(|&k| {
        let v = coeffs.iter().rev().fold(0u128, |acc, &c| (acc * k as u128 + c as u128) % p128);
        v == 0
    })
}

/// The primes `p ≤ prime_limit` for which `f` has a root mod `p`, each with
/// its least root, in ascending order of `p`.
pub fn sf_search(f: &IntPoly, prime_limit: u64) -> Result<Vec<PrimeSolvabilityRecord>> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if prime_limit < 2 {
        return Err(Error::PreconditionViolated("prime limit must be at least 2"));
    }
    primes_up_to(prime_limit)
        .into_iter()
        .filter_map(|p| least_root_mod(&reduce_mod(f, p), p).map(|root| (p, root)))
        .map(|(p, root)| PrimeSolvabilityRecord::new(f, p, root))
        .collect()
}

/// Size of `S(f) − S(c)` restricted to primes up to each limit. A finite
/// window cannot show the set is infinite; growth across limits is the
/// observable.
pub fn sf_excluding_growth(f: &IntPoly, c: &BigInt, limits: &[u64]) -> Result<Vec<(u64, usize)>> {
    if c.is_zero() {
        return Err(Error::ZeroInput);
    }
    let max = limits.iter().copied().max().unwrap_or(2).max(2);
    let records = sf_search(f, max)?;
    Ok(limits
        .iter()
        .map(|&limit| {
            let n = records
                .iter()
                .filter(|r| r.p() <= limit && !(c % BigInt::from(r.p())).is_zero())
                .count();
            (limit, n)
        })
        .collect())
}
