use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::ring::{is_w_prime, primes_up_to, WRational};

/// Largest W-prime allowed in a sampled denominator.
pub const DENOMINATOR_PRIME_BOUND: u64 = 100;
/// Most W-prime factors (with repetition) in a sampled denominator.
pub const MAX_DENOMINATOR_FACTORS: usize = 2;
/// Bound on the sampled numerator magnitude.
pub const NUMERATOR_BOUND: i64 = 10_000;

/// `k² + 1` in ℤ[W] and whether it is a unit there.
pub fn zw_value(k: &WRational) -> Result<(WRational, bool)> {
    let v = k.mul(k)?.add(&WRational::from_int(1))?;
    let unit = v.is_unit()?;
    Ok((v, unit))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZwFailure {
    pub k: WRational,
    pub value: WRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZwReport {
    pub trials: u64,
    pub seed: u64,
    pub passed: u64,
    pub failures: Vec<ZwFailure>,
}

impl ZwReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Samples `k = a/b` in ℤ[W] and checks that `k² + 1` is always a unit.
pub fn zw_unit_demo(trials: u64, seed: u64) -> Result<ZwReport> {
    let w_primes: Vec<u64> =
        primes_up_to(DENOMINATOR_PRIME_BOUND).into_iter().filter(|&p| is_w_prime(p)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut passed = 0;
    let mut failures = Vec::new();
    for _ in 0..trials {
        let factors = rng.gen_range(0..=MAX_DENOMINATOR_FACTORS);
        let b: u64 = (0..factors).map(|_| w_primes[rng.gen_range(0..w_primes.len())]).product();
        let a = rng.gen_range(-NUMERATOR_BOUND..=NUMERATOR_BOUND);
        let k = WRational::new(a, b)?;
        let (value, unit) = zw_value(&k)?;
        if unit {
            passed += 1;
        } else {
            failures.push(ZwFailure { k, value });
        }
    }
    Ok(ZwReport { trials, seed, passed, failures })
}
