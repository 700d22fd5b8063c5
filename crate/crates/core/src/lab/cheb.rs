use std::ops::RangeInclusive;

use num_bigint::BigInt;

use super::oracle::{certify_divisibility, CertVerdict, DivisibilityCertificate, Witness};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::ring::{IntRing, Ring};

/// Witness search bound used by the polynomial phase of [`cheb_certify`].
const CERTIFY_SEARCH_BOUND: u64 = 1000;

/// The `n`-th pair of the recurrences `p_{n+1} = 2x·p_n − p_{n−1}` with
/// `p_0 = 1, p_1 = x` and `q_{n+1} = 2x·q_n − q_{n−1}` with `q_0 = 0, q_1 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebPair {
    pub n: usize,
    pub p: IntPoly,
    pub q: IntPoly,
}

fn step(cur: &IntPoly, prev: &IntPoly) -> IntPoly {
    &cur.shift(1).scale(&BigInt::from(2)) - prev
}

/// Pairs for `n = 0..=n_max`.
pub fn cheb_generate(n_max: usize) -> Vec<ChebPair> {
    let mut out = Vec::with_capacity(n_max + 1);
    let (mut p_prev, mut p_cur) = (IntPoly::one(IntRing), IntPoly::x(IntRing));
    let (mut q_prev, mut q_cur) = (IntPoly::zero(IntRing), IntPoly::one(IntRing));
    out.push(ChebPair { n: 0, p: p_prev.clone(), q: q_prev.clone() });
    for n in 1..=n_max {
        out.push(ChebPair { n, p: p_cur.clone(), q: q_cur.clone() });
        let p_next = step(&p_cur, &p_prev);
        let q_next = step(&q_cur, &q_prev);
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebReport {
    pub n: usize,
    pub p_n: IntPoly,
    pub q_2n: IntPoly,
    pub range: (i64, i64),
    /// Points where `p_n(a) ≠ 0` and the congruence was tested.
    pub evaluated: usize,
    /// Points skipped because `p_n(a) = 0`.
    pub skipped_zeros: usize,
    pub eval_failures: Vec<Witness<BigInt>>,
    pub certificate: DivisibilityCertificate<IntRing>,
}

impl ChebReport {
    pub fn passed(&self) -> bool {
        self.eval_failures.is_empty() && self.certificate.verdict == CertVerdict::Divides
    }
}

/// Checks `p_n(a) | q_{2n}(a)` over `range` and certifies `p_n | q_{2n}` in ℤ[x].
pub fn cheb_certify(n: usize, range: RangeInclusive<i64>) -> Result<ChebReport> {
    if n == 0 {
        return Err(Error::PreconditionViolated("n must be at least 1"));
    }
    let pairs = cheb_generate(2 * n);
    let p_n = pairs[n].p.clone();
    let q_2n = pairs[2 * n].q.clone();

    let (mut evaluated, mut skipped_zeros) = (0, 0);
    let mut eval_failures = Vec::new();
    for a in range.clone() {
        let k = BigInt::from(a);
        let g_value = p_n.eval(&k)?;
        if IntRing.is_zero(&g_value) {
            skipped_zeros += 1;
            continue;
        }
        evaluated += 1;
        let f_value = q_2n.eval(&k)?;
        if IntRing.div_exact(&f_value, &g_value)?.is_none() {
            eval_failures.push(Witness { k, g_value, f_value });
        }
    }
    let certificate = certify_divisibility(&q_2n, &p_n, CERTIFY_SEARCH_BOUND)?;
    Ok(ChebReport {
        n,
        p_n,
        q_2n,
        range: (*range.start(), *range.end()),
        evaluated,
        skipped_zeros,
        eval_failures,
        certificate,
    })
}
