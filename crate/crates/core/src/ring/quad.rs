use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::trial_factor;
use super::{IntRing, Ring};
use crate::error::{Error, Result};

/// Discriminants whose quadratic field is norm-Euclidean. Only these rings
/// support [`QuadInt::gcd`] and therefore content computations.
pub const NORM_EUCLIDEAN: [i64; 21] = [
    -11, -7, -3, -2, -1, 2, 3, 5, 6, 7, 11, 13, 17, 19, 21, 29, 33, 37, 41, 57, 73,
];

const MAX_ABS_D: i64 = 1_000_000;

/// How the generator ω of the ring of integers relates to √d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisMode {
    /// d ≡ 2, 3 (mod 4): ω = √d, so ω² = d.
    Sqrt,
    /// d ≡ 1 (mod 4): ω = (1 + √d)/2, so ω² = ω + (d − 1)/4.
    Half,
}

/// The ring of integers ℤ[ω] of ℚ(√d).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadRing {
    d: i64,
    mode: BasisMode,
}

impl QuadRing {
    /// Validates that `d` is square-free, not 0 or 1, and `|d| ≤ 10^6`.
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::InvalidDescriptor { d, reason: "d must not be 0 or 1" });
        }
        if d.abs() > MAX_ABS_D {
            return Err(Error::InvalidDescriptor { d, reason: "|d| exceeds 10^6" });
        }
        let factors = trial_factor(d.unsigned_abs())?;
        if factors.iter().any(|&(_, e)| e > 1) {
            return Err(Error::InvalidDescriptor { d, reason: "d is not square-free" });
        }
        let mode = if d.rem_euclid(4) == 1 { BasisMode::Half } else { BasisMode::Sqrt };
        Ok(QuadRing { d, mode })
    }

    /// Like [`QuadRing::new`], but additionally requires a norm-Euclidean field.
    pub fn euclidean(d: i64) -> Result<Self> {
        if !NORM_EUCLIDEAN.contains(&d) {
            return Err(Error::UnsupportedRing(d));
        }
        Self::new(d)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn mode(&self) -> BasisMode {
        self.mode
    }

    pub fn is_norm_euclidean(&self) -> bool {
        NORM_EUCLIDEAN.contains(&self.d)
    }

    /// The element `a + bω`.
    pub fn elem(&self, a: impl Into<BigInt>, b: impl Into<BigInt>) -> QuadInt {
        QuadInt { a: a.into(), b: b.into(), ring: *self }
    }

    pub fn zero(&self) -> QuadInt {
        self.elem(0, 0)
    }

    pub fn one(&self) -> QuadInt {
        self.elem(1, 0)
    }

    pub fn omega(&self) -> QuadInt {
        self.elem(0, 1)
    }

    /// (d − 1)/4 in HALF mode, the constant term of ω² − ω.
    fn quarter(&self) -> BigInt {
        BigInt::from((self.d - 1) / 4)
    }
}

impl fmt::Display for QuadRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt {})", self.d)
    }
}

/// The element `a + bω` of a quadratic ring of integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    a: BigInt,
    b: BigInt,
    ring: QuadRing,
}

impl QuadInt {
    /// The coefficient of 1.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// The coefficient of ω.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn ring(&self) -> QuadRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Whether the element lies in ℤ, i.e. is fixed by conjugation.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check(&self, other: &QuadInt) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MismatchedRing)
        }
    }

    pub fn try_add(&self, other: &QuadInt) -> Result<QuadInt> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &QuadInt) -> Result<QuadInt> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &QuadInt) -> Result<QuadInt> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &QuadInt) -> QuadInt {
        self.ring.elem(&self.a + &other.a, &self.b + &other.b)
    }

    fn sub_unchecked(&self, other: &QuadInt) -> QuadInt {
        self.ring.elem(&self.a - &other.a, &self.b - &other.b)
    }

    fn mul_unchecked(&self, other: &QuadInt) -> QuadInt {
        let (a, b, c, e) = (&self.a, &self.b, &other.a, &other.b);
        let be = b * e;
        match self.ring.mode {
            BasisMode::Sqrt => self.ring.elem(a * c + &be * self.ring.d, a * e + b * c),
            BasisMode::Half => {
                let one = a * c + &be * self.ring.quarter();
                let w = a * e + b * c + be;
                self.ring.elem(one, w)
            }
        }
    }

    /// The nontrivial Galois automorphism σ.
    pub fn conjugate(&self) -> QuadInt {
        match self.ring.mode {
            BasisMode::Sqrt => self.ring.elem(self.a.clone(), -&self.b),
            // σ(ω) = 1 − ω
            BasisMode::Half => self.ring.elem(&self.a + &self.b, -&self.b),
        }
    }

    /// x·σ(x), an integer.
    pub fn norm(&self) -> BigInt {
        let (a, b) = (&self.a, &self.b);
        match self.ring.mode {
            BasisMode::Sqrt => a * a - b * b * self.ring.d,
            BasisMode::Half => a * a + a * b - b * b * self.ring.quarter(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// Returns `Some(q)` with `self = g·q` when `g` divides `self`.
    pub fn divided_by(&self, g: &QuadInt) -> Result<Option<QuadInt>> {
        self.check(g)?;
        let n = g.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let t = self.mul_unchecked(&g.conjugate());
        let (qa, ra) = t.a.div_rem(&n);
        let (qb, rb) = t.b.div_rem(&n);
        Ok((ra.is_zero() && rb.is_zero()).then(|| self.ring.elem(qa, qb)))
    }

    /// A greatest common divisor by norm-Euclidean descent. Only defined for
    /// rings in [`NORM_EUCLIDEAN`].
    pub fn gcd(&self, other: &QuadInt) -> Result<QuadInt> {
        self.check(other)?;
        if !self.ring.is_norm_euclidean() {
            return Err(Error::UnsupportedRing(self.ring.d));
        }
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroArguments);
        }
        let (mut x, mut y) = (self.clone(), other.clone());
        while !y.is_zero() {
            let r = x.euclidean_remainder(&y)?;
            x = y;
            y = r;
        }
        Ok(x)
    }

    /// `self − q·y` for a quotient `q` that strictly lowers the absolute norm.
    fn euclidean_remainder(&self, y: &QuadInt) -> Result<QuadInt> {
        let n = y.norm();
        let t = self.mul_unchecked(&y.conjugate());
        let qa = round_half_toward_zero(&t.a, &n);
        let qb = round_half_toward_zero(&t.b, &n);
        let target = n.abs();
        let rem = |qa: &BigInt, qb: &BigInt| {
            self.sub_unchecked(&y.mul_unchecked(&self.ring.elem(qa.clone(), qb.clone())))
        };
        let r = rem(&qa, &qb);
        if r.norm().abs() < target {
            return Ok(r);
        }
        // Coordinate rounding is not always good enough in real fields, where
        // a valid quotient can lie further out along the hyperbola |N| < 1.
        for radius in [2i64, 4, 8, 16, 32, 64] {
            let mut best: Option<(BigInt, QuadInt)> = None;
            for da in -radius..=radius {
                for db in -radius..=radius {
                    let r = rem(&(&qa + da), &(&qb + db));
                    let rn = r.norm().abs();
                    if best.as_ref().is_none_or(|(bn, _)| rn < *bn) {
                        best = Some((rn, r));
                    }
                }
            }
            if let Some((bn, r)) = best {
                if bn < target {
                    return Ok(r);
                }
            }
        }
        Err(Error::InternalInvariantViolation(format!(
            "no Euclidean quotient found for {} / {}",
            self, y
        )))
    }
}

/// Nearest integer to `num/den`, ties toward zero.
fn round_half_toward_zero(num: &BigInt, den: &BigInt) -> BigInt {
    let (num, den) = if den.is_negative() { (-num, -den) } else { (num.clone(), den.clone()) };
    let (q, r) = num.div_mod_floor(&den);
    let twice: BigInt = r * 2;
    if twice > den {
        q + 1
    } else if twice < den || !q.is_negative() {
        q
    } else {
        q + 1
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "{}-{}w", self.a, -&self.b)
        } else {
            write!(f, "{}+{}w", self.a, self.b)
        }
    }
}

impl Add for &QuadInt {
    type Output = QuadInt;

    /// Panics if the operands come from different rings.
    fn add(self, rhs: &QuadInt) -> QuadInt {
        self.try_add(rhs).expect("mismatched quadratic rings")
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;

    fn sub(self, rhs: &QuadInt) -> QuadInt {
        self.try_sub(rhs).expect("mismatched quadratic rings")
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;

    fn mul(self, rhs: &QuadInt) -> QuadInt {
        self.try_mul(rhs).expect("mismatched quadratic rings")
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;

    fn neg(self) -> QuadInt {
        self.ring.elem(-&self.a, -&self.b)
    }
}

impl Ring for QuadRing {
    type Elem = QuadInt;

    fn zero(&self) -> QuadInt {
        self.elem(0, 0)
    }

    fn one(&self) -> QuadInt {
        self.elem(1, 0)
    }

    fn from_int(&self, n: BigInt) -> QuadInt {
        self.elem(n, 0)
    }

    fn owns(&self, x: &QuadInt) -> bool {
        x.ring == *self
    }

    fn is_zero(&self, x: &QuadInt) -> bool {
        x.is_zero()
    }

    fn add(&self, x: &QuadInt, y: &QuadInt) -> QuadInt {
        x.add_unchecked(y)
    }

    fn sub(&self, x: &QuadInt, y: &QuadInt) -> QuadInt {
        x.sub_unchecked(y)
    }

    fn mul(&self, x: &QuadInt, y: &QuadInt) -> QuadInt {
        x.mul_unchecked(y)
    }

    fn neg(&self, x: &QuadInt) -> QuadInt {
        -x
    }

    fn div_exact(&self, f: &QuadInt, g: &QuadInt) -> Result<Option<QuadInt>> {
        f.divided_by(g)
    }

    fn is_unit(&self, x: &QuadInt) -> bool {
        x.is_unit()
    }

    fn gcd(&self, x: &QuadInt, y: &QuadInt) -> Result<QuadInt> {
        x.gcd(y)
    }

    /// Points `a + bω` in growing shells `max(|a|, |b|) = r`, each shell in
    /// the integer search order `0, 1, -1, 2, -2, …` on both coordinates.
    fn search_points(&self, bound: u64) -> Vec<QuadInt> {
        let order = IntRing.search_points(bound);
        let mut out = Vec::with_capacity(order.len() * order.len());
        for r in 0..=bound {
            let r = BigInt::from(r);
            let prefix = order.iter().take_while(|v| v.abs() <= r);
            for a in prefix.clone() {
                for b in prefix.clone() {
                    if a.abs() == r || b.abs() == r {
                        out.push(self.elem(a.clone(), b.clone()));
                    }
                }
            }
        }
        out
    }

    fn name(&self) -> String {
        self.to_string()
    }
}
