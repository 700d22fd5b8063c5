use super::Poly;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Fraction-free division `multiplier·f = g·quotient + remainder`, where
/// `multiplier = lc(g)^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoDivResult<R: Ring> {
    pub multiplier: R::Elem,
    pub quotient: Poly<R>,
    pub remainder: Poly<R>,
    pub s: u32,
}

impl<R: Ring> PseudoDivResult<R> {
    /// Re-expands both sides of the division identity.
    pub fn verify(&self, f: &Poly<R>, g: &Poly<R>) -> bool {
        let lhs = f.scale(&self.multiplier);
        let rhs = &(g * &self.quotient) + &self.remainder;
        let small = match (self.remainder.degree(), g.degree()) {
            (None, _) => true,
            (Some(dr), Some(dg)) => dr < dg,
            (Some(_), None) => false,
        };
        lhs == rhs && small
    }
}

impl<R: Ring> Poly<R> {
    /// Pseudo-division of `self` by `g` with `s = max(deg f − deg g + 1, 0)`.
    pub fn pseudo_divide(&self, g: &Poly<R>) -> Result<PseudoDivResult<R>> {
        self.check(g)?;
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let r = &self.ring;
        let df = match self.degree() {
            Some(df) if df >= dg => df,
            _ => {
                return Ok(PseudoDivResult {
                    multiplier: r.one(),
                    quotient: Poly::zero(r.clone()),
                    remainder: self.clone(),
                    s: 0,
                })
            }
        };
        let s = (df - dg + 1) as u32;
        let lc = g.leading().expect("nonzero divisor").clone();

        let mut rem = self.clone();
        let mut quo = Poly::zero(r.clone());
        let mut steps = 0;
        while let Some(dr) = rem.degree().filter(|&dr| dr >= dg) {
            let lead = rem.leading().expect("nonzero remainder").clone();
            let term = Poly::monomial(r.clone(), lead, dr - dg);
            quo = &quo.scale(&lc) + &term;
            rem = &rem.scale(&lc) - &(&term * g);
            steps += 1;
        }
        let pad = r.pow(&lc, s - steps);
        Ok(PseudoDivResult {
            multiplier: r.pow(&lc, s),
            quotient: quo.scale(&pad),
            remainder: rem.scale(&pad),
            s,
        })
    }

    /// Division in `R[x]`: `Some(q)` with `self = g·q`, or `None` when `g`
    /// does not divide `self`. Eliminates the leading term at each step and
    /// gives up at the first inexact coefficient division.
    pub fn exact_divide(&self, g: &Poly<R>) -> Result<Option<Poly<R>>> {
        self.check(g)?;
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let r = &self.ring;
        let Some(df) = self.degree() else {
            return Ok(Some(Poly::zero(r.clone())));
        };
        if df < dg {
            return Ok(None);
        }
        let lc = &g.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let mut quo = vec![r.zero(); df - dg + 1];
        for i in (dg..=df).rev() {
            if r.is_zero(&rem[i]) {
                continue;
            }
            let Some(c) = r.div_exact(&rem[i], lc)? else {
                return Ok(None);
            };
            for (j, gj) in g.coeffs.iter().enumerate() {
                let k = i - dg + j;
                rem[k] = r.sub(&rem[k], &r.mul(&c, gj));
            }
            quo[i - dg] = c;
        }
        if rem[..dg].iter().any(|c| !r.is_zero(c)) {
            return Ok(None);
        }
        Ok(Some(Poly::from_vec(r.clone(), quo)))
    }

    /// Division in `K[x]` for `K` the fraction field: `Some((den, q))` with
    /// `den·self = g·q` when `g` divides `self` over `K`. The pair is
    /// reduced by the gcd of `den` and the content of `q` where the ring
    /// supports gcds, with a positive denominator over ℤ.
    pub fn field_divide(&self, g: &Poly<R>) -> Result<Option<(R::Elem, Poly<R>)>> {
        let pd = self.pseudo_divide(g)?;
        if !pd.remainder.is_zero() {
            return Ok(None);
        }
        let r = &self.ring;
        if pd.quotient.is_zero() {
            return Ok(Some((r.one(), pd.quotient)));
        }
        let (mut den, mut quo) = (pd.multiplier, pd.quotient);
        match quo.content().and_then(|c| r.gcd(&den, &c)) {
            Ok(common) => {
                den = r.div_exact(&den, &common)?.expect("gcd divides the multiplier");
                quo = quo.primitive_part_by(&common)?;
            }
            Err(Error::UnsupportedRing(_)) => {}
            Err(e) => return Err(e),
        }
        let u = r.normalizing_unit(&den);
        Ok(Some((r.mul(&den, &u), quo.scale(&u))))
    }

    fn primitive_part_by(&self, c: &R::Elem) -> Result<Poly<R>> {
        self.exact_divide(&Poly::constant(self.ring.clone(), c.clone()))?
            .ok_or_else(|| Error::InternalInvariantViolation(format!("{c} does not divide the pseudo-quotient")))
    }
}
