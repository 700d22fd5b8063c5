use super::Poly;
use crate::error::{Error, Result};
use crate::ring::Ring;

impl<R: Ring> Poly<R> {
    /// The gcd of the coefficients. Positive over ℤ; over a quadratic ring
    /// an unspecified associate.
    pub fn content(&self) -> Result<R::Elem> {
        let r = &self.ring;
        let mut nonzero = self.coeffs.iter().filter(|c| !r.is_zero(c));
        let first = nonzero.next().ok_or(Error::ZeroPolynomial)?;
        let mut g = r.gcd(first, &r.zero())?;
        for c in nonzero {
            if r.is_unit(&g) {
                break;
            }
            g = r.gcd(&g, c)?;
        }
        Ok(g)
    }

    /// Whether the content is a unit.
    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.ring.is_unit(&self.content()?))
    }

    /// Splits `self = c·h` with `c` the content and `h` primitive.
    pub fn primitive_part(&self) -> Result<(R::Elem, Poly<R>)> {
        let c = self.content()?;
        let r = &self.ring;
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                r.div_exact(a, &c)?.ok_or_else(|| {
                    Error::InternalInvariantViolation(format!("content {c} does not divide {a}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((c, Poly::from_vec(r.clone(), coeffs)))
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use crate::poly::IntPoly;
    use crate::ring::{IntRing, QuadRing};
    use crate::{Error, Poly};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    #[test]
    fn integer_content() {
        assert_eq!(p(&[2, 4, 6]).content().unwrap(), BigInt::from(2));
        assert_eq!(p(&[1, 0, -8, 0, 8]).content().unwrap(), BigInt::from(1));
        assert_eq!(p(&[5]).content().unwrap(), BigInt::from(5));
        assert_eq!(p(&[-6, 0, -4]).content().unwrap(), BigInt::from(2));
        assert_eq!(IntPoly::zero(IntRing).content(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn primitivity() {
        assert!(!p(&[2, 2]).is_primitive().unwrap());
        assert!(p(&[0, 1]).is_primitive().unwrap());
        assert_eq!(IntPoly::zero(IntRing).is_primitive(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn primitive_parts() {
        assert_eq!(p(&[2, 4, 6]).primitive_part().unwrap(), (BigInt::from(2), p(&[1, 2, 3])));
        assert_eq!(p(&[0, 1]).primitive_part().unwrap(), (BigInt::from(1), p(&[0, 1])));
        // q₄ = 8x³ − 4x
        assert_eq!(p(&[0, -4, 0, 8]).primitive_part().unwrap(), (BigInt::from(4), p(&[0, -1, 0, 2])));
        // sign stays with the primitive part
        assert_eq!(p(&[-3, -6]).primitive_part().unwrap(), (BigInt::from(3), p(&[-1, -2])));
    }

    #[test]
    fn quadratic_content() {
        let r = QuadRing::new(-1).unwrap();
        // (1+ω)x + 2 has content an associate of 1+ω
        let f = Poly::new(r, vec![r.elem(2, 0), r.elem(1, 1)]).unwrap();
        let c = f.content().unwrap();
        assert!(c.divided_by(&r.elem(1, 1)).unwrap().unwrap().is_unit());
        let (c2, h) = f.primitive_part().unwrap();
        assert_eq!(c2, c);
        assert!(h.is_primitive().unwrap());
        assert_eq!(h.scale(&c), f);

        let bad = QuadRing::new(-5).unwrap();
        let g = Poly::new(bad, vec![bad.elem(2, 0), bad.elem(1, 1)]).unwrap();
        assert_eq!(g.content(), Err(Error::UnsupportedRing(-5)));
    }
}
