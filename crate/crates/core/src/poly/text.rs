//! Canonical text form of polynomials and its parser.
//!
//! Terms are printed in descending degree, e.g. `8x^4 - 8x^2 + 1`. Over a
//! quadratic ring every coefficient is bracketed: `[1+2w]x^2 - [3]x + [0+1w]`,
//! where `w` stands for ω. Rational coefficients have their sign pulled out
//! as a term separator; irrational ones keep their signs inside the brackets.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::ring::{IntRing, QuadInt, QuadRing, Ring};

/// Largest exponent the parser accepts.
const MAX_EXPONENT: usize = 100_000;

/// Rings whose polynomials have a text form.
pub trait TextRing: Ring {
    /// Splits a nonzero coefficient into (is_negative, body). The body is
    /// `None` when it is an omittable 1.
    fn coeff_text(&self, c: &Self::Elem) -> (bool, Option<String>);

    /// Builds `a + bω`, rejecting irrational values in ℤ.
    fn from_pair(&self, a: BigInt, b: BigInt) -> std::result::Result<Self::Elem, &'static str>;
}

impl TextRing for IntRing {
    fn coeff_text(&self, c: &BigInt) -> (bool, Option<String>) {
        let mag = c.abs();
        (c.is_negative(), (!mag.is_one()).then(|| mag.to_string()))
    }

    fn from_pair(&self, a: BigInt, b: BigInt) -> std::result::Result<BigInt, &'static str> {
        if b.is_zero() {
            Ok(a)
        } else {
            Err("w is not available over Z")
        }
    }
}

impl TextRing for QuadRing {
    fn coeff_text(&self, c: &QuadInt) -> (bool, Option<String>) {
        if c.is_rational() {
            (c.a().is_negative(), Some(format!("[{}]", c.a().abs())))
        } else {
            (false, Some(format!("[{c}]")))
        }
    }

    fn from_pair(&self, a: BigInt, b: BigInt) -> std::result::Result<QuadInt, &'static str> {
        Ok(self.elem(a, b))
    }
}

impl<R: TextRing> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(c) {
                continue;
            }
            let (neg, body) = self.ring.coeff_text(c);
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match (body, i) {
                (None, 0) => f.write_str("1")?,
                (None, _) => {}
                (Some(b), _) => f.write_str(&b)?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// The coefficient ring named on the command line: `Z` or `Q(sqrt d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingSpec {
    Int,
    Quad(QuadRing),
}

impl RingSpec {
    /// Accepts `Z`, `Q(sqrt d)` and `Q(sqrt(d))`; `d` must be norm-Euclidean.
    pub fn parse(text: &str) -> Result<RingSpec> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "Z" {
            return Ok(RingSpec::Int);
        }
        let syntax = || Error::Syntax { pos: 0, msg: format!("unknown ring {text:?}; expected Z or Q(sqrt d)") };
        let inner = compact
            .strip_prefix("Q(sqrt")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(syntax)?;
        let inner = inner.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(inner);
        let d: i64 = inner.parse().map_err(|_| syntax())?;
        Ok(RingSpec::Quad(QuadRing::euclidean(d)?))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Int => f.write_str("Z"),
            RingSpec::Quad(q) => write!(f, "{q}"),
        }
    }
}

/// Parses a polynomial in `x`. Terms may repeat and come in any order;
/// whitespace is ignored and `*` between coefficient and `x` is optional.
/// Floating-point and rational literals are rejected.
pub fn parse_poly<R: TextRing>(text: &str, ring: &R) -> Result<Poly<R>> {
    Parser { chars: text.char_indices().collect(), i: 0, len: text.len() }.poly(ring)
}

struct Parser {
    chars: Vec<(usize, char)>,
    i: usize,
    len: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.len, |&(p, _)| p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.i).is_some_and(|&(_, c)| c.is_whitespace()) {
            self.i += 1;
        }
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.i += 1;
                Some(false)
            }
            Some('-') => {
                self.i += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Result<Option<BigInt>> {
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(None);
        }
        let mut s = String::new();
        while let Some(&(_, c)) = self.chars.get(self.i) {
            if !c.is_ascii_digit() {
                break;
            }
            s.push(c);
            self.i += 1;
        }
        match self.chars.get(self.i).map(|&(_, c)| c) {
            Some('.') | Some('e') | Some('E') => self.err("floating-point literals are not supported"),
            _ => Ok(Some(s.parse().expect("ascii digits"))),
        }
    }

    fn poly<R: TextRing>(mut self, ring: &R) -> Result<Poly<R>> {
        if self.peek().is_none() {
            return self.err("empty expression");
        }
        let mut terms: BTreeMap<usize, R::Elem> = BTreeMap::new();
        let mut first = true;
        loop {
            let neg = match self.sign() {
                Some(neg) => neg,
                None if first => false,
                None => return self.unexpected("expected '+' or '-'"),
            };
            first = false;
            let (coeff, power) = self.term(ring)?;
            let coeff = if neg { ring.neg(&coeff) } else { coeff };
            let slot = terms.entry(power).or_insert_with(|| ring.zero());
            *slot = ring.add(slot, &coeff);
            if self.peek().is_none() {
                break;
            }
        }
        let degree = terms.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![ring.zero(); degree + 1];
        for (p, c) in terms {
            coeffs[p] = c;
        }
        Ok(Poly::from_vec(ring.clone(), coeffs))
    }

    fn unexpected<T>(&mut self, fallback: &str) -> Result<T> {
        match self.peek() {
            Some('/') => self.err("rational coefficients are not supported"),
            Some('.') => self.err("floating-point literals are not supported"),
            Some(c) => self.err(format!("{fallback}, found {c:?}")),
            None => self.err(format!("{fallback}, found end of input")),
        }
    }

    fn term<R: TextRing>(&mut self, ring: &R) -> Result<(R::Elem, usize)> {
        let coeff = if let Some(n) = self.digits()? {
            Some(ring.from_int(n))
        } else if self.peek() == Some('[') {
            Some(self.bracket(ring)?)
        } else {
            None
        };
        let star = coeff.is_some() && self.eat('*');
        if self.eat('x') {
            let power = if self.eat('^') {
                let start = self.pos();
                let n = self.digits()?.ok_or(Error::Syntax { pos: start, msg: "expected exponent".into() })?;
                usize::try_from(&n)
                    .ok()
                    .filter(|&p| p <= MAX_EXPONENT)
                    .ok_or(Error::Syntax { pos: start, msg: format!("exponent exceeds {MAX_EXPONENT}") })?
            } else {
                1
            };
            Ok((coeff.unwrap_or_else(|| ring.one()), power))
        } else if star {
            self.unexpected("expected 'x' after '*'")
        } else {
            match coeff {
                Some(c) => Ok((c, 0)),
                None => self.unexpected("expected coefficient or 'x'"),
            }
        }
    }

    /// `[a+bw]` with integer and `w` terms in any order.
    fn bracket<R: TextRing>(&mut self, ring: &R) -> Result<R::Elem> {
        let open = self.pos();
        self.i += 1;
        let (mut a, mut b) = (BigInt::zero(), BigInt::zero());
        let mut first = true;
        loop {
            if self.eat(']') {
                if first {
                    return Err(Error::Syntax { pos: open, msg: "empty brackets".into() });
                }
                break;
            }
            let neg = match self.sign() {
                Some(neg) => neg,
                None if first => false,
                None => return self.unexpected("expected '+', '-' or ']'"),
            };
            first = false;
            let n = self.digits()?;
            let has_w = self.eat('w');
            let v = match (n, has_w) {
                (Some(n), _) => n,
                (None, true) => BigInt::one(),
                (None, false) => return self.unexpected("expected integer or 'w'"),
            };
            let v = if neg { -v } else { v };
            if has_w {
                b += v;
            } else {
                a += v;
            }
        }
        ring.from_pair(a, b).map_err(|msg| Error::Syntax { pos: open, msg: msg.into() })
    }
}
