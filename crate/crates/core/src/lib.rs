//! Exact polynomial divisibility over ℤ and quadratic rings of integers.
//!
//! The crate decides when pointwise divisibility `g(k) | f(k)` forces
//! polynomial divisibility, and provides the supporting machinery:
//! quadratic integer arithmetic, dense polynomials with content and
//! pseudo-division, norm polynomials for quadratic extensions, and
//! reproducible demonstrations built on top of them.
//!
//! ```
//! use dringkit::{lab, parse_poly, IntRing};
//!
//! let q8 = parse_poly("128x^7 - 192x^5 + 80x^3 - 8x", &IntRing).unwrap();
//! let p4 = parse_poly("8x^4 - 8x^2 + 1", &IntRing).unwrap();
//! let cert = lab::certify_divisibility(&q8, &p4, 100).unwrap();
//! assert_eq!(cert.quotient.unwrap().to_string(), "16x^3 - 8x");
//! ```

mod error;
pub mod galois;
pub mod lab;
pub mod poly;
pub mod report;
pub mod ring;

pub use error::{Error, Result};
pub use poly::{parse_poly, IntPoly, Poly, PseudoDivResult, RingSpec};
pub use ring::{IntRing, QuadInt, QuadRing, Ring, WRational};
