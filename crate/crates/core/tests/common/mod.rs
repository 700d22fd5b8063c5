#![allow(dead_code)]

use dringkit::{IntPoly, IntRing, Poly, QuadInt, QuadRing, Ring};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const COEFF_BOUND: i64 = 50;
pub const MAX_DEGREE: usize = 12;
pub const PROPERTY_DS: [i64; 3] = [-1, -3, 5];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform coefficients in [−50, 50] with a nonzero leading coefficient.
pub fn int_poly_of_degree(rng: &mut ChaCha8Rng, degree: usize) -> IntPoly {
    let mut coeffs: Vec<BigInt> =
        (0..=degree).map(|_| BigInt::from(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))).collect();
    while coeffs[degree] == BigInt::from(0) {
        coeffs[degree] = BigInt::from(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND));
    }
    Poly::new(IntRing, coeffs).unwrap()
}

/// Degree uniform in [lo, 12].
pub fn int_poly(rng: &mut ChaCha8Rng, lo: usize) -> IntPoly {
    let d = rng.gen_range(lo..=MAX_DEGREE);
    int_poly_of_degree(rng, d)
}

pub fn primitive_int_poly(rng: &mut ChaCha8Rng, lo: usize) -> IntPoly {
    loop {
        let p = int_poly(rng, lo);
        if p.is_primitive().unwrap() {
            return p;
        }
    }
}

pub fn quad_elem(rng: &mut ChaCha8Rng, ring: QuadRing, bound: i64) -> QuadInt {
    ring.elem(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

pub fn quad_poly_of_degree(rng: &mut ChaCha8Rng, ring: QuadRing, degree: usize) -> Poly<QuadRing> {
    let mut coeffs: Vec<QuadInt> = (0..=degree).map(|_| quad_elem(rng, ring, COEFF_BOUND)).collect();
    while coeffs[degree].is_zero() {
        coeffs[degree] = quad_elem(rng, ring, COEFF_BOUND);
    }
    Poly::new(ring, coeffs).unwrap()
}

pub fn quad_poly(rng: &mut ChaCha8Rng, ring: QuadRing, lo: usize) -> Poly<QuadRing> {
    let d = rng.gen_range(lo..=MAX_DEGREE);
    quad_poly_of_degree(rng, ring, d)
}

pub fn primitive_quad_poly(rng: &mut ChaCha8Rng, ring: QuadRing, lo: usize) -> Poly<QuadRing> {
    loop {
        let p = quad_poly(rng, ring, lo);
        if p.is_primitive().unwrap() {
            return p;
        }
    }
}

/// A polynomial of degree in [0, 12], or zero with probability 1/20.
pub fn maybe_zero<R: Ring>(rng: &mut ChaCha8Rng, make: impl FnOnce(&mut ChaCha8Rng) -> Poly<R>, ring: R) -> Poly<R> {
    if rng.gen_ratio(1, 20) {
        Poly::zero(ring)
    } else {
        make(rng)
    }
}

pub fn ring(d: i64) -> QuadRing {
    QuadRing::new(d).unwrap()
}
