mod common;

use common::*;
use dringkit::{parse_poly, IntPoly, IntRing, Poly, Ring};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

fn int_poly_strategy() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..=50, 0..=13).prop_map(|c| IntPoly::from_ints(&c))
}

proptest! {
    #[test]
    fn degree_is_additive(p in int_poly_strategy(), q in int_poly_strategy()) {
        let prod = &p * &q;
        match (p.degree(), q.degree()) {
            (Some(a), Some(b)) => prop_assert_eq!(prod.degree(), Some(a + b)),
            _ => prop_assert_eq!(prod.degree(), None),
        }
    }

    #[test]
    fn exact_division_round_trips(f in int_poly_strategy(), g in int_poly_strategy()) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), Some(f));
    }

    #[test]
    fn content_is_multiplicative(p in int_poly_strategy(), q in int_poly_strategy()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let lhs = (&p * &q).content().unwrap();
        prop_assert_eq!(lhs, p.content().unwrap() * q.content().unwrap());
    }

    #[test]
    fn primitive_part_reassembles(p in int_poly_strategy()) {
        prop_assume!(!p.is_zero());
        let (c, h) = p.primitive_part().unwrap();
        prop_assert!(c > BigInt::from(0));
        prop_assert!(h.is_primitive().unwrap());
        prop_assert_eq!(h.degree(), p.degree());
        prop_assert_eq!(h.scale(&c), p);
    }

    #[test]
    fn int_text_round_trips(p in int_poly_strategy()) {
        prop_assert_eq!(parse_poly(&p.to_string(), &IntRing).unwrap(), p);
    }
}

#[test]
fn gauss_lemma_over_integers() {
    let mut rng = rng(21);
    for _ in 0..1000 {
        let p = primitive_int_poly(&mut rng, 0);
        let q = primitive_int_poly(&mut rng, 0);
        assert!((&p * &q).is_primitive().unwrap(), "{p} * {q}");
    }
}

#[test]
fn gauss_lemma_over_quadratic_rings() {
    let mut rng = rng(22);
    for d in PROPERTY_DS {
        let r = ring(d);
        for _ in 0..1000 {
            let p = primitive_quad_poly(&mut rng, r, 0);
            let q = primitive_quad_poly(&mut rng, r, 0);
            assert!((&p * &q).is_primitive().unwrap(), "d={d}: {p} * {q}");
        }
    }
}

fn check_pseudo_division<R: Ring>(f: &Poly<R>, g: &Poly<R>) {
    let pd = f.pseudo_divide(g).unwrap();
    assert!(pd.verify(f, g));
    let expected_s = match (f.degree(), g.degree()) {
        (Some(df), Some(dg)) if df >= dg => (df - dg + 1) as u32,
        _ => 0,
    };
    assert_eq!(pd.s, expected_s);
    assert_eq!(pd.multiplier, f.ring().pow(g.leading().unwrap(), expected_s));
}

#[test]
fn pseudo_division_identity_including_edge_degrees() {
    let mut rng = rng(23);
    for _ in 0..300 {
        let g = int_poly(&mut rng, 0);
        let f = maybe_zero(&mut rng, |r| int_poly(r, 0), IntRing);
        check_pseudo_division(&f, &g);
        let c = int_poly_of_degree(&mut rng, 0);
        check_pseudo_division(&f, &c);
    }
    for d in PROPERTY_DS {
        let r = ring(d);
        for _ in 0..100 {
            let g = quad_poly(&mut rng, r, 0);
            let f = maybe_zero(&mut rng, |x| quad_poly(x, r, 0), r);
            check_pseudo_division(&f, &g);
        }
    }
}

#[test]
fn field_division_agrees_with_gauss_route() {
    let mut rng = rng(24);
    for i in 0..400 {
        let g = int_poly(&mut rng, 0);
        let f = if i % 2 == 0 {
            let q = int_poly(&mut rng, 0);
            let c = BigInt::from(rng.gen_range(1i64..=30));
            (&g * &q).scale(&c)
        } else {
            int_poly(&mut rng, 0)
        };
        let (_, h) = g.primitive_part().unwrap();
        let via_field = f.field_divide(&g).unwrap();
        let via_gauss = f.exact_divide(&h).unwrap();
        assert_eq!(via_field.is_some(), via_gauss.is_some(), "f={f} g={g}");
        if let Some((den, q)) = via_field {
            assert!(den > BigInt::from(0));
            assert_eq!(f.scale(&den), &g * &q);
        }
    }
}

#[test]
fn quadratic_text_round_trips() {
    let mut rng = rng(25);
    for d in [-1, -3, 5, 2, -7] {
        let r = ring(d);
        for _ in 0..1000 {
            let p = maybe_zero(&mut rng, |x| quad_poly(x, r, 0), r);
            assert_eq!(parse_poly(&p.to_string(), &r).unwrap(), p, "{p}");
        }
    }
}

#[test]
fn int_text_round_trips_seeded() {
    let mut rng = rng(26);
    for _ in 0..1000 {
        let p = maybe_zero(&mut rng, |x| int_poly(x, 0), IntRing);
        assert_eq!(parse_poly(&p.to_string(), &IntRing).unwrap(), p);
    }
}
