//! Acceptance criteria. Runs as a plain binary so that every criterion
//! prints its own PASS/FAIL line under `cargo test`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use dringkit::galois::norm_poly;
use dringkit::lab::*;
use dringkit::{IntPoly, IntRing, Poly, Ring};
use num_bigint::BigInt;
use num_integer::Integer;

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

/// p_n and q_n for n = 0..=8, ascending coefficients.
fn known_pairs() -> Vec<(Vec<i64>, Vec<i64>)> {
    vec![
        (vec![1], vec![]),
        (vec![0, 1], vec![1]),
        (vec![-1, 0, 2], vec![0, 2]),
        (vec![0, -3, 0, 4], vec![-1, 0, 4]),
        (vec![1, 0, -8, 0, 8], vec![0, -4, 0, 8]),
        (vec![0, 5, 0, -20, 0, 16], vec![1, 0, -12, 0, 16]),
        (vec![-1, 0, 18, 0, -48, 0, 32], vec![0, 6, 0, -32, 0, 32]),
        (vec![0, -7, 0, 56, 0, -112, 0, 64], vec![-1, 0, 24, 0, -80, 0, 64]),
        (vec![1, 0, -32, 0, 160, 0, -256, 0, 128], vec![0, -8, 0, 80, 0, -192, 0, 128]),
    ]
}

fn ac01_pairs() -> Outcome {
    let start = Instant::now();
    let pairs = cheb_generate(8);
    let elapsed = start.elapsed();
    let mut matched = 0;
    for (pair, (p, q)) in pairs.iter().zip(known_pairs()) {
        ensure(pair.p == IntPoly::from_ints(&p), || format!("p_{} = {}", pair.n, pair.p))?;
        matched += 1;
        ensure(pair.q == IntPoly::from_ints(&q), || format!("q_{} = {}", pair.n, pair.q))?;
        matched += 1;
    }
    ensure(matched == 18, || format!("matched {matched} of 18"))?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("18/18 polynomials match, {elapsed:?}"))
}

fn ac02_certify_pn_q2n() -> Outcome {
    let start = Instant::now();
    let pairs = cheb_generate(8);
    let (q8, p4) = (&pairs[8].q, &pairs[4].p);
    let cert = certify_divisibility(q8, p4, 1000).map_err(|e| e.to_string())?;
    ensure(cert.verdict == CertVerdict::Divides, || "q8/p4 not DIVIDES".into())?;
    let quotient = cert.quotient.ok_or("missing quotient")?;
    ensure(&quotient * p4 == *q8, || "p4·quotient != q8".into())?;
    for n in 1..=64 {
        let rep = cheb_certify(n, -10..=10).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("cheb_certify({n}) failed"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("q8 = ({quotient})·p4; n = 1..64 certified, {elapsed:?}"))
}

fn ac03_congruence() -> Outcome {
    let start = Instant::now();
    let pairs = cheb_generate(40);
    let mut checked = 0;
    for n in 1..=20 {
        let (p, q) = (&pairs[n].p, &pairs[2 * n].q);
        for a in -50i64..=50 {
            let a = BigInt::from(a);
            let pa = p.eval(&a).unwrap();
            if pa == BigInt::from(0) {
                continue;
            }
            let qa = q.eval(&a).unwrap();
            ensure(qa.is_multiple_of(&pa), || format!("p_{n}({a}) ∤ q_{}({a})", 2 * n))?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("{checked} evaluations, zero failures, {elapsed:?}"))
}

fn ac04_fermat() -> Outcome {
    let f = IntPoly::from_ints(&[0, -1, 0, 0, 0, 1]);
    let g = IntPoly::from_ints(&[5]);
    let rep = eval_divisibility(&f, &g, &int_window(-100, 100)).map_err(|e| e.to_string())?;
    ensure(rep.verdict == EvalVerdict::AllDivide, || format!("{} failures", rep.failures.len()))?;
    ensure(f.exact_divide(&g).unwrap().is_none(), || "5 | x^5 - x in Z[x]".into())?;
    let (den, q) = f.field_divide(&g).unwrap().ok_or("field_divide failed")?;
    ensure(den == BigInt::from(5), || format!("denominator {den}"))?;
    ensure(f.scale(&den) == &g * &q, || "den·f != g·q".into())?;
    Ok(format!("201/201 samples divide; Z[x] division fails; Q[x] quotient ({q})/{den}"))
}

fn ac05_gauss() -> Outcome {
    let mut rng = rng(501);
    for _ in 0..1000 {
        let (p, q) = (primitive_int_poly(&mut rng, 0), primitive_int_poly(&mut rng, 0));
        ensure((&p * &q).is_primitive().unwrap(), || format!("Z: ({p})·({q})"))?;
    }
    for d in PROPERTY_DS {
        let r = ring(d);
        for _ in 0..1000 {
            let (p, q) = (primitive_quad_poly(&mut rng, r, 0), primitive_quad_poly(&mut rng, r, 0));
            ensure((&p * &q).is_primitive().unwrap(), || format!("d={d}: ({p})·({q})"))?;
        }
    }
    Ok("4000 products primitive (Z, d = -1, -3, 5)".into())
}

fn pseudo_ok<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> bool {
    f.pseudo_divide(g).map(|pd| pd.verify(f, g)).unwrap_or(false)
}

fn ac06_pseudo_division() -> Outcome {
    let mut rng = rng(601);
    for _ in 0..1000 {
        let f = maybe_zero(&mut rng, |r| int_poly(r, 0), IntRing);
        let g = int_poly(&mut rng, 0);
        ensure(pseudo_ok(&f, &g), || format!("Z: f={f} g={g}"))?;
    }
    for d in PROPERTY_DS {
        let r = ring(d);
        for _ in 0..1000 {
            let f = maybe_zero(&mut rng, |x| quad_poly(x, r, 0), r);
            let g = quad_poly(&mut rng, r, 0);
            ensure(pseudo_ok(&f, &g), || format!("d={d}: f={f} g={g}"))?;
        }
    }
    Ok("4000 identities re-expand exactly".into())
}

fn ac07_norms() -> Outcome {
    let mut rng = rng(701);
    for d in PROPERTY_DS {
        let r = ring(d);
        for _ in 0..1000 {
            let p = quad_poly(&mut rng, r, 0);
            let q = quad_poly(&mut rng, r, 0);
            let np = norm_poly(&p).map_err(|e| format!("d={d}: {e}"))?;
            let nq = norm_poly(&q).map_err(|e| format!("d={d}: {e}"))?;
            ensure(np.degree() == p.degree().map(|k| 2 * k), || format!("d={d}: degree of N({p})"))?;
            let a = BigInt::from(rand::Rng::gen_range(&mut rng, -100i64..=100));
            let direct = p.eval(&r.from_int(a.clone())).unwrap().norm();
            ensure(np.eval(&a).unwrap() == direct, || format!("d={d}: N({p})({a})"))?;
            let npq = norm_poly(&(&p * &q)).map_err(|e| e.to_string())?;
            ensure(npq == &np * &nq, || format!("d={d}: N(pq) != N(p)N(q)"))?;
        }
    }
    Ok("3000 polynomials: degree, integrality, evaluation, multiplicativity".into())
}

/// Independent of the sieve and of the modular Horner scan in `sf_search`.
fn brute_force_sf(f: &IntPoly, limit: u64) -> Vec<(u64, u64)> {
    let is_prime = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
    (2..=limit)
        .filter(|&p| is_prime(p))
        .filter_map(|p| {
            let m = BigInt::from(p);
            (0..p).find(|&k| f.eval(&BigInt::from(k)).unwrap().mod_floor(&m) == BigInt::from(0)).map(|k| (p, k))
        })
        .collect()
}

fn ac08_sf() -> Outcome {
    let f = IntPoly::from_ints(&[1, 0, 1]);
    let start = Instant::now();
    let recs = sf_search(&f, 1000).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let found: Vec<(u64, u64)> = recs.iter().map(|r| (r.p(), r.root())).collect();
    ensure(found == brute_force_sf(&f, 1000), || "disagrees with brute force".into())?;
    let primes: Vec<u64> = found.iter().map(|&(p, _)| p).collect();
    let expected: Vec<u64> = brute_force_sf(&IntPoly::from_ints(&[0, 1]), 1000)
        .into_iter()
        .map(|(p, _)| p)
        .filter(|&p| p == 2 || p % 4 == 1)
        .collect();
    ensure(primes == expected, || "not exactly {2} ∪ {p ≡ 1 mod 4}".into())?;
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("{} primes, all 2 or 1 mod 4, {elapsed:?}", primes.len()))
}

fn ac09_zw() -> Outcome {
    let rep = zw_unit_demo(10_000, 2024).map_err(|e| e.to_string())?;
    ensure(rep.all_passed() && rep.passed == 10_000, || {
        format!("{} failures, first {:?}", rep.failures.len(), rep.failures.first())
    })?;
    Ok("10000/10000 values of k^2 + 1 are units".into())
}

fn ac10_round_trip() -> Outcome {
    let mut rng = rng(1001);
    for _ in 0..1000 {
        let g = primitive_int_poly(&mut rng, 1);
        let q = int_poly(&mut rng, 0);
        let f = &g * &q;
        let cert = certify_divisibility(&f, &g, 1000).map_err(|e| e.to_string())?;
        ensure(cert.verdict == CertVerdict::Divides, || format!("g={g} q={q}"))?;
        ensure(cert.quotient.as_ref() == Some(&q), || format!("wrong quotient for g={g}"))?;
    }
    Ok("1000/1000 quotients recovered exactly".into())
}

fn ac11_witnesses() -> Outcome {
    let mut rng = rng(1101);
    let (mut instances, mut found) = (0, 0);
    let mut missing = Vec::new();
    while instances < 500 {
        let g = primitive_int_poly(&mut rng, 1);
        let f = int_poly(&mut rng, 0);
        if f.exact_divide(&g).unwrap().is_some() {
            continue;
        }
        instances += 1;
        let cert = certify_divisibility(&f, &g, 1000).map_err(|e| e.to_string())?;
        ensure(cert.verdict == CertVerdict::NotDivides, || format!("f={f} g={g}"))?;
        match cert.witness {
            Some(w) => {
                ensure(w.g_value != BigInt::from(0) && !w.f_value.is_multiple_of(&w.g_value), || {
                    format!("bad witness {} for f={f} g={g}", w.k)
                })?;
                found += 1;
            }
            None => missing.push(format!("f={f} g={g}")),
        }
    }
    for m in &missing {
        println!("       no witness within |k| <= 1000: {m}");
    }
    ensure(found * 100 >= instances * 99, || format!("only {found}/{instances} witnesses"))?;
    Ok(format!("{found}/{instances} witnesses within |k| <= 1000, {} reported without", missing.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 11] = [
        ("AC01 p_n, q_n listing for n <= 8", ac01_pairs),
        ("AC02 p_n | q_2n certified for n = 1..64", ac02_certify_pn_q2n),
        ("AC03 evaluation congruence", ac03_congruence),
        ("AC04 Fermat non-example", ac04_fermat),
        ("AC05 Gauss lemma", ac05_gauss),
        ("AC06 pseudo-division identity", ac06_pseudo_division),
        ("AC07 norm polynomials", ac07_norms),
        ("AC08 S(x^2 + 1) up to 1000", ac08_sf),
        ("AC09 Z[W] unit demo", ac09_zw),
        ("AC10 round-trip divisibility", ac10_round_trip),
        ("AC11 probabilistic witnesses", ac11_witnesses),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
