use std::fmt::Write;

use dringkit::galois::{norm_poly, norm_transfer_check, TransferVerdict};
use dringkit::lab::{
    certify_divisibility, cheb_certify, cheb_generate, eval_divisibility, sf_search, zw_unit_demo,
    CertVerdict, EvalVerdict,
};
use dringkit::poly::TextRing;
use dringkit::report::ToJson;
use dringkit::{parse_poly, Error, IntRing, Poly, Result, Ring, RingSpec};
use num_bigint::BigInt;
use serde_json::{json, Value};

const INT_BOUND: u64 = 1000;
const QUAD_BOUND: u64 = 20;

const WINDOW_NOTE: &str = "pointwise divisibility is checked on a finite window only";

pub struct Output {
    pub json: Value,
    pub text: String,
    pub code: u8,
}

macro_rules! with_ring {
    ($spec:expr, |$r:ident| $body:expr) => {
        match RingSpec::parse($spec)? {
            RingSpec::Int => {
                let $r = IntRing;
                $body
            }
            RingSpec::Quad(q) => {
                let $r = q;
                $body
            }
        }
    };
}

fn quad_ring(spec: &str) -> Result<dringkit::QuadRing> {
    match RingSpec::parse(spec)? {
        RingSpec::Quad(q) => Ok(q),
        RingSpec::Int => Err(Error::PreconditionViolated("this command needs --ring \"Q(sqrt d)\"")),
    }
}

fn window(from: i64, to: i64) -> Result<Vec<BigInt>> {
    if from > to {
        return Err(Error::PreconditionViolated("--from must not exceed --to"));
    }
    Ok((from..=to).map(BigInt::from).collect())
}

fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn divides(ring: &str, f: &str, g: &str, bound: Option<u64>, primitive: bool) -> Result<Output> {
    with_ring!(ring, |r| divides_in(r, f, g, bound, primitive))
}

fn divides_in<R: TextRing>(r: R, f: &str, g: &str, bound: Option<u64>, primitive: bool) -> Result<Output> {
    let f = parse_poly(f, &r)?;
    let mut g = parse_poly(g, &r)?;
    let bound = bound.unwrap_or(if r.name() == "Z" { INT_BOUND } else { QUAD_BOUND });
    let mut text = format!("ring: {}\nf: {f}\ng: {g}\nwitness bound: {bound}\n", r.name());
    let mut removed = Value::Null;
    if primitive && !g.is_zero() {
        let (c, h) = g.primitive_part()?;
        writeln!(text, "note: divisor replaced by its primitive part {h} (content {c})").unwrap();
        removed = s(&c);
        g = h;
    }
    let cert = certify_divisibility(&f, &g, bound)?;
    writeln!(text, "verdict: {}", cert.verdict.as_str()).unwrap();
    if let Some(q) = &cert.quotient {
        writeln!(text, "quotient: {q}").unwrap();
    }
    if let Some(w) = &cert.witness {
        writeln!(text, "witness: k = {}, g(k) = {}, f(k) = {}", w.k, w.g_value, w.f_value).unwrap();
    } else if cert.verdict == CertVerdict::NotDivides {
        writeln!(text, "witness: none found in the search box (bound {bound})").unwrap();
    }
    let json = json!({
        "command": "divides",
        "ring": r.name(),
        "f": f.to_json(),
        "g": g.to_json(),
        "bound": s(bound),
        "removed_content": removed,
        "certificate": cert.to_json(),
    });
    let code = if cert.verdict == CertVerdict::Divides { 0 } else { 1 };
    Ok(Output { json, text, code })
}

pub fn pseudodiv(ring: &str, f: &str, g: &str) -> Result<Output> {
    with_ring!(ring, |r| {
        let f = parse_poly(f, &r)?;
        let g = parse_poly(g, &r)?;
        let pd = f.pseudo_divide(&g)?;
        let text = format!(
            "multiplier: {} (s = {})\nquotient: {}\nremainder: {}\n",
            pd.multiplier, pd.s, pd.quotient, pd.remainder
        );
        let json = json!({
            "command": "pseudodiv",
            "ring": r.name(),
            "f": f.to_json(),
            "g": g.to_json(),
            "result": pd.to_json(),
        });
        Ok(Output { json, text, code: 0 })
    })
}

pub fn content(ring: &str, p: &str) -> Result<Output> {
    with_ring!(ring, |r| {
        let p = parse_poly(p, &r)?;
        let (c, h) = p.primitive_part()?;
        let primitive = r.is_unit(&c);
        let text = format!("content: {c}\nprimitive part: {h}\nprimitive: {primitive}\n");
        let json = json!({
            "command": "content",
            "ring": r.name(),
            "p": p.to_json(),
            "content": s(&c),
            "primitive_part": h.to_json(),
            "primitive": primitive,
        });
        Ok(Output { json, text, code: 0 })
    })
}

pub fn normpoly(ring: &str, p: &str) -> Result<Output> {
    let r = quad_ring(ring)?;
    let p = parse_poly(p, &r)?;
    let n = norm_poly(&p)?;
    let text = format!("norm: {n}\n");
    let json = json!({ "command": "normpoly", "ring": r.name(), "p": p.to_json(), "norm": n.to_json() });
    Ok(Output { json, text, code: 0 })
}

pub fn evalcheck(ring: &str, f: &str, g: &str, from: i64, to: i64) -> Result<Output> {
    with_ring!(ring, |r| evalcheck_in(r, f, g, from, to))
}

fn evalcheck_in<R: TextRing>(r: R, f: &str, g: &str, from: i64, to: i64) -> Result<Output> {
    let f = parse_poly(f, &r)?;
    let g = parse_poly(g, &r)?;
    let samples: Vec<R::Elem> = window(from, to)?.into_iter().map(|k| r.from_int(k)).collect();
    let rep = eval_divisibility(&f, &g, &samples)?;
    let mut text = format!(
        "verdict: {}\nsamples: {from}..={to} ({WINDOW_NOTE})\nchecked: {}, divides: {}, vacuous (g(k) = 0): {}, failures: {}\n",
        rep.verdict.as_str(),
        rep.checked,
        rep.divides,
        rep.vacuous,
        rep.failures.len()
    );
    for w in &rep.failures {
        writeln!(text, "  k = {}: g(k) = {} does not divide f(k) = {}", w.k, w.g_value, w.f_value).unwrap();
    }
    let json = json!({
        "command": "evalcheck",
        "ring": r.name(),
        "f": f.to_json(),
        "g": g.to_json(),
        "window": { "from": s(from), "to": s(to), "note": WINDOW_NOTE },
        "report": rep.to_json(),
    });
    let code = if rep.verdict == EvalVerdict::AllDivide { 0 } else { 1 };
    Ok(Output { json, text, code })
}

pub fn sf(f: &str, limit: u64) -> Result<Output> {
    let f = parse_poly(f, &IntRing)?;
    let recs = sf_search(&f, limit)?;
    let mut text = format!("{} primes p <= {limit} with a root of f mod p\n", recs.len());
    for r in &recs {
        writeln!(text, "p = {}, root = {}", r.p(), r.root()).unwrap();
    }
    let json = json!({
        "command": "sf",
        "f": f.to_json(),
        "limit": s(limit),
        "records": recs.iter().map(ToJson::to_json).collect::<Vec<_>>(),
    });
    let code = if recs.is_empty() { 1 } else { 0 };
    Ok(Output { json, text, code })
}

pub fn cheb(n: usize, certify: bool, from: i64, to: i64) -> Result<Output> {
    if certify {
        if from > to {
            return Err(Error::PreconditionViolated("--from must not exceed --to"));
        }
        let rep = cheb_certify(n, from..=to)?;
        let mut text = format!(
            "p_{n} = {}\nq_{} = {}\nevaluation {from}..={to}: {} checked, {} zeros of p_{n} skipped, {} failures\n",
            rep.p_n,
            2 * n,
            rep.q_2n,
            rep.evaluated,
            rep.skipped_zeros,
            rep.eval_failures.len()
        );
        for w in &rep.eval_failures {
            writeln!(text, "  a = {}: {} does not divide {}", w.k, w.g_value, w.f_value).unwrap();
        }
        writeln!(text, "certificate: {}", rep.certificate.verdict.as_str()).unwrap();
        if let Some(q) = &rep.certificate.quotient {
            writeln!(text, "quotient: {q}").unwrap();
        }
        writeln!(text, "passed: {}", rep.passed()).unwrap();
        let json = json!({ "command": "cheb", "report": rep.to_json() });
        let code = if rep.passed() { 0 } else { 1 };
        return Ok(Output { json, text, code });
    }
    let pairs = cheb_generate(n);
    let mut text = String::new();
    for p in &pairs {
        writeln!(text, "n = {}: p = {}, q = {}", p.n, p.p, p.q).unwrap();
    }
    let json = json!({ "command": "cheb", "pairs": pairs.iter().map(ToJson::to_json).collect::<Vec<_>>() });
    Ok(Output { json, text, code: 0 })
}

pub fn zwdemo(trials: u64, seed: u64) -> Result<Output> {
    if trials == 0 {
        return Err(Error::PreconditionViolated("--trials must be at least 1"));
    }
    let rep = zw_unit_demo(trials, seed)?;
    let mut text = format!(
        "trials: {}, seed: {}, units: {}, non-units: {}\n",
        rep.trials,
        rep.seed,
        rep.passed,
        rep.failures.len()
    );
    for f in &rep.failures {
        writeln!(text, "  REFUTED: k = {}, k^2 + 1 = {} is not a unit", f.k, f.value).unwrap();
    }
    let json = json!({ "command": "zwdemo", "report": rep.to_json() });
    let code = if rep.all_passed() { 0 } else { 1 };
    Ok(Output { json, text, code })
}

pub fn transfer(ring: &str, f: &str, g: &str, from: i64, to: i64) -> Result<Output> {
    let r = quad_ring(ring)?;
    let f: Poly<_> = parse_poly(f, &r)?;
    let g = parse_poly(g, &r)?;
    let rep = norm_transfer_check(&f, &g, &window(from, to)?)?;
    let mut text = format!(
        "F = N(f) = {}\nG = N(g) = {}\nsamples: {from}..={to} ({WINDOW_NOTE})\n",
        rep.big_f, rep.big_g
    );
    for x in &rep.samples {
        writeln!(
            text,
            "  b = {}: {} (g(b) = {}, f(b) = {}, G(b) = {}, F(b) = {})",
            x.b,
            x.status.as_str(),
            x.g_value,
            x.f_value,
            x.big_g_value,
            x.big_f_value
        )
        .unwrap();
    }
    writeln!(text, "verdict: {}", rep.verdict.as_str()).unwrap();
    let json = json!({
        "command": "transfer",
        "ring": r.name(),
        "f": f.to_json(),
        "g": g.to_json(),
        "window": { "from": s(from), "to": s(to), "note": WINDOW_NOTE },
        "report": rep.to_json(),
    });
    let code = if rep.verdict == TransferVerdict::Inconsistent { 1 } else { 0 };
    Ok(Output { json, text, code })
}
