//! Browser bindings for a few dringkit operations.
//!
//! Every function returns a JSON document as a string. Failures come back as
//! `{"error": "..."}` so the page never has to catch a thrown value.

use dringkit::lab::{cheb_certify, cheb_generate, certify_divisibility, sf_search};
use dringkit::poly::TextRing;
use dringkit::report::ToJson;
use dringkit::{parse_poly, IntRing, RingSpec};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

// keep browser calls snappy
const MAX_SF_LIMIT: u64 = 10_000_000;
const MAX_CHEB_N: usize = 200;
const MAX_CHEB_SPAN: i64 = 2_000;

fn respond(r: dringkit::Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn too_big(what: &str, cap: impl std::fmt::Display) -> dringkit::Result<Value> {
    Ok(json!({ "error": format!("{what} is capped at {cap} in the browser demo") }))
}

/// Certify `g | f` in the named ring ("Z" or "Q(sqrt d)"). A `bound` of 0
/// picks the default witness search bound.
#[wasm_bindgen]
pub fn divides(f: &str, g: &str, ring: &str, bound: u32) -> String {
    respond(match RingSpec::parse(ring) {
        Ok(RingSpec::Int) => divides_in(IntRing, f, g, bound, 1000),
        Ok(RingSpec::Quad(q)) => divides_in(q, f, g, bound, 20),
        Err(e) => Err(e),
    })
}

fn divides_in<R: TextRing>(r: R, f: &str, g: &str, bound: u32, default: u64) -> dringkit::Result<Value> {
    let f = parse_poly(f, &r)?;
    let g = parse_poly(g, &r)?;
    let bound = if bound == 0 { default } else { u64::from(bound) };
    let cert = certify_divisibility(&f, &g, bound)?;
    Ok(json!({
        "ring": r.name(),
        "f": f.to_json(),
        "g": g.to_json(),
        "bound": bound.to_string(),
        "certificate": cert.to_json(),
    }))
}

/// Primes up to `limit` at which `f` has a root, with the least root.
#[wasm_bindgen]
pub fn sf(f: &str, limit: u32) -> String {
    respond((|| {
        if u64::from(limit) > MAX_SF_LIMIT {
            return too_big("limit", MAX_SF_LIMIT);
        }
        let f = parse_poly(f, &IntRing)?;
        let recs = sf_search(&f, u64::from(limit))?;
        Ok(json!({
            "f": f.to_json(),
            "limit": limit.to_string(),
            "count": recs.len().to_string(),
            "records": recs.iter().map(ToJson::to_json).collect::<Vec<_>>(),
        }))
    })())
}

/// The pairs up to `n`, and with `certify` the check that p_n divides q_2n
/// on `from..=to`.
#[wasm_bindgen]
pub fn cheb(n: u32, from: i32, to: i32, certify: bool) -> String {
    respond((|| {
        let n = n as usize;
        if n > MAX_CHEB_N {
            return too_big("n", MAX_CHEB_N);
        }
        if i64::from(to) - i64::from(from) > MAX_CHEB_SPAN {
            return too_big("window width", MAX_CHEB_SPAN);
        }
        let pairs: Vec<_> = cheb_generate(n).iter().map(ToJson::to_json).collect();
        let report = if certify {
            cheb_certify(n, i64::from(from)..=i64::from(to))?.to_json()
        } else {
            Value::Null
        };
        Ok(json!({ "n": n.to_string(), "pairs": pairs, "report": report }))
    })())
}
