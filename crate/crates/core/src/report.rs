//! JSON forms of the library's results.
//!
//! Every integer, including counts and degrees, is emitted as a decimal
//! string so that arbitrary-precision values never pass through a float.
//! Objects use `serde_json`'s default sorted maps, so key order is stable.

use std::fmt::Display;

use serde_json::{json, Value};

use crate::galois::{TransferReport, TransferStatus, TransferVerdict};
use crate::lab::{
    CertVerdict, ChebPair, ChebReport, DichotomyVerdict, DivisibilityCertificate, EvalDivReport,
    EvalVerdict, PrimeSolvabilityRecord, Witness, ZwReport,
};
use crate::poly::text::TextRing;
use crate::poly::{Poly, PseudoDivResult};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

fn s(x: impl Display) -> Value {
    Value::String(x.to_string())
}

impl<R: TextRing> ToJson for Poly<R> {
    fn to_json(&self) -> Value {
        json!({
            "text": self.to_string(),
            "coeffs": self.coeffs().iter().map(s).collect::<Vec<_>>(),
            "degree": self.degree().map_or(Value::Null, s),
        })
    }
}

impl<E: Display> ToJson for Witness<E> {
    fn to_json(&self) -> Value {
        json!({ "k": s(&self.k), "g_value": s(&self.g_value), "f_value": s(&self.f_value) })
    }
}

impl<R: TextRing> ToJson for PseudoDivResult<R> {
    fn to_json(&self) -> Value {
        json!({
            "multiplier": s(&self.multiplier),
            "s": s(self.s),
            "quotient": self.quotient.to_json(),
            "remainder": self.remainder.to_json(),
        })
    }
}

impl EvalVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            EvalVerdict::AllDivide => "ALL_DIVIDE",
            EvalVerdict::Failed => "FAILED",
        }
    }
}

impl<E: Display> ToJson for EvalDivReport<E> {
    fn to_json(&self) -> Value {
        json!({
            "checked": s(self.checked),
            "vacuous": s(self.vacuous),
            "divides": s(self.divides),
            "failures": self.failures.iter().map(ToJson::to_json).collect::<Vec<_>>(),
            "verdict": self.verdict.as_str(),
        })
    }
}

impl CertVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertVerdict::Divides => "DIVIDES",
            CertVerdict::NotDivides => "NOT_DIVIDES",
        }
    }
}

impl<R: TextRing> ToJson for DivisibilityCertificate<R> {
    fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict.as_str(),
            "quotient": self.quotient.as_ref().map_or(Value::Null, ToJson::to_json),
            "witness": self.witness.as_ref().map_or(Value::Null, ToJson::to_json),
        })
    }
}

impl DichotomyVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            DichotomyVerdict::Consistent => "CONSISTENT",
            DichotomyVerdict::RefutesSamples => "REFUTES_SAMPLES",
            DichotomyVerdict::Violation => "VIOLATION",
        }
    }
}

impl ToJson for PrimeSolvabilityRecord {
    fn to_json(&self) -> Value {
        json!({ "p": s(self.p()), "root": s(self.root()) })
    }
}

impl ToJson for ZwReport {
    fn to_json(&self) -> Value {
        json!({
            "trials": s(self.trials),
            "seed": s(self.seed),
            "passed": s(self.passed),
            "failed": s(self.failures.len()),
            "failures": self
                .failures
                .iter()
                .map(|f| json!({ "k": s(&f.k), "value": s(&f.value) }))
                .collect::<Vec<_>>(),
            "verdict": if self.all_passed() { "ALL_UNITS" } else { "REFUTED" },
        })
    }
}

impl ToJson for ChebPair {
    fn to_json(&self) -> Value {
        json!({ "n": s(self.n), "p": self.p.to_json(), "q": self.q.to_json() })
    }
}

impl ToJson for ChebReport {
    fn to_json(&self) -> Value {
        json!({
            "n": s(self.n),
            "p_n": self.p_n.to_json(),
            "q_2n": self.q_2n.to_json(),
            "evaluation": {
                "from": s(self.range.0),
                "to": s(self.range.1),
                "evaluated": s(self.evaluated),
                "skipped_zeros": s(self.skipped_zeros),
                "failures": self.eval_failures.iter().map(ToJson::to_json).collect::<Vec<_>>(),
            },
            "certificate": self.certificate.to_json(),
            "passed": self.passed(),
        })
    }
}

impl TransferStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            TransferStatus::GZero => "G_ZERO",
            TransferStatus::Vacuous => "VACUOUS",
            TransferStatus::Holds => "HOLDS",
            TransferStatus::Broken => "BROKEN",
        }
    }
}

impl TransferVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            TransferVerdict::Consistent => "CONSISTENT",
            TransferVerdict::Vacuous => "VACUOUS",
            TransferVerdict::Inconsistent => "INCONSISTENT",
        }
    }
}

impl ToJson for TransferReport {
    fn to_json(&self) -> Value {
        let samples = self
            .samples
            .iter()
            .map(|x| {
                json!({
                    "b": s(&x.b),
                    "g_value": s(&x.g_value),
                    "f_value": s(&x.f_value),
                    "G_value": s(&x.big_g_value),
                    "F_value": s(&x.big_f_value),
                    "status": x.status.as_str(),
                })
            })
            .collect::<Vec<_>>();
        json!({
            "F": self.big_f.to_json(),
            "G": self.big_g.to_json(),
            "samples": samples,
            "verdict": self.verdict.as_str(),
        })
    }
}
