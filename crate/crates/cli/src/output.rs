use std::collections::BTreeMap;

use antipode_core::pivotalization::SignedEigenvalue;
use antipode_core::report::Report;
use antipode_core::scalar::{CycNum, FactoredValue, NumericScalar};
use antipode_core::spectrum::{Eigenvalue, SpectrumFactorization};
use serde_json::{json, Map, Value};

/// How an eigenvalue is printed and serialized.
pub trait Render {
    fn text(&self) -> String;
    fn json(&self) -> Value;
}

fn approx(re: f64, im: f64) -> Value {
    json!([re, im])
}

impl Render for CycNum {
    /// Roots of unity print as `z^k`.
    fn text(&self) -> String {
        match self.root_of_unity_exponent() {
            Some(0) => "1".into(),
            Some(1) => "z".into(),
            Some(k) => format!("z^{k}"),
            None => self.to_literal(),
        }
    }
    fn json(&self) -> Value {
        let c = self.to_complex();
        json!({
            "value": self.text(),
            "coefficients": self.coeffs().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
            "approx": approx(c.re, c.im),
        })
    }
}

impl Render for FactoredValue {
    fn text(&self) -> String {
        self.to_literal()
    }
    fn json(&self) -> Value {
        let factors: Vec<Value> = self
            .factors()
            .iter()
            .map(|(k, p)| json!({"root": k.root, "exponent": k.exponent, "power": p}))
            .collect();
        json!({
            "value": self.to_literal(),
            "constant": self.constant_part().to_literal(),
            "monomial": self.monomial(),
            "factors": factors,
        })
    }
}

impl Render for NumericScalar {
    fn text(&self) -> String {
        self.to_string()
    }
    fn json(&self) -> Value {
        json!({"value": self.to_string(), "approx": approx(self.value.re, self.value.im)})
    }
}

impl<S: Render> Render for SignedEigenvalue<S> {
    fn text(&self) -> String {
        format!("{}sqrt({})", if self.sign < 0 { "-" } else { "+" }, self.squared.text())
    }
    fn json(&self) -> Value {
        json!({"sign": self.sign, "squared": self.squared.json()})
    }
}

/// Text: one `(z - (λ))^n` line per distinct eigenvalue and a degree line.
/// JSON: `{kind, total_degree, distinct, multiplicities, eigenvalues, ...extra}`.
pub fn render_spectrum<E: Eigenvalue + Render>(
    kind: &str,
    spec: &SpectrumFactorization<E>,
    json_out: bool,
    summary: bool,
    extra: Vec<(String, Value)>,
) -> String {
    let mut histogram: BTreeMap<u64, usize> = BTreeMap::new();
    for (_, n) in &spec.factors {
        *histogram.entry(*n).or_default() += 1;
    }
    if json_out {
        let mut obj = Map::new();
        obj.insert("kind".into(), json!(kind));
        obj.insert("total_degree".into(), json!(spec.total_degree));
        obj.insert("distinct".into(), json!(spec.factors.len()));
        obj.insert(
            "multiplicities".into(),
            Value::Object(histogram.iter().map(|(m, c)| (m.to_string(), json!(c))).collect()),
        );
        if !summary {
            let eigen: Vec<Value> = spec
                .factors
                .iter()
                .map(|(v, n)| {
                    let mut e = v.json();
                    e.as_object_mut().expect("eigenvalues serialize to objects").insert("multiplicity".into(), json!(n));
                    e
                })
                .collect();
            obj.insert("eigenvalues".into(), Value::Array(eigen));
        }
        for (k, v) in extra {
            obj.insert(k, v);
        }
        return serde_json::to_string_pretty(&Value::Object(obj)).expect("json") + "\n";
    }
    let mut out = String::new();
    if summary {
        out.push_str(&format!("distinct eigenvalues {}\n", spec.factors.len()));
        for (m, c) in &histogram {
            out.push_str(&format!("multiplicity {m}: {c} eigenvalues\n"));
        }
    } else {
        for (v, n) in &spec.factors {
            out.push_str(&format!("(z - ({}))^{n}\n", v.text()));
        }
    }
    for (k, v) in extra {
        let s = match v {
            Value::String(s) => s,
            other => other.to_string(),
        };
        out.push_str(&format!("{k} {s}\n"));
    }
    out.push_str(&format!("total degree {}\n", spec.total_degree));
    out
}

pub fn render_reports(reports: &[Report], extra: Vec<(String, Value)>, json_out: bool) -> String {
    if json_out {
        let mut obj = Map::new();
        obj.insert("passed".into(), json!(reports.iter().all(Report::passed)));
        obj.insert("reports".into(), serde_json::to_value(reports).expect("reports serialize"));
        for (k, v) in extra {
            obj.insert(k, v);
        }
        return serde_json::to_string_pretty(&Value::Object(obj)).expect("json") + "\n";
    }
    let mut out: String = reports.iter().map(|r| r.to_string()).collect();
    for (k, v) in extra {
        let s = match v {
            Value::String(s) => s,
            other => other.to_string(),
        };
        out.push_str(&format!("{k} {s}\n"));
    }
    out
}
