//! Degenerations of a symbolic spectrum as the torus parameters go to 0 or ∞.

use crate::error::{Error, Result};
use crate::scalar::{CycNum, FactoredValue, Field};

use super::SpectrumFactorization;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaLimit {
    /// All `Λ_i = t`, `t → 0`.
    Zero,
    /// All `Λ_i = t`, `t → ∞`.
    Infinity,
}

fn limit_value(v: &FactoredValue, which: LambdaLimit) -> Result<CycNum> {
    let f = v.field();
    let mut degree: i64 = v.monomial().iter().map(|&k| k as i64).sum();
    let mut acc = v.constant_part().clone();
    for (key, &p) in v.factors() {
        if key.root.iter().any(|&x| x < 0) {
            return Err(Error::UnsupportedSymbolic(format!("factor with exponent vector {:?} has no limit", key.root)));
        }
        let e = key.exponent as i64;
        let lead = match which {
            LambdaLimit::Zero => f.zeta_pow(-e).neg(),
            LambdaLimit::Infinity => {
                degree += p as i64 * key.root.iter().map(|&k| k as i64).sum::<i64>();
                f.zeta_pow(e)
            }
        };
        acc = acc.mul(&lead.pow(p as i64)?);
    }
    if degree != 0 {
        return Err(Error::UnsupportedSymbolic(format!("{v} tends to 0 or ∞ in this limit")));
    }
    Ok(acc)
}

/// The limiting spectrum, each eigenvalue replaced by its leading term.
pub fn lambda_limit(
    spec: &SpectrumFactorization<FactoredValue>,
    which: LambdaLimit,
) -> Result<SpectrumFactorization<CycNum>> {
    spec.try_map(|v| limit_value(v, which))
}

/// If every eigenvalue has the same multiplicity `e`, returns the
/// coefficients (constant term first) of `p(z) = ∏ (z − λ)` and `e`, so that
/// `χ = p^e`.
pub fn power_of_polynomial(spec: &SpectrumFactorization<CycNum>) -> Option<(Vec<CycNum>, u64)> {
    let (first, e) = spec.factors.first()?;
    if spec.factors.iter().any(|(_, n)| n != e) {
        return None;
    }
    let field = first.field();
    let mut poly = vec![field.one()];
    for (lam, _) in &spec.factors {
        let mut next = vec![field.zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(lam));
        }
        poly = next;
    }
    Some((poly, *e))
}

/// Renders `Σ c_k z^k` highest degree first, e.g. `z^3 - 1`.
pub fn render_polynomial(coeffs: &[CycNum]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{k}"),
        };
        let (neg, mag) = match c.as_rational() {
            Some(q) => (q < &num_traits::Zero::zero(), {
                let a = num_traits::Signed::abs(q);
                if num_traits::One::is_one(&a) && k > 0 {
                    String::new()
                } else {
                    a.to_string()
                }
            }),
            None => (false, format!("({c})")),
        };
        let body = match (mag.is_empty(), mono.is_empty()) {
            (true, _) => mono,
            (false, true) => mag,
            (false, false) => format!("{mag}*{mono}"),
        };
        if parts.is_empty() {
            parts.push(if neg { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {body}", if neg { "-" } else { "+" }));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}
