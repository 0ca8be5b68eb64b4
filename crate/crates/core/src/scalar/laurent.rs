//! Laurent polynomials in torus parameters Λ_1..Λ_r with cyclotomic
//! coefficients, and formal quotients of them.
//!
//! These exist to run additive checks (eigenvector equations, trace
//! identities) on symbolic m-vectors. Quotients are not reduced; equality is
//! decided by cross-multiplication.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use super::{CycField, CycNum, Field};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    field: CycField,
    nvars: usize,
    terms: BTreeMap<Vec<i32>, CycNum>,
}

impl LaurentPoly {
    pub fn zero(field: &CycField, nvars: usize) -> Self {
        LaurentPoly { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: CycNum, nvars: usize) -> Self {
        Self::monomial(c, vec![0; nvars])
    }

    pub fn monomial(c: CycNum, exponents: Vec<i32>) -> Self {
        let mut p = LaurentPoly::zero(c.field(), exponents.len());
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, CycNum> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, exps: Vec<i32>, c: CycNum) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.negated())).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.field, self.nvars.max(other.nvars));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = (0..out.nvars)
                    .map(|i| ea.get(i).copied().unwrap_or(0) + eb.get(i).copied().unwrap_or(0))
                    .collect();
                out.accumulate(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &CycNum) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.field, self.nvars);
        for (e, x) in &self.terms {
            out.accumulate(e.clone(), x.mul(c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::constant(self.field.one(), self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// If the polynomial is a constant, returns it.
    pub fn as_constant(&self) -> Option<CycNum> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn evaluate(&self, lambda: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(lambda).fold(c.to_complex(), |acc, (&k, l)| acc * l.powi(k))
            })
            .sum()
    }
}

fn var_name(i: usize, nvars: usize) -> String {
    if nvars == 1 {
        "L".into()
    } else {
        format!("L{}", i + 1)
    }
}

pub(crate) fn monomial_string(exps: &[i32]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, &k)| {
            let v = var_name(i, exps.len());
            if k == 1 {
                v
            } else {
                format!("{v}^{k}")
            }
        })
        .collect();
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let m = monomial_string(e);
                if m.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatCtx {
    pub field: CycField,
    pub nvars: usize,
}

/// numerator / denominator, denominator nonzero.
#[derive(Clone)]
pub struct RatFunc {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RatFunc {
    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::constant(p.field().one(), p.nvars());
        RatFunc { num: p, den }
    }

    pub fn constant(c: CycNum, nvars: usize) -> Self {
        RatFunc::from_poly(LaurentPoly::constant(c, nvars))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num, den })
    }

    pub fn evaluate(&self, lambda: &[Complex64]) -> Complex64 {
        self.num.evaluate(lambda) / self.den.evaluate(lambda)
    }

    fn ctx(&self) -> RatCtx {
        RatCtx { field: self.num.field().clone(), nvars: self.num.nvars() }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}]", self.num, self.den)
    }
}

impl Field for RatFunc {
    type Ctx = RatCtx;

    fn zero(ctx: &RatCtx) -> Self {
        RatFunc::from_poly(LaurentPoly::zero(&ctx.field, ctx.nvars))
    }
    fn one(ctx: &RatCtx) -> Self {
        RatFunc::constant(ctx.field.one(), ctx.nvars)
    }
    fn from_i64(ctx: &RatCtx, n: i64) -> Self {
        RatFunc::constant(ctx.field.integer(n), ctx.nvars)
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatFunc { num: self.num.add(&rhs.num), den: self.den.clone() };
        }
        RatFunc {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc { num: self.num.mul(&rhs.num), den: self.den.mul(&rhs.den) }
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num: self.den.clone(), den: self.num.clone() })
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn eq_value(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
    fn pivot_score(&self) -> f64 {
        if self.num.is_zero() {
            0.0
        } else {
            1.0 / (self.num.terms().len() + self.den.terms().len()) as f64
        }
    }
}

impl RatFunc {
    pub fn context(&self) -> RatCtx {
        self.ctx()
    }
}
