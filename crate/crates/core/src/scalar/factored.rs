//! Canonical factored form for eigenvalues of the dynamical families.
//!
//! A value is `c · Λ^β · ∏ (Λ^α ζ^e − ζ^{-e})^{p}` with `c` a nonzero
//! cyclotomic constant, `β` an integer exponent vector, and atomic factors
//! keyed by `(α, e mod n)`. Each `α` is a primitive integer vector whose first
//! nonzero coordinate is positive. For odd `n` the map `e ↦ ζ^{-2e}` is
//! injective, so distinct keys are distinct irreducible (non-associate)
//! Laurent polynomials and the representation is unique. Equality of values
//! is therefore structural equality.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;

use super::laurent::monomial_string;
use super::{CycField, CycNum, Field, LaurentPoly, RatFunc};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorKey {
    /// Exponent vector of Λ in the factor, e.g. simple-root coordinates of a
    /// positive root.
    pub root: Vec<i32>,
    /// Exponent class of ζ, reduced mod the field order.
    pub exponent: u64,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactoredValue {
    constant: CycNum,
    monomial: Vec<i32>,
    factors: BTreeMap<FactorKey, i32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Mul,
    Div,
}

/// Product or quotient with key-wise power addition; zero powers vanish.
pub fn factored_combine(a: &FactoredValue, b: &FactoredValue, op: CombineOp) -> FactoredValue {
    let sign = match op {
        CombineOp::Mul => 1,
        CombineOp::Div => -1,
    };
    let constant = match op {
        CombineOp::Mul => a.constant.mul(&b.constant),
        CombineOp::Div => a.constant.try_div(&b.constant).expect("constants are nonzero"),
    };
    let n = a.monomial.len().max(b.monomial.len());
    let monomial = (0..n)
        .map(|i| a.monomial.get(i).copied().unwrap_or(0) + sign * b.monomial.get(i).copied().unwrap_or(0))
        .collect();
    let mut factors = a.factors.clone();
    for (k, p) in &b.factors {
        let e = factors.entry(k.clone()).or_insert(0);
        *e += sign * p;
        if *e == 0 {
            factors.remove(k);
        }
    }
    FactoredValue { constant, monomial, factors }
}

fn is_primitive_oriented(root: &[i32]) -> bool {
    let Some(first) = root.iter().find(|&&x| x != 0) else {
        return false;
    };
    *first > 0 && root.iter().fold(0i32, |g, &x| g.gcd(&x)) == 1
}

impl FactoredValue {
    pub fn constant(c: CycNum, nvars: usize) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FactoredValue { constant: c, monomial: vec![0; nvars], factors: BTreeMap::new() })
    }

    pub fn one(field: &CycField, nvars: usize) -> Self {
        FactoredValue { constant: field.one(), monomial: vec![0; nvars], factors: BTreeMap::new() }
    }

    /// The atomic factor Λ^root ζ^e − ζ^{-e}.
    pub fn atom(field: &CycField, root: Vec<i32>, e: i64) -> Result<Self> {
        if field.order().is_multiple_of(2) {
            return Err(Error::UnsupportedSymbolic(format!(
                "factored forms need an odd field order, got {}",
                field.order()
            )));
        }
        if !is_primitive_oriented(&root) {
            return Err(Error::UnsupportedSymbolic(format!("factor exponent vector {root:?} is not primitive")));
        }
        let nvars = root.len();
        let key = FactorKey { root, exponent: e.rem_euclid(field.order() as i64) as u64 };
        Ok(FactoredValue { constant: field.one(), monomial: vec![0; nvars], factors: BTreeMap::from([(key, 1)]) })
    }

    pub fn monomial_value(c: CycNum, exponents: Vec<i32>) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FactoredValue { constant: c, monomial: exponents, factors: BTreeMap::new() })
    }

    pub fn field(&self) -> &CycField {
        self.constant.field()
    }

    pub fn nvars(&self) -> usize {
        self.monomial.len()
    }

    pub fn constant_part(&self) -> &CycNum {
        &self.constant
    }

    pub fn monomial(&self) -> &[i32] {
        &self.monomial
    }

    pub fn factors(&self) -> &BTreeMap<FactorKey, i32> {
        &self.factors
    }

    pub fn is_constant(&self) -> bool {
        self.factors.is_empty() && self.monomial.iter().all(|&k| k == 0)
    }

    pub fn as_constant(&self) -> Option<&CycNum> {
        self.is_constant().then_some(&self.constant)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let constant = self.constant.pow(k as i64)?;
        let monomial = self.monomial.iter().map(|&m| m * k).collect();
        let factors = if k == 0 {
            BTreeMap::new()
        } else {
            self.factors.iter().map(|(key, p)| (key.clone(), p * k)).collect()
        };
        Ok(FactoredValue { constant, monomial, factors })
    }

    fn atom_poly(&self, key: &FactorKey) -> LaurentPoly {
        let f = self.field();
        let e = key.exponent as i64;
        LaurentPoly::monomial(f.zeta_pow(e), key.root.clone())
            .sub(&LaurentPoly::constant(f.zeta_pow(-e), key.root.len()))
    }

    /// Expansion as a rational function of Λ.
    pub fn to_ratfunc(&self) -> RatFunc {
        let nvars = self.nvars();
        let mut num = LaurentPoly::monomial(self.constant.clone(), self.monomial.clone());
        let mut den = LaurentPoly::constant(self.field().one(), nvars);
        for (key, &p) in &self.factors {
            let a = self.atom_poly(key);
            if p > 0 {
                num = num.mul(&a.pow(p as u32));
            } else {
                den = den.mul(&a.pow((-p) as u32));
            }
        }
        RatFunc { num, den }
    }

    /// Expansion as a Laurent polynomial, if no factor has a negative power.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.factors.values().all(|&p| p > 0).then(|| self.to_ratfunc().num)
    }

    pub fn evaluate(&self, lambda: &[Complex64]) -> Complex64 {
        let z = |e: i64| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / self.field().order() as f64);
        let mono = |exps: &[i32]| exps.iter().zip(lambda).fold(Complex64::new(1.0, 0.0), |acc, (&k, l)| acc * l.powi(k));
        let mut acc = self.constant.to_complex() * mono(&self.monomial);
        for (key, &p) in &self.factors {
            let e = key.exponent as i64;
            acc *= (mono(&key.root) * z(e) - z(-e)).powi(p);
        }
        acc
    }

    /// Exact value at a point Λ of the torus with cyclotomic coordinates.
    pub fn specialize(&self, lambda: &[CycNum]) -> Result<CycNum> {
        if lambda.len() != self.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "torus point has {} coordinates, value has {} parameters",
                lambda.len(),
                self.nvars()
            )));
        }
        let f = self.field();
        let mono = |exps: &[i32]| -> Result<CycNum> {
            exps.iter().zip(lambda).try_fold(f.one(), |acc, (&k, l)| Ok(acc.mul(&l.pow(k as i64)?)))
        };
        let mut acc = self.constant.mul(&mono(&self.monomial)?);
        for (key, &p) in &self.factors {
            let e = key.exponent as i64;
            let a = mono(&key.root)?.mul(&f.zeta_pow(e)).sub(&f.zeta_pow(-e));
            acc = acc.mul(&a.pow(p as i64)?);
        }
        Ok(acc)
    }

    /// Factor a Laurent polynomial into canonical form. Supported inputs are
    /// single terms and binomials `c1 Λ^β1 + c2 Λ^β2` whose ratio of
    /// constants makes them a unit multiple of an atomic factor.
    pub fn from_laurent(p: &LaurentPoly) -> Result<Self> {
        let field = p.field().clone();
        let nvars = p.nvars();
        let terms: Vec<(&Vec<i32>, &CycNum)> = p.terms().iter().collect();
        match terms.as_slice() {
            [] => Err(Error::DivisionByZero),
            [(e, c)] => FactoredValue::monomial_value((*c).clone(), (*e).clone()),
            [(e1, c1), (e2, c2)] => {
                let delta: Vec<i32> = e1.iter().zip(e2.iter()).map(|(a, b)| a - b).collect();
                let g = delta.iter().fold(0i32, |g, &x| g.gcd(&x));
                if g != 1 {
                    return Err(Error::UnsupportedSymbolic(format!(
                        "binomial {p} has a non-primitive exponent difference"
                    )));
                }
                // Orient so that the leading (first nonzero) coordinate is positive:
                // p = hi * Λ^lo_exp * (Λ^γ + lo / hi).
                let positive = delta.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0);
                let (hi_c, lo_c, lo_e, gamma) = if positive {
                    ((*c1).clone(), (*c2).clone(), (*e2).clone(), delta)
                } else {
                    ((*c2).clone(), (*c1).clone(), (*e1).clone(), delta.iter().map(|x| -x).collect())
                };
                let r = lo_c.negated().try_div(&hi_c)?;
                let k = r.root_of_unity_exponent().ok_or_else(|| {
                    Error::UnsupportedSymbolic(format!(
                        "{p} is not a multiple of a factor Λ^α ζ^a − ζ^(-a): root {r} is not a power of ζ"
                    ))
                })? as i64;
                let n = field.order() as i64;
                if n % 2 == 0 {
                    return Err(Error::UnsupportedSymbolic(format!("factored forms need an odd field order, got {n}")));
                }
                // r = ζ^k = ζ^{-2e}  ⇒  e = -k/2 mod n
                let half = (n + 1) / 2;
                let e = (-k * half).rem_euclid(n);
                // Λ^γ − ζ^{-2e} = ζ^{-e} (Λ^γ ζ^e − ζ^{-e})
                let unit = hi_c.mul(&field.zeta_pow(-e));
                let head = FactoredValue::monomial_value(unit, lo_e)?;
                let atom = FactoredValue::atom(&field, gamma, e)?;
                Ok(factored_combine(&head, &atom, CombineOp::Mul))
            }
            _ => Err(Error::UnsupportedSymbolic(format!(
                "{p} has more than two terms; write symbolic values as products of binomial factors"
            ))),
        }
        .inspect(|v| {
            debug_assert_eq!(v.nvars(), nvars);
        })
    }

    /// Renders in the scalar-literal grammar.
    pub fn to_literal(&self) -> String {
        let n = self.field().order() as i64;
        let mut parts = Vec::new();
        if !self.constant.is_one() || (self.factors.is_empty() && self.monomial.iter().all(|&k| k == 0)) {
            parts.push(format!("({})", self.constant));
        }
        let m = monomial_string(&self.monomial);
        if !m.is_empty() {
            parts.push(m);
        }
        for (key, &p) in &self.factors {
            let mut e = key.exponent as i64;
            if e > n / 2 {
                e -= n;
            }
            let base = monomial_string(&key.root);
            let body = match e {
                0 => format!("{base} - 1"),
                1 => format!("{base}*z - z^-1"),
                -1 => format!("{base}*z^-1 - z"),
                _ => format!("{base}*z^{e} - z^{}", -e),
            };
            if p == 1 {
                parts.push(format!("({body})"));
            } else {
                parts.push(format!("({body})^{p}"));
            }
        }
        if parts.len() == 1 && self.factors.is_empty() && self.monomial.iter().all(|&k| k == 0) {
            return self.constant.to_literal();
        }
        parts.join("*")
    }
}

impl fmt::Display for FactoredValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for FactoredValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
