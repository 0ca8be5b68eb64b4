//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! Elements are stored in the power basis 1, ζ, …, ζ^{φ(n)-1}, i.e. as
//! polynomials reduced modulo the cyclotomic polynomial Φ_n. The
//! representation is canonical, so structural equality is value equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{QPoly, Q};
use super::Field;
use crate::error::{Error, Result};

struct FieldInner {
    order: u64,
    /// Φ_n, monic, low to high.
    phi: QPoly,
    /// Integer coefficients of Φ_n.
    phi_int: Vec<BigInt>,
    degree: usize,
}

/// The cyclotomic field Q(ζ_n). Cheap to clone; instances are interned per
/// order.
#[derive(Clone)]
pub struct CycField(Arc<FieldInner>);

fn field_cache() -> &'static Mutex<HashMap<u64, CycField>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, CycField>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn int_poly(c: &[i64]) -> QPoly {
    QPoly::new(c.iter().map(|&x| Q::from_integer(x.into())).collect())
}

/// Φ_n by exact division of x^n − 1 by Φ_d for every proper divisor d of n.
fn cyclotomic_polynomial(n: u64) -> QPoly {
    let mut xn = vec![0i64; n as usize + 1];
    xn[0] = -1;
    xn[n as usize] = 1;
    let mut p = int_poly(&xn);
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = p.divrem(&CycField::new(d).expect("d >= 1").0.phi);
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

impl CycField {
    pub fn new(order: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadParameters("cyclotomic order must be positive".into()));
        }
        if let Some(f) = field_cache().lock().unwrap().get(&order) {
            return Ok(f.clone());
        }
        let phi = cyclotomic_polynomial(order);
        let phi_int = phi.0.iter().map(|c| c.to_integer()).collect();
        let degree = phi.degree().expect("nonzero");
        let f = CycField(Arc::new(FieldInner { order, phi, phi_int, degree }));
        Ok(field_cache().lock().unwrap().entry(order).or_insert(f).clone())
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// φ(n), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn cyclotomic_polynomial(&self) -> &[BigInt] {
        &self.0.phi_int
    }

    /// Reduce an arbitrary power-basis polynomial in ζ.
    pub fn from_power_coeffs(&self, coeffs: Vec<Q>) -> CycNum {
        let (_, r) = QPoly::new(coeffs).divrem(&self.0.phi);
        let mut c = r.0;
        c.resize(self.degree(), Q::zero());
        CycNum { field: self.clone(), coeffs: c }
    }

    pub fn zero(&self) -> CycNum {
        CycNum { field: self.clone(), coeffs: vec![Q::zero(); self.degree()] }
    }

    pub fn one(&self) -> CycNum {
        self.rational(Q::one())
    }

    pub fn rational(&self, q: Q) -> CycNum {
        let mut z = self.zero();
        z.coeffs[0] = q;
        z
    }

    pub fn integer(&self, n: i64) -> CycNum {
        self.rational(Q::from_integer(n.into()))
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> CycNum {
        let e = k.rem_euclid(self.order() as i64) as usize;
        let mut c = vec![Q::zero(); e + 1];
        c[e] = Q::one();
        self.from_power_coeffs(c)
    }

    /// Smallest field containing both Q(ζ_a) and Q(ζ_b).
    pub fn lcm_field(&self, other: &CycField) -> Result<CycField> {
        CycField::new(self.order().lcm(&other.order()))
    }
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order()
    }
}
impl Eq for CycField {}

impl fmt::Debug for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.order())
    }
}

/// An element of Q(ζ_n) in canonical power-basis form.
#[derive(Clone, PartialEq, Eq)]
pub struct CycNum {
    field: CycField,
    coeffs: Vec<Q>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Mul,
    Div,
}

/// Checked binary arithmetic with explicit field and zero-divisor errors.
pub fn cyc_arithmetic(a: &CycNum, b: &CycNum, op: CycOp) -> Result<CycNum> {
    a.check_field(b)?;
    match op {
        CycOp::Add => Ok(a.add_unchecked(b)),
        CycOp::Mul => Ok(a.mul_unchecked(b)),
        CycOp::Div => Ok(a.mul_unchecked(&b.inverse()?)),
    }
}

impl CycNum {
    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    fn check_field(&self, other: &CycNum) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.order(), right: other.field.order() });
        }
        Ok(())
    }

    fn add_unchecked(&self, other: &CycNum) -> CycNum {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CycNum { field: self.field.clone(), coeffs }
    }

    fn mul_unchecked(&self, other: &CycNum) -> CycNum {
        let d = self.field.degree();
        let mut prod = vec![Q::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        // Φ_n is monic with integer coefficients: fold the top terms down.
        let phi = &self.field.0.phi_int;
        for k in (d..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (t, p) in phi[..d].iter().enumerate() {
                if !p.is_zero() {
                    prod[k - d + t] -= &c * Q::from_integer(p.clone());
                }
            }
        }
        prod.truncate(d);
        CycNum { field: self.field.clone(), coeffs: prod }
    }

    pub fn try_add(&self, other: &CycNum) -> Result<CycNum> {
        cyc_arithmetic(self, other, CycOp::Add)
    }

    pub fn try_mul(&self, other: &CycNum) -> Result<CycNum> {
        cyc_arithmetic(self, other, CycOp::Mul)
    }

    pub fn try_div(&self, other: &CycNum) -> Result<CycNum> {
        cyc_arithmetic(self, other, CycOp::Div)
    }

    pub fn negated(&self) -> CycNum {
        CycNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scaled(&self, q: &Q) -> CycNum {
        CycNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Inverse via the extended Euclidean algorithm against Φ_n.
    pub fn inverse(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = QPoly::new(self.coeffs.clone());
        let (g, s) = a.ext_gcd(&self.field.0.phi);
        // Φ_n is irreducible, so the gcd is a nonzero constant.
        let g0 = g.0[0].clone();
        let coeffs = s.0.iter().map(|c| c / &g0).collect();
        Ok(self.field.from_power_coeffs(coeffs))
    }

    pub fn pow(&self, k: i64) -> Result<CycNum> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            sq = sq.mul_unchecked(&sq);
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Q> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    /// Image under the Galois automorphism ζ ↦ ζ^t.
    pub fn galois(&self, t: i64) -> CycNum {
        let n = self.field.order() as i64;
        let mut out = vec![Q::zero(); n as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[(k as i64 * t).rem_euclid(n) as usize] += c;
            }
        }
        self.field.from_power_coeffs(out)
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> CycNum {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Sign of a real element under the embedding ζ ↦ e^{2πi/n}.
    pub fn real_sign(&self) -> Result<i8> {
        if !self.is_real() {
            return Err(Error::NonRealSigns(self.to_string()));
        }
        if self.is_zero() {
            return Ok(0);
        }
        Ok(if self.to_complex().re > 0.0 { 1 } else { -1 })
    }

    /// Value under the embedding ζ ↦ e^{2πi/n}.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.field.order() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / n;
                Complex64::from_polar(1.0, theta) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }

    /// Embed into Q(ζ_N) for a multiple N of the current order.
    pub fn embed(&self, target: &CycField) -> Result<CycNum> {
        let (n, big) = (self.field.order(), target.order());
        if big % n != 0 {
            return Err(Error::FieldMismatch { left: n, right: big });
        }
        let step = (big / n) as usize;
        let mut out = vec![Q::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * step] = c.clone();
        }
        Ok(target.from_power_coeffs(out))
    }

    /// If this value equals ζ^k, returns the least such k.
    pub fn root_of_unity_exponent(&self) -> Option<u64> {
        (0..self.field.order()).find(|&k| self.field.zeta_pow(k as i64) == *self)
    }

    /// Renders in the scalar-literal grammar, e.g. `1 - 1/2*z^3`.
    pub fn to_literal(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = if a.is_integer() { a.numer().to_string() } else { format!("{}/{}", a.numer(), a.denom()) };
            match k {
                0 => out.push_str(&mag),
                _ => {
                    if !a.is_one() {
                        out.push_str(&mag);
                        out.push('*');
                    }
                    if k == 1 {
                        out.push('z');
                    } else {
                        out.push_str(&format!("z^{k}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Q(zeta_{})", self.to_literal(), self.field.order())
    }
}

impl Hash for CycNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for CycNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycNum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field.order().cmp(&other.field.order()).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Field for CycNum {
    type Ctx = CycField;

    fn zero(ctx: &CycField) -> Self {
        ctx.zero()
    }
    fn one(ctx: &CycField) -> Self {
        ctx.one()
    }
    fn from_i64(ctx: &CycField, n: i64) -> Self {
        ctx.integer(n)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("operands from one field")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.try_add(&rhs.negated()).expect("operands from one field")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("operands from one field")
    }
    fn neg(&self) -> Self {
        self.negated()
    }
    fn inv(&self) -> Result<Self> {
        self.inverse()
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
    fn pivot_score(&self) -> f64 {
        if CycNum::is_zero(self) {
            return 0.0;
        }
        // Prefer sparse pivots with small heights to curb coefficient growth.
        let nnz = self.coeffs.iter().filter(|c| !c.is_zero()).count() as f64;
        let bits: u64 = self.coeffs.iter().map(|c| c.numer().bits() + c.denom().bits()).sum();
        1.0 / (nnz + bits as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta4_squared_is_minus_one() {
        let f = CycField::new(4).unwrap();
        let i = f.zeta_pow(1);
        assert_eq!(i.try_mul(&i).unwrap(), f.integer(-1));
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let f = CycField::new(3).unwrap();
        let s = f.one().try_add(&f.zeta_pow(1)).unwrap().try_add(&f.zeta_pow(2)).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn inverse_of_one_minus_zeta5() {
        let f = CycField::new(5).unwrap();
        let a = f.one().try_add(&f.zeta_pow(1).negated()).unwrap();
        let inv = a.inverse().unwrap();
        assert!(inv.try_mul(&a).unwrap().is_one());
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        let f3 = CycField::new(3).unwrap();
        let f5 = CycField::new(5).unwrap();
        assert_eq!(f3.one().try_div(&f3.zero()), Err(Error::DivisionByZero));
        assert!(matches!(f3.one().try_add(&f5.one()), Err(Error::FieldMismatch { left: 3, right: 5 })));
    }

    #[test]
    fn cyclotomic_polynomials() {
        let ints = |n: u64| -> Vec<i64> {
            CycField::new(n).unwrap().cyclotomic_polynomial().iter().map(|c| c.to_i64().unwrap()).collect()
        };
        assert_eq!(ints(1), vec![-1, 1]);
        assert_eq!(ints(3), vec![1, 1, 1]);
        assert_eq!(ints(4), vec![1, 0, 1]);
        assert_eq!(ints(6), vec![1, -1, 1]);
        assert_eq!(ints(12), vec![1, 0, -1, 0, 1]);
        // Φ_n divides x^n - 1
        for n in 1..=30u64 {
            let f = CycField::new(n).unwrap();
            assert!(f.zeta_pow(n as i64).is_one());
            assert_eq!(f.degree(), (1..=n).filter(|k| k.gcd(&n) == 1).count());
        }
    }

    #[test]
    fn conjugation() {
        let f5 = CycField::new(5).unwrap();
        assert_eq!(f5.zeta_pow(1).conj(), f5.zeta_pow(4));
        let f3 = CycField::new(3).unwrap();
        let x = f3.integer(2).try_add(&f3.zeta_pow(1)).unwrap();
        assert_eq!(x.conj(), f3.integer(2).try_add(&f3.zeta_pow(2)).unwrap());
    }

    #[test]
    fn golden_ratio_in_q_zeta5() {
        let f = CycField::new(5).unwrap();
        let phi = f.zeta_pow(2).try_add(&f.zeta_pow(3)).unwrap().negated();
        assert!((phi.to_complex().re - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        // φ² = φ + 1
        assert_eq!(phi.try_mul(&phi).unwrap(), phi.try_add(&f.one()).unwrap());
        assert_eq!(phi.real_sign().unwrap(), 1);
    }

    #[test]
    fn embedding_preserves_arithmetic() {
        let f3 = CycField::new(3).unwrap();
        let f6 = CycField::new(6).unwrap();
        let w = f3.zeta_pow(1);
        let e = w.embed(&f6).unwrap();
        assert_eq!(e, f6.zeta_pow(2));
        assert_eq!(w.try_mul(&w).unwrap().embed(&f6).unwrap(), e.try_mul(&e).unwrap());
    }

    #[test]
    fn literal_rendering() {
        let f = CycField::new(7).unwrap();
        let x = f.rational(num_rational::BigRational::new(1.into(), 2.into())).try_add(&f.zeta_pow(3).negated()).unwrap();
        assert_eq!(x.to_literal(), "1/2 - z^3");
        assert_eq!(f.zero().to_literal(), "0");
    }
}
