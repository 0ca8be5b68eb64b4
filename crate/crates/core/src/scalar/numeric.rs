use std::fmt;

use num_complex::Complex64;

use super::Field;
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A complex float compared up to an absolute tolerance.
#[derive(Clone, Copy)]
pub struct NumericScalar {
    pub value: Complex64,
    pub tolerance: f64,
}

impl NumericScalar {
    pub fn new(value: Complex64, tolerance: f64) -> Self {
        NumericScalar { value, tolerance }
    }

    pub fn real(x: f64, tolerance: f64) -> Self {
        NumericScalar { value: Complex64::new(x, 0.0), tolerance }
    }

    pub fn approx_eq(&self, other: &NumericScalar) -> bool {
        (self.value - other.value).norm() <= self.tolerance.max(other.tolerance)
    }
}

impl PartialEq for NumericScalar {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

impl fmt::Debug for NumericScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for NumericScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Complex64 { re, im } = self.value;
        if im.abs() <= self.tolerance {
            write!(f, "{re:.12}")
        } else {
            write!(f, "{re:.12}{}{:.12}i", if im < 0.0 { "-" } else { "+" }, im.abs())
        }
    }
}

impl Field for NumericScalar {
    type Ctx = f64;

    fn zero(tol: &f64) -> Self {
        NumericScalar::real(0.0, *tol)
    }
    fn one(tol: &f64) -> Self {
        NumericScalar::real(1.0, *tol)
    }
    fn from_i64(tol: &f64, n: i64) -> Self {
        NumericScalar::real(n as f64, *tol)
    }
    fn add(&self, rhs: &Self) -> Self {
        NumericScalar::new(self.value + rhs.value, self.tolerance)
    }
    fn sub(&self, rhs: &Self) -> Self {
        NumericScalar::new(self.value - rhs.value, self.tolerance)
    }
    fn mul(&self, rhs: &Self) -> Self {
        NumericScalar::new(self.value * rhs.value, self.tolerance)
    }
    fn neg(&self) -> Self {
        NumericScalar::new(-self.value, self.tolerance)
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(NumericScalar::new(self.value.inv(), self.tolerance))
    }
    fn is_zero(&self) -> bool {
        self.value.norm() <= self.tolerance
    }
    fn matrix_rank(m: &crate::linalg::Matrix<Self>) -> usize {
        m.svd_rank()
    }
    fn pivot_score(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.value.norm()
        }
    }
}
