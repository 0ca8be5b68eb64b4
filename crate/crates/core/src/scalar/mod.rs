//! Scalar backends: exact cyclotomic numbers, factored rational functions in
//! torus parameters, Laurent polynomials for linear checks, and a
//! tolerance-tagged complex float.

mod cyclotomic;
mod factored;
mod laurent;
pub mod literal;
mod numeric;
pub(crate) mod poly;

use std::fmt;

pub use cyclotomic::{cyc_arithmetic, CycField, CycNum, CycOp};
pub use factored::{factored_combine, CombineOp, FactorKey, FactoredValue};
pub use laurent::{LaurentPoly, RatCtx, RatFunc};
pub use numeric::{NumericScalar, DEFAULT_TOLERANCE};
pub use poly::Q;


use crate::error::Result;

/// A field with an explicit construction context (the cyclotomic order, the
/// numeric tolerance, ...).
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Ctx: Clone + fmt::Debug + Send + Sync;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn is_zero(&self) -> bool;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn eq_value(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// Larger is a better elimination pivot; zero for zero.
    fn pivot_score(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }

    /// Rank of a matrix over this field.
    fn matrix_rank(m: &crate::linalg::Matrix<Self>) -> usize {
        m.elimination_rank()
    }

    fn scale_int(&self, n: u64) -> Self {
        let mut acc = self.sub(self);
        for _ in 0..n {
            acc = acc.add(self);
        }
        acc
    }
}

/// The operations needed to form eigenvalue ratios m_j m_l / (m_i m_k).
pub trait Multiplicative: Clone + Send + Sync {
    fn product(&self, rhs: &Self) -> Self;
    fn quotient(&self, rhs: &Self) -> Result<Self>;
}

impl Multiplicative for CycNum {
    fn product(&self, rhs: &Self) -> Self {
        Field::mul(self, rhs)
    }
    fn quotient(&self, rhs: &Self) -> Result<Self> {
        self.try_div(rhs)
    }
}

impl Multiplicative for NumericScalar {
    fn product(&self, rhs: &Self) -> Self {
        Field::mul(self, rhs)
    }
    fn quotient(&self, rhs: &Self) -> Result<Self> {
        Field::div(self, rhs)
    }
}

impl Multiplicative for FactoredValue {
    fn product(&self, rhs: &Self) -> Self {
        factored_combine(self, rhs, CombineOp::Mul)
    }
    fn quotient(&self, rhs: &Self) -> Result<Self> {
        Ok(factored_combine(self, rhs, CombineOp::Div))
    }
}
