//! Dense univariate polynomials over Q, used for cyclotomic reduction and
//! inversion.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

/// Coefficients from low to high degree, without trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct QPoly(pub(crate) Vec<Q>);

impl QPoly {
    pub(crate) fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Q {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub(crate) fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Q::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] -= c;
        }
        QPoly::new(out)
    }

    pub(crate) fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly(Vec::new());
        }
        let mut out = vec![Q::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub(crate) fn divrem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.0.clone();
        let Some(sd) = self.degree() else {
            return (QPoly(Vec::new()), QPoly(Vec::new()));
        };
        if sd < dd {
            return (QPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![Q::zero(); sd - dd + 1];
        let lead = divisor.lead();
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.0.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Returns `(g, s)` with `s * self ≡ g (mod modulus)` and `g = gcd`.
    pub(crate) fn ext_gcd(&self, modulus: &QPoly) -> (QPoly, QPoly) {
        let (mut r0, mut r1) = (modulus.clone(), self.clone());
        let (mut s0, mut s1) = (QPoly(Vec::new()), QPoly(vec![Q::one()]));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        (r0, s0)
    }
}
