//! Fixed inputs shared by the benchmarks.

use antipode_core::families::{fibonacci, taft_family, uqsl2_family, FamilyInstance, Lambda, TorusPoint};
use num_complex::Complex64;

pub fn taft(n: usize) -> FamilyInstance {
    taft_family(n, 1).expect("valid Taft parameters")
}

pub fn uqsl2_symbolic(ell: usize) -> FamilyInstance {
    uqsl2_family(ell, 1, &Lambda::Symbolic).expect("valid u_q(sl2) parameters")
}

pub fn fib() -> FamilyInstance {
    fibonacci().expect("Fibonacci preset")
}

/// A generic point of the rank-2 torus.
pub fn rank_two_point() -> TorusPoint {
    TorusPoint::Numeric(vec![Complex64::new(0.37, 0.5), Complex64::new(0.21, -0.3)], 1e-9)
}
