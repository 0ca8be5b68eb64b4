//! Generators for the worked examples: Taft algebras, `u_q(sl2)` and
//! `u_q(g)` dynamical families, pointed categories `Vec_G`, and regular
//! modules such as Fibonacci.

pub mod chebyshev;
mod regular;
mod taft;
mod uqg;
mod uqsl2;
mod vecg;

pub use regular::{fibonacci, regular_module};
pub use taft::taft_family;
pub use uqg::{uqg_family, RootSystemData, TorusPoint, UqgSpectrum};
pub use uqsl2::{uqsl2_expected, uqsl2_family, uqsl2_m, Lambda};
pub use vecg::{group_preset, vecg_family, FiniteGroup};

use crate::grothendieck::FusionData;
use crate::modcat::ModuleActionData;
use crate::scalar::{CycField, CycNum, FactoredValue};

/// The m-vector a family comes with.
#[derive(Debug, Clone)]
pub enum MValue {
    Exact(Vec<CycNum>),
    Symbolic(Vec<FactoredValue>),
    /// No matched pivotal structure; the payload says why.
    Unmatched(String),
}

/// Grothendieck data of one family member together with its m-vector.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub name: String,
    pub field: CycField,
    pub fusion: FusionData<CycNum>,
    pub module: ModuleActionData,
    pub m: MValue,
}

/// Permutation matrix of `i ↦ perm[i]` in the `[j][i]` convention.
pub(crate) fn permutation_matrix(perm: &[usize]) -> Vec<Vec<i64>> {
    let n = perm.len();
    let mut a = vec![vec![0; n]; n];
    for (i, &j) in perm.iter().enumerate() {
        a[j][i] = 1;
    }
    a
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}
