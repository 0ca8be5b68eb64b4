use std::collections::BTreeMap;

use super::{gcd, permutation_matrix, FamilyInstance, MValue};
use crate::error::{Error, Result};
use crate::grothendieck::FusionData;
use crate::modcat::ModuleActionData;
use crate::scalar::CycField;

/// `Rep T_n` acting on `Rep Z/n`: group ring of `Z/n`, `d_a = q^a`,
/// all-ones Cartan matrix, `N_a` the shift by `a`, `m_i = q^i`, where
/// `q = ζ_n^s`.
pub fn taft_family(n: usize, s: i64) -> Result<FamilyInstance> {
    if n < 2 || gcd(s, n as i64) != 1 {
        return Err(Error::BadParameters(format!("Taft family needs n >= 2 and gcd(s, n) = 1, got n={n}, s={s}")));
    }
    let field = CycField::new(n as u64)?;
    let q = |k: usize| field.zeta_pow(s * k as i64);
    let labels: Vec<String> = (0..n).map(|a| a.to_string()).collect();
    let mut constants = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            constants.insert((a, b, (a + b) % n), 1);
        }
    }
    let dual = (0..n).map(|a| (n - a) % n).collect();
    let dims = (0..n).map(q).collect();
    let fusion = FusionData::new(labels.clone(), 0, dual, constants, Some(vec![vec![1; n]; n]), Some(dims))?;
    let action = (0..n)
        .map(|a| permutation_matrix(&(0..n).map(|i| (i + a) % n).collect::<Vec<_>>()))
        .collect();
    let module = ModuleActionData::new(labels, action)?;
    let m = (0..n).map(q).collect();
    Ok(FamilyInstance { name: format!("taft n={n} s={s}"), field, fusion, module, m: MValue::Exact(m) })
}
