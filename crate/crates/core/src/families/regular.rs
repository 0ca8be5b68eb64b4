use std::collections::BTreeMap;

use super::{FamilyInstance, MValue};
use crate::error::Result;
use crate::grothendieck::FusionData;
use crate::modcat::ModuleActionData;
use crate::scalar::{CycField, CycNum, Field};

/// `M = C` with left multiplication and `m = d`.
pub fn regular_module(fusion: &FusionData<CycNum>) -> Result<(ModuleActionData, Vec<CycNum>)> {
    let dims = fusion.dims()?.to_vec();
    let action = (0..fusion.rank()).map(|r| fusion.left_mult(r)).collect();
    Ok((ModuleActionData::new(fusion.labels.clone(), action)?, dims))
}

/// The Fibonacci category `{1, τ}`, `τ² = 1 + τ`, with `d_τ = φ = −ζ₅² − ζ₅³`,
/// acting on itself.
pub fn fibonacci() -> Result<FamilyInstance> {
    let field = CycField::new(5)?;
    let phi = field.zeta_pow(2).add(&field.zeta_pow(3)).neg();
    let constants = BTreeMap::from([((0, 0, 0), 1), ((0, 1, 1), 1), ((1, 0, 1), 1), ((1, 1, 0), 1), ((1, 1, 1), 1)]);
    let fusion = FusionData::new(vec!["1".into(), "tau".into()], 0, vec![0, 1], constants, None, Some(vec![field.one(), phi]))?;
    let (module, m) = regular_module(&fusion)?;
    Ok(FamilyInstance { name: "fibonacci regular".into(), field, fusion, module, m: MValue::Exact(m) })
}
