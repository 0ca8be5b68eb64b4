use std::collections::BTreeMap;

use super::chebyshev::{chebyshev, in_chebyshev_basis, poly_mul, poly_rem_monic, ring_relation};
use super::{gcd, FamilyInstance, MValue};
use crate::error::{Error, Result};
use crate::grothendieck::FusionData;
use crate::modcat::ModuleActionData;
use crate::scalar::{factored_combine, CombineOp, CycField, CycNum, FactoredValue, Field};
use crate::spectrum::SpectrumFactorization;

/// The torus parameter of the `u_q(sl2)` family.
#[derive(Debug, Clone)]
pub enum Lambda {
    Symbolic,
    Exact(CycNum),
}

fn check_params(ell: usize, s: i64) -> Result<()> {
    if ell < 3 || ell.is_multiple_of(2) || gcd(s, ell as i64) != 1 {
        return Err(Error::BadParameters(format!(
            "u_q(sl2) family needs odd ell >= 3 and gcd(s, ell) = 1, got ell={ell}, s={s}"
        )));
    }
    Ok(())
}

/// `m_i = Λ q^i − q^{−i}` on `I = Z/ℓ`.
pub fn uqsl2_m(field: &CycField, ell: usize, s: i64, lambda: &Lambda) -> Result<MValue> {
    match lambda {
        Lambda::Symbolic => {
            let m = (0..ell).map(|i| FactoredValue::atom(field, vec![1], s * i as i64)).collect::<Result<Vec<_>>>()?;
            Ok(MValue::Symbolic(m))
        }
        Lambda::Exact(l) => {
            let l = l.embed(field)?;
            let m: Vec<CycNum> = (0..ell)
                .map(|i| l.mul(&field.zeta_pow(s * i as i64)).sub(&field.zeta_pow(-s * i as i64)))
                .collect();
            if let Some(i) = m.iter().position(|x| x.is_zero()) {
                return Err(Error::ZeroEntry { index: i });
            }
            Ok(MValue::Exact(m))
        }
    }
}

/// `Rep u_q(sl2)` acting on `Rep Z/ℓ` through the restriction to `K`.
pub fn uqsl2_family(ell: usize, s: i64, lambda: &Lambda) -> Result<FamilyInstance> {
    check_params(ell, s)?;
    let field = CycField::new(ell as u64)?;
    let labels: Vec<String> = (1..=ell).map(|j| j.to_string()).collect();

    let relation = ring_relation(ell);
    let p: Vec<Vec<i64>> = (1..=ell).map(chebyshev).collect();
    let mut constants = BTreeMap::new();
    for a in 0..ell {
        for b in 0..ell {
            let prod = poly_rem_monic(&poly_mul(&p[a], &p[b]), &relation);
            for (c, &k) in in_chebyshev_basis(&prod, ell).iter().enumerate() {
                if k < 0 {
                    return Err(Error::BadParameters(format!("X_{} X_{} has a negative coefficient", a + 1, b + 1)));
                }
                if k > 0 {
                    constants.insert((a, b, c), k as u64);
                }
            }
        }
    }

    let x = field.zeta_pow(s).add(&field.zeta_pow(-s));
    let dims = p
        .iter()
        .map(|poly| poly.iter().rev().fold(field.zero(), |acc, &c| acc.mul(&x).add(&field.integer(c))))
        .collect();

    // C_{qr} = 2δ_{qr} + 2δ_{q+r,ℓ} on labels 1..ℓ−1, C_{ℓℓ} = 1.
    let mut cartan = vec![vec![0i64; ell]; ell];
    for qi in 1..ell {
        for ri in 1..ell {
            cartan[qi - 1][ri - 1] = 2 * i64::from(qi == ri) + 2 * i64::from(qi + ri == ell);
        }
    }
    cartan[ell - 1][ell - 1] = 1;

    let fusion = FusionData::new(labels, 0, (0..ell).collect(), constants, Some(cartan), Some(dims))?;

    let action = (1..=ell)
        .map(|j| {
            let mut a = vec![vec![0i64; ell]; ell];
            for t in 0..j {
                let w = (j as i64 - 1) - 2 * t as i64;
                for i in 0..ell {
                    let target = (i as i64 + w).rem_euclid(ell as i64) as usize;
                    a[target][i] += 1;
                }
            }
            a
        })
        .collect();
    let module = ModuleActionData::new((0..ell).map(|i| i.to_string()).collect(), action)?;
    let m = uqsl2_m(&field, ell, s, lambda)?;
    Ok(FamilyInstance { name: format!("uqsl2 ell={ell} s={s}"), field, fusion, module, m })
}

/// The closed-form spectrum: eigenvalue
/// `(Λq^j − q^{−j})(Λq^k − q^{−k}) / ((Λq^i − q^{−i})(Λq^l − q^{−l}))`
/// with multiplicity `ℓ` for every `(i, j, k, l) ∈ (Z/ℓ)^4`.
pub fn uqsl2_expected(ell: usize, s: i64) -> Result<SpectrumFactorization<FactoredValue>> {
    check_params(ell, s)?;
    let field = CycField::new(ell as u64)?;
    let y = (0..ell).map(|i| FactoredValue::atom(&field, vec![1], s * i as i64)).collect::<Result<Vec<_>>>()?;
    let mut items = Vec::with_capacity(ell.pow(4));
    for i in 0..ell {
        for j in 0..ell {
            let a = factored_combine(&y[j], &y[i], CombineOp::Div);
            for k in 0..ell {
                for l in 0..ell {
                    let b = factored_combine(&y[k], &y[l], CombineOp::Div);
                    items.push((factored_combine(&a, &b, CombineOp::Mul), ell as u64));
                }
            }
        }
    }
    Ok(SpectrumFactorization::from_items(items))
}
