//! Spectrum of `S²` for a fusion category without a matched pivotal
//! structure, from Müger squared norms and sign-split action matrices.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::grothendieck::FusionData;
use crate::linalg::IntMatrix;
use crate::modcat::ModuleActionData;
use crate::scalar::{CycNum, Field, NumericScalar};
use crate::spectrum::{m_bar, merge_ordered, Eigenvalue, SpectrumFactorization};

/// Squared norms `ν_i` and the split `N = N⁺ + N⁻`, with
/// `n_plus[r][j][i] = N_{ri}^{j+}`.
#[derive(Debug, Clone)]
pub struct PivotalizationData<S> {
    pub nu: Vec<S>,
    pub n_plus: Vec<IntMatrix>,
    pub n_minus: Vec<IntMatrix>,
}

/// `sign · √squared`, kept without extracting the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedEigenvalue<S> {
    pub squared: S,
    pub sign: i8,
}

impl<S: Ord> PartialOrd for SignedEigenvalue<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Ord> Ord for SignedEigenvalue<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.squared.cmp(&other.squared).then(self.sign.cmp(&other.sign))
    }
}

impl<S: fmt::Display> fmt::Display for SignedEigenvalue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "+" };
        write!(f, "{s}sqrt({})", self.squared)
    }
}

impl Eigenvalue for SignedEigenvalue<CycNum> {
    fn merge(items: Vec<(Self, u64)>) -> Vec<(Self, u64)> {
        merge_ordered(items)
    }
    fn same(&self, other: &Self) -> bool {
        self == other
    }
}

impl Eigenvalue for SignedEigenvalue<NumericScalar> {
    fn merge(items: Vec<(Self, u64)>) -> Vec<(Self, u64)> {
        let mut out: Vec<(Self, u64)> = Vec::new();
        for sign in [-1i8, 1] {
            let part: Vec<(NumericScalar, u64)> =
                items.iter().filter(|(v, _)| v.sign == sign).map(|(v, n)| (v.squared, *n)).collect();
            out.extend(NumericScalar::merge(part).into_iter().map(|(squared, n)| (SignedEigenvalue { squared, sign }, n)));
        }
        out
    }
    fn same(&self, other: &Self) -> bool {
        self.sign == other.sign && self.squared.approx_eq(&other.squared)
    }
}

/// `χ(z) = ∏ (z − λ)^{n⁺} (z + λ)^{n⁻}` with `λ² = ν_j ν_l / (ν_i ν_k)`.
pub fn char_poly_pivotalized<S>(
    p: &PivotalizationData<S>,
    module: &ModuleActionData,
) -> Result<SpectrumFactorization<SignedEigenvalue<S>>>
where
    S: Field + RealSign,
    SignedEigenvalue<S>: Eigenvalue,
{
    let n = module.size();
    if p.nu.len() != n || p.n_plus.len() != module.action.len() || p.n_minus.len() != module.action.len() {
        return Err(Error::DimensionMismatch("pivotalization data does not match the module".into()));
    }
    for (r, a) in module.action.iter().enumerate() {
        for j in 0..n {
            for i in 0..n {
                let (plus, minus) = (p.n_plus[r].get(j).and_then(|row| row.get(i)), p.n_minus[r].get(j).and_then(|row| row.get(i)));
                match (plus, minus) {
                    (Some(&x), Some(&y)) if x >= 0 && y >= 0 && x + y == a[j][i] => {}
                    _ => {
                        return Err(Error::SignSplitMismatch { label: r.to_string(), row: j, col: i });
                    }
                }
            }
        }
    }
    for (i, v) in p.nu.iter().enumerate() {
        if v.is_zero() || v.real_sign()? < 0 {
            return Err(Error::BadParameters(format!("squared norm nu_{i} must be positive")));
        }
    }
    let mut items = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let (mut plus, mut minus) = (0i64, 0i64);
                    for r in 0..module.action.len() {
                        let (jp, jm) = (p.n_plus[r][j][i], p.n_minus[r][j][i]);
                        let (kp, km) = (p.n_plus[r][k][l], p.n_minus[r][k][l]);
                        plus += jp * kp + jm * km;
                        minus += jp * km + jm * kp;
                    }
                    if plus + minus == 0 {
                        continue;
                    }
                    let squared = p.nu[j].mul(&p.nu[l]).div(&p.nu[i].mul(&p.nu[k]))?;
                    if plus > 0 {
                        items.push((SignedEigenvalue { squared: squared.clone(), sign: 1 }, plus as u64));
                    }
                    if minus > 0 {
                        items.push((SignedEigenvalue { squared, sign: -1 }, minus as u64));
                    }
                }
            }
        }
    }
    Ok(SpectrumFactorization::from_items(items))
}

/// Real-valued sign of a scalar.
pub trait RealSign {
    fn real_sign(&self) -> Result<i8>;
}

impl RealSign for CycNum {
    fn real_sign(&self) -> Result<i8> {
        CycNum::real_sign(self)
    }
}

impl RealSign for NumericScalar {
    fn real_sign(&self) -> Result<i8> {
        if self.value.im.abs() > self.tolerance {
            return Err(Error::NonRealSigns(self.to_string()));
        }
        if self.value.re.abs() <= self.tolerance {
            return Err(Error::ZeroEntry { index: 0 });
        }
        Ok(if self.value.re > 0.0 { 1 } else { -1 })
    }
}

/// Sign bookkeeping for a fusion category that already has a matched
/// pivotal structure with real dimensions: `ν_i = m_i m̄_i`, and `N_{ri}^j` goes to
/// `N⁺` when `sign(d_r) sign(m_i) sign(m_j) = +1`.
pub fn from_matched_pivotal<S: Field + RealSign>(
    f: &FusionData<S>,
    module: &ModuleActionData,
    m: &[S],
    ctx: &S::Ctx,
) -> Result<PivotalizationData<S>> {
    if !f.is_semisimple() {
        return Err(Error::BadParameters("pivotalization needs a fusion category (identity Cartan matrix)".into()));
    }
    let d = f.dims()?;
    let sign = |x: &S| x.real_sign().map_err(|_| Error::NonRealSigns(format!("{x:?}")));
    let ds = d.iter().map(sign).collect::<Result<Vec<_>>>()?;
    let ms = m.iter().map(sign).collect::<Result<Vec<_>>>()?;
    let mbar = m_bar(f, module, m, ctx)?;
    let nu: Vec<S> = m.iter().zip(&mbar).map(|(a, b)| a.mul(b)).collect();
    let n = module.size();
    let mut n_plus = Vec::with_capacity(module.action.len());
    let mut n_minus = Vec::with_capacity(module.action.len());
    for (r, a) in module.action.iter().enumerate() {
        let mut plus = vec![vec![0; n]; n];
        let mut minus = vec![vec![0; n]; n];
        for j in 0..n {
            for i in 0..n {
                if ds[r] * ms[i] * ms[j] > 0 {
                    plus[j][i] = a[j][i];
                } else {
                    minus[j][i] = a[j][i];
                }
            }
        }
        n_plus.push(plus);
        n_minus.push(minus);
    }
    Ok(PivotalizationData { nu, n_plus, n_minus })
}

/// A real eigenvalue `λ` of the matched computation as `(λ², sign λ)`.
pub fn signed<S: Field + RealSign>(v: &S) -> Result<SignedEigenvalue<S>> {
    Ok(SignedEigenvalue { squared: v.mul(v), sign: v.real_sign()? })
}
