use num_complex::Complex64;
use rayon::prelude::*;

use super::gcd;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::scalar::{CycField, CycNum, FactoredValue, Field, Multiplicative, NumericScalar};
use crate::spectrum::{Eigenvalue, SpectrumFactorization};

/// Root data of a simply-laced simple Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    pub label: String,
    pub rank: usize,
    pub cartan: IntMatrix,
    /// Positive roots in simple-root coordinates.
    pub positive_roots: Vec<Vec<i32>>,
    pub dim_g: usize,
}

impl RootSystemData {
    /// `A_n`: positive roots are the intervals `α_i + … + α_j`.
    pub fn type_a(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParameters("type A needs rank >= 1".into()));
        }
        let cartan = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 2 } else if i.abs_diff(j) == 1 { -1 } else { 0 }).collect())
            .collect();
        let mut positive_roots = Vec::new();
        for i in 0..n {
            for j in i..n {
                positive_roots.push((0..n).map(|k| i32::from(i <= k && k <= j)).collect());
            }
        }
        Ok(RootSystemData { label: format!("A{n}"), rank: n, cartan, positive_roots, dim_g: n * (n + 2) })
    }

    /// Parses labels such as `A1`, `A2`.
    pub fn parse(label: &str) -> Result<Self> {
        match label.strip_prefix('A').and_then(|r| r.parse::<usize>().ok()) {
            Some(n) => Self::type_a(n),
            None => Err(Error::BadParameters(format!("unsupported root system '{label}'"))),
        }
    }

    pub fn cartan_determinant(&self) -> i64 {
        int_determinant(&self.cartan)
    }
}

/// Bareiss fraction-free elimination.
fn int_determinant(a: &IntMatrix) -> i64 {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        (sign * m[n - 1][n - 1]) as i64
    }
}

/// The torus parameter `Λ ∈ T`, one coordinate per simple root.
#[derive(Debug, Clone)]
pub enum TorusPoint {
    Symbolic,
    Exact(Vec<CycNum>),
    Numeric(Vec<Complex64>, f64),
}

#[derive(Debug, Clone)]
pub enum UqgSpectrum {
    Symbolic(SpectrumFactorization<FactoredValue>),
    Exact(SpectrumFactorization<CycNum>),
    Numeric(SpectrumFactorization<NumericScalar>),
}

impl UqgSpectrum {
    pub fn total_degree(&self) -> u64 {
        match self {
            UqgSpectrum::Symbolic(s) => s.total_degree,
            UqgSpectrum::Exact(s) => s.total_degree,
            UqgSpectrum::Numeric(s) => s.total_degree,
        }
    }

    pub fn distinct(&self) -> usize {
        match self {
            UqgSpectrum::Symbolic(s) => s.factors.len(),
            UqgSpectrum::Exact(s) => s.factors.len(),
            UqgSpectrum::Numeric(s) => s.factors.len(),
        }
    }
}

/// Weights `λ ∈ (Z/ℓ)^rank` in fundamental-weight coordinates, so that
/// `(λ, α) = Σ λ_i α_i`.
fn weights(rank: usize, ell: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| (0..ell as i64).map(move |c| [w.clone(), vec![c]].concat()))
            .collect();
    }
    out
}

fn pairing(lambda: &[i64], alpha: &[i32]) -> i64 {
    lambda.iter().zip(alpha).map(|(&l, &a)| l * a as i64).sum()
}

/// `{y_λ / y_μ}` convolved with itself: eigenvalue `y_λ y_κ / (y_μ y_ν)`
/// with multiplicity `ℓ^{dim g − 2 rank}` for every `(λ, μ, ν, κ)`.
fn convolve<S: Multiplicative + Eigenvalue>(y: &[S], weight: u64) -> Result<SpectrumFactorization<S>> {
    let mut ratios = Vec::with_capacity(y.len() * y.len());
    for a in y {
        for b in y {
            ratios.push((a.quotient(b)?, 1u64));
        }
    }
    let ratios = S::merge(ratios);
    let items: Vec<(S, u64)> = ratios
        .par_iter()
        .flat_map_iter(|(a, na)| {
            let local: Vec<(S, u64)> = ratios.iter().map(|(b, nb)| (a.product(b), na * nb * weight)).collect();
            S::merge(local)
        })
        .collect();
    Ok(SpectrumFactorization::from_items(items))
}

/// The spectrum of `S²` on the dynamical quantum group attached to `u_q(g)`
/// at `q = ζ_ℓ^s`, with `y_λ = ∏_{α>0} (Λ_α q^{(λ,α)} − q^{−(λ,α)})`.
pub fn uqg_family(rs: &RootSystemData, ell: usize, s: i64, torus: &TorusPoint) -> Result<UqgSpectrum> {
    let det = rs.cartan_determinant();
    if (0..rs.rank).any(|i| (0..rs.rank).any(|j| rs.cartan[i][j] != rs.cartan[j][i])) {
        return Err(Error::BadParameters(format!("{} is not simply laced", rs.label)));
    }
    if ell < 3 || ell.is_multiple_of(2) || gcd(ell as i64, det) != 1 || gcd(s, ell as i64) != 1 {
        return Err(Error::BadParameters(format!(
            "{} needs odd ell >= 3 coprime to det C = {det} and to s, got ell={ell}, s={s}",
            rs.label
        )));
    }
    let exponent = rs.dim_g as u32 - 2 * rs.rank as u32;
    let weight = (ell as u64).pow(exponent);
    let lambdas = weights(rs.rank, ell);
    let field = CycField::new(ell as u64)?;
    match torus {
        TorusPoint::Symbolic => {
            let y = lambdas
                .iter()
                .map(|l| {
                    rs.positive_roots.iter().try_fold(FactoredValue::one(&field, rs.rank), |acc, a| {
                        Ok::<_, Error>(acc.product(&FactoredValue::atom(&field, a.clone(), s * pairing(l, a))?))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(UqgSpectrum::Symbolic(convolve(&y, weight)?))
        }
        TorusPoint::Exact(point) => {
            if point.len() != rs.rank {
                return Err(Error::DimensionMismatch(format!("{} torus coordinates for rank {}", point.len(), rs.rank)));
            }
            let big = point.iter().try_fold(field.clone(), |f, p| f.lcm_field(p.field()))?;
            let point = point.iter().map(|p| p.embed(&big)).collect::<Result<Vec<_>>>()?;
            let q = |k: i64| big.zeta_pow(k * s * (big.order() / ell as u64) as i64);
            let mut lambda_alpha = Vec::new();
            for a in &rs.positive_roots {
                let mut v = big.one();
                for (p, &k) in point.iter().zip(a) {
                    v = v.mul(&p.pow(k as i64)?);
                }
                if v.pow(ell as i64)?.is_one() {
                    return Err(Error::ZeroEntry { index: lambda_alpha.len() });
                }
                lambda_alpha.push(v);
            }
            let y: Vec<CycNum> = lambdas
                .iter()
                .map(|l| {
                    rs.positive_roots.iter().zip(&lambda_alpha).fold(big.one(), |acc, (a, la)| {
                        let k = pairing(l, a);
                        acc.mul(&la.mul(&q(k)).sub(&q(-k)))
                    })
                })
                .collect();
            Ok(UqgSpectrum::Exact(convolve(&y, weight)?))
        }
        TorusPoint::Numeric(point, tol) => {
            if point.len() != rs.rank {
                return Err(Error::DimensionMismatch(format!("{} torus coordinates for rank {}", point.len(), rs.rank)));
            }
            let q = |k: i64| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (s * k) as f64 / ell as f64);
            let mut lambda_alpha = Vec::new();
            for a in &rs.positive_roots {
                let v: Complex64 = point.iter().zip(a).map(|(p, &k)| p.powi(k)).product();
                if (v.powu(ell as u32) - 1.0).norm() <= *tol {
                    return Err(Error::ZeroEntry { index: lambda_alpha.len() });
                }
                lambda_alpha.push(v);
            }
            let y: Vec<NumericScalar> = lambdas
                .iter()
                .map(|l| {
                    let v: Complex64 = rs
                        .positive_roots
                        .iter()
                        .zip(&lambda_alpha)
                        .map(|(a, la)| {
                            let k = pairing(l, a);
                            la * q(k) - q(-k)
                        })
                        .product();
                    NumericScalar::new(v, *tol)
                })
                .collect();
            Ok(UqgSpectrum::Numeric(convolve(&y, weight)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_data() {
        for n in 1..=3 {
            let rs = RootSystemData::type_a(n).unwrap();
            assert_eq!(rs.cartan_determinant(), n as i64 + 1);
            assert_eq!(rs.positive_roots.len(), (rs.dim_g - rs.rank) / 2);
        }
    }

    #[test]
    fn a2_rejects_ell_three() {
        let rs = RootSystemData::type_a(2).unwrap();
        assert!(matches!(uqg_family(&rs, 3, 1, &TorusPoint::Symbolic), Err(Error::BadParameters(_))));
    }
}
