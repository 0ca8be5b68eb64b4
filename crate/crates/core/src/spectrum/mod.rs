//! The module-trace vector `m`, the dual vector `m̄`, the identities
//! satisfied by `Q_M`, and the characteristic polynomial of `S²`.

mod factorization;
mod limits;

pub use factorization::{Eigenvalue, SpectrumFactorization};
pub use limits::{lambda_limit, power_of_polynomial, render_polynomial, LambdaLimit};

pub(crate) use factorization::merge_ordered;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grothendieck::{global_dimension, perron_vector, q_matrix, FusionData};
use crate::linalg::{IntMatrix, Matrix};
use crate::modcat::ModuleActionData;
use crate::report::Report;
use crate::scalar::{CycNum, FactoredValue, Field, Multiplicative, RatCtx, RatFunc};

/// Basis of `∩_r ker(N_r^T − d_r)` (the vectors with
/// `Σ_j N_{ri}^j m_j = d_r m_i`) and its dimension.
pub fn dimension_eigenspace<S: Field>(
    f: &FusionData<S>,
    module: &ModuleActionData,
    ctx: &S::Ctx,
) -> Result<(Vec<Vec<S>>, usize)> {
    let d = f.dims()?;
    let n = module.size();
    let blocks: Vec<Matrix<S>> = module
        .action
        .iter()
        .zip(d)
        .map(|(a, dr)| {
            Matrix::from_int(ctx, a).transpose().sub(&Matrix::identity(ctx, n).scale(dr))
        })
        .collect();
    let stacked = Matrix::vstack(ctx, &blocks, n);
    let basis = stacked.null_space();
    if basis.is_empty() {
        return Err(Error::EmptyEigenspace);
    }
    let k = basis.len();
    Ok((basis, k))
}

/// Checks `Σ_j N_{ri}^j m_j = d_r m_i` for every `r` and `i`.
pub fn check_eigenvector<S: Field>(f: &FusionData<S>, module: &ModuleActionData, m: &[S]) -> Result<()> {
    let d = f.dims()?;
    if m.len() != module.size() {
        return Err(Error::DimensionMismatch(format!("m has {} entries, module has {} labels", m.len(), module.size())));
    }
    for (r, a) in module.action.iter().enumerate() {
        for i in 0..m.len() {
            let mut lhs: Option<S> = None;
            for (j, mj) in m.iter().enumerate() {
                let c = a[j][i];
                if c != 0 {
                    let t = mj.scale_int(c as u64);
                    lhs = Some(match lhs {
                        None => t,
                        Some(x) => x.add(&t),
                    });
                }
            }
            let rhs = d[r].mul(&m[i]);
            let ok = match lhs {
                None => rhs.is_zero(),
                Some(l) => l.eq_value(&rhs),
            };
            if !ok {
                return Err(Error::NotInEigenspace { label: f.labels[r].clone(), row: i });
            }
        }
    }
    Ok(())
}

/// Chooses the m-vector. A one-dimensional eigenspace determines it up to
/// scale (normalized to first entry 1); otherwise a candidate is required.
pub fn select_m<S: Field>(
    f: &FusionData<S>,
    module: &ModuleActionData,
    basis: &[Vec<S>],
    candidate: Option<Vec<S>>,
) -> Result<Vec<S>> {
    let m = match (basis.len(), candidate) {
        (0, _) => return Err(Error::EmptyEigenspace),
        (_, Some(c)) => c,
        (1, None) => {
            let v = &basis[0];
            if let Some(i) = v.iter().position(|x| x.is_zero()) {
                return Err(Error::ZeroEntry { index: i });
            }
            let inv = v[0].inv()?;
            v.iter().map(|x| x.mul(&inv)).collect()
        }
        (k, None) => return Err(Error::AmbiguousM { multiplicity: k }),
    };
    if let Some(i) = m.iter().position(|x| x.is_zero()) {
        return Err(Error::ZeroEntry { index: i });
    }
    check_eigenvector(f, module, &m)?;
    Ok(m)
}

/// Validates a symbolic candidate m-vector by expanding to rational functions.
pub fn select_m_symbolic(
    f: &FusionData<CycNum>,
    module: &ModuleActionData,
    multiplicity: usize,
    candidate: Vec<FactoredValue>,
) -> Result<Vec<FactoredValue>> {
    if multiplicity == 0 {
        return Err(Error::EmptyEigenspace);
    }
    let ctx = symbolic_context(&candidate).ok_or_else(|| Error::DimensionMismatch("empty m-vector".into()))?;
    let lifted = lift_to_ratfunc(f, &ctx)?;
    let m: Vec<RatFunc> = candidate.iter().map(FactoredValue::to_ratfunc).collect();
    check_eigenvector(&lifted, module, &m)?;
    Ok(candidate)
}

/// The fusion data with dims viewed as constant rational functions.
pub fn lift_to_ratfunc(f: &FusionData<CycNum>, ctx: &RatCtx) -> Result<FusionData<RatFunc>> {
    let dims = f
        .dims()?
        .iter()
        .map(|d| Ok(RatFunc::constant(d.embed(&ctx.field)?, ctx.nvars)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = f.map_dims(|_| RatFunc::zero(ctx));
    out.dims = Some(dims);
    Ok(out)
}

/// Rational-function context (field and torus rank) of a symbolic vector.
pub fn symbolic_context(m: &[FactoredValue]) -> Option<RatCtx> {
    m.first().map(|v| RatCtx { field: v.field().clone(), nvars: v.nvars() })
}

/// `m̄ = Q_M e_j / m_j`, checked to be independent of `j`.
pub fn m_bar<S: Field>(f: &FusionData<S>, module: &ModuleActionData, m: &[S], ctx: &S::Ctx) -> Result<Vec<S>> {
    let q = q_matrix(f, &module.action, ctx)?;
    let mut out: Option<Vec<S>> = None;
    for (j, mj) in m.iter().enumerate() {
        let inv = mj.inv().map_err(|_| Error::ZeroEntry { index: j })?;
        let col: Vec<S> = q.column(j).iter().map(|x| x.mul(&inv)).collect();
        match &out {
            None => out = Some(col),
            Some(first) => {
                if !first.iter().zip(&col).all(|(a, b)| a.eq_value(b)) {
                    return Err(Error::JDependence { first: 0, second: j });
                }
            }
        }
    }
    out.ok_or_else(|| Error::DimensionMismatch("empty m-vector".into()))
}

/// The identities of a matched pair: trace, rank one, `Q² = dim(C) Q`,
/// pivotal normalization, and `Σ_r d_r N_{ri}^j = m̄_i m_j`.
pub fn matched_checks<S: Field>(
    f: &FusionData<S>,
    module: &ModuleActionData,
    m: &[S],
    ctx: &S::Ctx,
) -> Result<Report> {
    let dim_c = global_dimension(f)?;
    let q = q_matrix(f, &module.action, ctx)?;
    let d = f.dims()?;
    let mut report = Report::new("matched identities");

    if f.is_semisimple() {
        let tr = q.trace();
        report.push("trace", tr.eq_value(&dim_c), format!("Tr(Q_M) = {tr:?}, dim(C) = {dim_c:?}"));
    }
    let rank = q.rank();
    report.push("rank one", rank == 1, format!("rank(Q_M) = {rank}"));
    let q2 = q.mul(&q);
    report.push("Q^2 = dim(C) Q", q2.eq_value(&q.scale(&dim_c)), "");

    match m_bar(f, module, m, ctx) {
        Ok(mbar) => {
            let s = m.iter().zip(&mbar).fold(S::zero(ctx), |acc, (a, b)| acc.add(&a.mul(b)));
            report.push(
                "pivotal normalization",
                s.eq_value(&dim_c),
                format!("Σ m_i m̄_i = {s:?}, dim(C) = {dim_c:?}"),
            );
            let n = module.size();
            let mut bad = None;
            'outer: for i in 0..n {
                for j in 0..n {
                    let lhs = module.action.iter().zip(d).fold(S::zero(ctx), |acc, (a, dr)| {
                        if a[j][i] == 0 {
                            acc
                        } else {
                            acc.add(&dr.scale_int(a[j][i] as u64))
                        }
                    });
                    if !lhs.eq_value(&mbar[i].mul(&m[j])) {
                        bad = Some((i, j));
                        break 'outer;
                    }
                }
            }
            report.push(
                "hom table",
                bad.is_none(),
                bad.map_or(String::new(), |(i, j)| {
                    format!("Σ_r d_r N_(r,{})^{} != m̄_i m_j", module.labels[i], module.labels[j])
                }),
            );
        }
        Err(e) => {
            report.push("pivotal normalization", false, format!("m̄ unavailable: {e}"));
            report.push("hom table", false, format!("m̄ unavailable: {e}"));
        }
    }
    Ok(report)
}

/// `n_{ijkl} = Σ_{q,r} N_{qi}^j C_{qr} N_{rl}^k` for all quadruples with
/// `n > 0`, in lexicographic order.
pub fn quadruples<D>(f: &FusionData<D>, module: &ModuleActionData) -> Vec<(usize, usize, usize, usize, u64)> {
    let n = module.size();
    let (left, right) = pair_vectors(f, module);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let a = &left[i * n + j];
            if a.iter().all(|&x| x == 0) {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    let v = dot(a, &right[k * n + l]);
                    if v > 0 {
                        out.push((i, j, k, l, v as u64));
                    }
                }
            }
        }
    }
    out
}

/// For each pair `(i, j)`: the vector `r ↦ Σ_q N_{qi}^j C_{qr}`; for each
/// pair `(k, l)`: `r ↦ N_{rl}^k`.
fn pair_vectors<D>(f: &FusionData<D>, module: &ModuleActionData) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = module.size();
    let c: IntMatrix = f.cartan_or_identity();
    let nj = f.rank();
    let mut left = Vec::with_capacity(n * n);
    let mut right = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            left.push((0..nj).map(|r| (0..nj).map(|q| module.action[q][j][i] * c[q][r]).sum()).collect());
        }
    }
    for k in 0..n {
        for l in 0..n {
            right.push((0..nj).map(|r| module.action[r][k][l]).collect());
        }
    }
    (left, right)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The characteristic polynomial of `S²`: eigenvalue `m_j m_l / (m_i m_k)`
/// with multiplicity `n_{ijkl}`, merged under canonical equality.
pub fn char_poly_s2<D, S>(f: &FusionData<D>, module: &ModuleActionData, m: &[S]) -> Result<SpectrumFactorization<S>>
where
    D: Sync,
    S: Multiplicative + Eigenvalue,
{
    let n = module.size();
    if m.len() != n {
        return Err(Error::DimensionMismatch(format!("m has {} entries, module has {n} labels", m.len())));
    }
    if module.action.len() != f.rank() {
        return Err(Error::DimensionMismatch(format!(
            "{} action matrices for {} labels",
            module.action.len(),
            f.rank()
        )));
    }
    // ratio[i][j] = m_j / m_i
    let mut ratio = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            ratio.push(m[j].quotient(&m[i]).map_err(|_| Error::ZeroEntry { index: i })?);
        }
    }
    let (left, right) = pair_vectors(f, module);
    let items: Vec<(S, u64)> = (0..n * n)
        .into_par_iter()
        .filter(|&ij| left[ij].iter().any(|&x| x != 0))
        .flat_map_iter(|ij| {
            let left = &left;
            let right = &right;
            let ratio = &ratio;
            let local: Vec<(S, u64)> = (0..n * n)
                .filter_map(move |kl| {
                    let v = dot(&left[ij], &right[kl]);
                    (v > 0).then(|| (ratio[ij].product(&ratio[kl]), v as u64))
                })
                .collect();
            S::merge(local)
        })
        .collect();
    Ok(SpectrumFactorization::from_items(items))
}

/// Whether the spectrum is unchanged when `m_i` is replaced by `m_i b_i`,
/// where `b_r` (on `J`) is a character of `Gr(C)` and `b_i` (on `I`) is a
/// compatible grading: `N_{ri}^j ≠ 0 ⇒ b_j = b_r b_i`.
pub fn pivotal_twist_invariance<S>(
    f: &FusionData<S>,
    module: &ModuleActionData,
    m: &[S],
    b_category: &[S],
    b_module: &[S],
) -> Result<bool>
where
    S: Field + Multiplicative + Eigenvalue,
{
    if b_category.len() != f.rank() || b_module.len() != module.size() {
        return Err(Error::InvalidTwist("twist vectors have the wrong length".into()));
    }
    if b_category.iter().chain(b_module).any(Field::is_zero) {
        return Err(Error::InvalidTwist("twist has a zero entry".into()));
    }
    for &(q, r, s) in f.constants.keys() {
        if !b_category[q].mul(&b_category[r]).eq_value(&b_category[s]) {
            return Err(Error::InvalidTwist(format!(
                "b is not a character: b({}) b({}) != b({})",
                f.labels[q], f.labels[r], f.labels[s]
            )));
        }
    }
    for (r, a) in module.action.iter().enumerate() {
        for (j, row) in a.iter().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                if x != 0 && !b_category[r].mul(&b_module[i]).eq_value(&b_module[j]) {
                    return Err(Error::InvalidTwist(format!(
                        "grading incompatible with N_{} at ({}, {})",
                        f.labels[r], module.labels[j], module.labels[i]
                    )));
                }
            }
        }
    }
    let twisted: Vec<S> = m.iter().zip(b_module).map(|(x, b)| x.mul(b)).collect();
    let before = char_poly_s2(f, module, m)?;
    let after = char_poly_s2(f, module, &twisted)?;
    Ok(before.same_as(&after))
}

/// Positive m-vector on the module side: the Perron vector of `Σ_r N_r^T`,
/// scaled to first entry 1.
pub fn fp_module_vector(module: &ModuleActionData) -> Result<Vec<f64>> {
    let n = module.size();
    let mut a = vec![vec![0i64; n]; n];
    for act in &module.action {
        for (j, row) in act.iter().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                a[i][j] += x;
            }
        }
    }
    Ok(perron_vector(&a, 0)?.1)
}
