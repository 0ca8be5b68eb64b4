//! Grothendieck-ring data of a finite tensor category.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{int_identity, IntMatrix, Matrix};
use crate::report::Report;
use crate::scalar::Field;

/// Labels `J`, unit, duality, sparse structure constants `c_{qr}^s`, and
/// optional Cartan matrix and dimensions. Labels are addressed by index.
#[derive(Debug, Clone)]
pub struct FusionData<S> {
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// `(q, r, s) ↦ c_{qr}^s`, zero entries omitted.
    pub constants: BTreeMap<(usize, usize, usize), u64>,
    pub cartan: Option<IntMatrix>,
    pub dims: Option<Vec<S>>,
}

impl<S> FusionData<S> {
    /// Checks shapes and index ranges; the ring axioms are checked by
    /// [`verify_fusion`].
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        constants: BTreeMap<(usize, usize, usize), u64>,
        cartan: Option<IntMatrix>,
        dims: Option<Vec<S>>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Schema("category has no labels".into()));
        }
        if unit >= n {
            return Err(Error::Schema(format!("unit index {unit} out of range")));
        }
        if dual.len() != n || dual.iter().any(|&d| d >= n) {
            return Err(Error::Schema("dual map must send every label to a label".into()));
        }
        if let Some(&(q, r, s)) = constants.keys().find(|&&(q, r, s)| q >= n || r >= n || s >= n) {
            return Err(Error::Schema(format!("structure constant ({q}, {r}, {s}) references an unknown label")));
        }
        if let Some(c) = &cartan {
            if c.len() != n || c.iter().any(|row| row.len() != n) {
                return Err(Error::DimensionMismatch(format!("cartan matrix must be {n}x{n}")));
            }
            if c.iter().flatten().any(|&x| x < 0) {
                return Err(Error::Schema("cartan matrix entries must be nonnegative".into()));
            }
        }
        if let Some(d) = &dims {
            if d.len() != n {
                return Err(Error::DimensionMismatch(format!("{} dims for {n} labels", d.len())));
            }
        }
        let constants = constants.into_iter().filter(|&(_, c)| c != 0).collect();
        Ok(FusionData { labels, unit, dual, constants, cartan, dims })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn c(&self, q: usize, r: usize, s: usize) -> u64 {
        self.constants.get(&(q, r, s)).copied().unwrap_or(0)
    }

    /// Left multiplication by `X_r` on `Gr(C)`: entry `[s][t] = c_{rt}^s`.
    pub fn left_mult(&self, r: usize) -> IntMatrix {
        let n = self.rank();
        let mut m = vec![vec![0; n]; n];
        for (&(q, t, s), &c) in self.constants.range((r, 0, 0)..(r + 1, 0, 0)) {
            debug_assert_eq!(q, r);
            m[s][t] = c as i64;
        }
        m
    }

    pub fn cartan_or_identity(&self) -> IntMatrix {
        self.cartan.clone().unwrap_or_else(|| int_identity(self.rank()))
    }

    /// No Cartan matrix, or the identity.
    pub fn is_semisimple(&self) -> bool {
        self.cartan.as_ref().is_none_or(|c| *c == int_identity(self.rank()))
    }

    pub fn dims(&self) -> Result<&[S]> {
        self.dims.as_deref().ok_or(Error::MissingDims)
    }

    pub fn map_dims<T>(&self, f: impl Fn(&S) -> T) -> FusionData<T> {
        FusionData {
            labels: self.labels.clone(),
            unit: self.unit,
            dual: self.dual.clone(),
            constants: self.constants.clone(),
            cartan: self.cartan.clone(),
            dims: self.dims.as_ref().map(|d| d.iter().map(&f).collect()),
        }
    }
}

/// Checks the unit law, associativity and the duality involution; with
/// `strict_duality`, also `c_{qr}^1 = δ_{r, q*}`.
pub fn verify_fusion<S>(f: &FusionData<S>, strict_duality: bool) -> Report {
    let n = f.rank();
    let u = f.unit;
    let mut report = Report::new("fusion ring");

    let unit_witness = (0..n).flat_map(|r| (0..n).map(move |s| (r, s))).find(|&(r, s)| {
        let want = u64::from(r == s);
        f.c(u, r, s) != want || f.c(r, u, s) != want
    });
    report.push(
        "unit",
        unit_witness.is_none(),
        unit_witness.map_or(String::new(), |(r, s)| {
            format!("unit fails on ({}, {}): c_(1,r)^s = {}, c_(r,1)^s = {}", f.labels[r], f.labels[s], f.c(u, r, s), f.c(r, u, s))
        }),
    );

    let mut assoc_witness = None;
    'outer: for q in 0..n {
        for r in 0..n {
            for s in 0..n {
                for w in 0..n {
                    let lhs: u64 = (0..n).map(|t| f.c(q, r, t) * f.c(t, s, w)).sum();
                    let rhs: u64 = (0..n).map(|t| f.c(r, s, t) * f.c(q, t, w)).sum();
                    if lhs != rhs {
                        assoc_witness = Some((q, r, s, w, lhs, rhs));
                        break 'outer;
                    }
                }
            }
        }
    }
    report.push(
        "associativity",
        assoc_witness.is_none(),
        assoc_witness.map_or(String::new(), |(q, r, s, w, lhs, rhs)| {
            format!(
                "(X_{} X_{}) X_{} and X_{} (X_{} X_{}) differ at X_{}: {lhs} vs {rhs}",
                f.labels[q], f.labels[r], f.labels[s], f.labels[q], f.labels[r], f.labels[s], f.labels[w]
            )
        }),
    );

    let inv_witness = (0..n).find(|&r| f.dual[f.dual[r]] != r);
    let unit_dual_ok = f.dual[u] == u;
    report.push(
        "duality involution",
        inv_witness.is_none() && unit_dual_ok,
        match (inv_witness, unit_dual_ok) {
            (Some(r), _) => format!("dual(dual({})) = {}", f.labels[r], f.labels[f.dual[f.dual[r]]]),
            (None, false) => format!("dual(unit) = {}", f.labels[f.dual[u]]),
            _ => String::new(),
        },
    );

    if strict_duality {
        let w = (0..n)
            .flat_map(|q| (0..n).map(move |r| (q, r)))
            .find(|&(q, r)| f.c(q, r, u) != u64::from(r == f.dual[q]));
        report.push(
            "strict duality",
            w.is_none(),
            w.map_or(String::new(), |(q, r)| {
                format!("c_({},{})^1 = {}", f.labels[q], f.labels[r], f.c(q, r, u))
            }),
        );
    }
    report
}

/// `dim C = Σ_r d_r d_{r*}`.
pub fn global_dimension<S: Field>(f: &FusionData<S>) -> Result<S> {
    let d = f.dims()?;
    let mut acc = d[0].sub(&d[0]);
    for r in 0..f.rank() {
        acc = acc.add(&d[r].mul(&d[f.dual[r]]));
    }
    if acc.is_zero() {
        return Err(Error::ZeroGlobalDimension);
    }
    Ok(acc)
}

/// `Q_M = Σ_r d_{r*} N_r` as an operator on `Gr(M)`.
pub fn q_matrix<S: Field>(f: &FusionData<S>, action: &[IntMatrix], ctx: &S::Ctx) -> Result<Matrix<S>> {
    let d = f.dims()?;
    if action.len() != f.rank() {
        return Err(Error::DimensionMismatch(format!("{} action matrices for {} labels", action.len(), f.rank())));
    }
    let size = action[0].len();
    if action.iter().any(|a| a.len() != size || a.iter().any(|row| row.len() != size)) {
        return Err(Error::DimensionMismatch("action matrices must be square of one size".into()));
    }
    let mut q = Matrix::zeros(ctx, size, size);
    for (r, a) in action.iter().enumerate() {
        q = q.add(&Matrix::from_int(ctx, a).scale(&d[f.dual[r]]));
    }
    Ok(q)
}

const POWER_ITERATIONS: usize = 20_000;
const POWER_TOLERANCE: f64 = 1e-14;

/// Positive eigenvector of an irreducible nonnegative matrix by shifted
/// power iteration, scaled so that entry `normalize_at` is 1.
pub fn perron_vector(a: &IntMatrix, normalize_at: usize) -> Result<(f64, Vec<f64>)> {
    let n = a.len();
    let mut v = vec![1.0 / n as f64; n];
    for it in 0..POWER_ITERATIONS {
        let mut w: Vec<f64> = (0..n).map(|i| v[i] + a[i].iter().zip(&v).map(|(&x, y)| x as f64 * y).sum::<f64>()).collect();
        let norm: f64 = w.iter().sum();
        if !norm.is_finite() || norm <= 0.0 {
            return Err(Error::NonConvergence { iterations: it });
        }
        w.iter_mut().for_each(|x| *x /= norm);
        let delta: f64 = w.iter().zip(&v).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        v = w;
        if delta < POWER_TOLERANCE {
            let pivot = v[normalize_at];
            if pivot <= 0.0 {
                return Err(Error::NonConvergence { iterations: it });
            }
            let av: Vec<f64> = (0..n).map(|i| a[i].iter().zip(&v).map(|(&x, y)| x as f64 * y).sum()).collect();
            let rho = av.iter().sum::<f64>() / v.iter().sum::<f64>();
            return Ok((rho, v.iter().map(|x| x / pivot).collect()));
        }
    }
    Err(Error::NonConvergence { iterations: POWER_ITERATIONS })
}

/// Frobenius-Perron dimensions of the simple classes: the positive
/// character of `Gr(C)`, i.e. the Perron vector of `Σ_r L_r^T`.
pub fn fp_dimensions<S>(f: &FusionData<S>) -> Result<Vec<f64>> {
    let n = f.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (&(_, t, s), &c) in &f.constants {
        a[t][s] += c as i64;
    }
    Ok(perron_vector(&a, f.unit)?.1)
}
