//! Grothendieck-level module category: the `Z_+`-module `Gr(M)` over `Gr(C)`.

use crate::error::{Error, Result};
use crate::grothendieck::FusionData;
use crate::linalg::{int_identity, int_mul, int_transpose, IntMatrix};
use crate::report::Report;

/// Labels `I` and one matrix per label of `J`, with
/// `action[r][j][i] = N_{ri}^j`, so column `i` is the class of `X_r ⊗ M_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleActionData {
    pub labels: Vec<String>,
    pub action: Vec<IntMatrix>,
}

impl ModuleActionData {
    pub fn new(labels: Vec<String>, action: Vec<IntMatrix>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Schema("module has no labels".into()));
        }
        for (r, a) in action.iter().enumerate() {
            if a.len() != n || a.iter().any(|row| row.len() != n) {
                return Err(Error::DimensionMismatch(format!("action matrix {r} must be {n}x{n}")));
            }
            if a.iter().flatten().any(|&x| x < 0) {
                return Err(Error::Schema(format!("action matrix {r} has a negative entry")));
            }
        }
        Ok(ModuleActionData { labels, action })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `Σ_{ij} (N_q)_{ji}`.
    pub fn row_total(&self, q: usize) -> i64 {
        self.action[q].iter().flatten().sum()
    }
}

/// `Σ_{q,r} rowTotal(q) C_{qr} rowTotal(r)`, the dimension of the weak Hopf
/// algebra.
pub fn dimension_identity<S>(f: &FusionData<S>, m: &ModuleActionData) -> u128 {
    let c = f.cartan_or_identity();
    let totals: Vec<u128> = (0..f.rank()).map(|q| m.row_total(q) as u128).collect();
    let mut acc = 0u128;
    for q in 0..f.rank() {
        for r in 0..f.rank() {
            acc += totals[q] * c[q][r] as u128 * totals[r];
        }
    }
    acc
}

/// Checks the unit, the module relation, transpose duality, coverage and
/// indecomposability.
pub fn verify_module<S>(f: &FusionData<S>, m: &ModuleActionData) -> Report {
    let mut report = Report::new("module");
    let n = m.size();
    if m.action.len() != f.rank() {
        report.push(
            "shape",
            false,
            format!("{} action matrices for {} category labels", m.action.len(), f.rank()),
        );
        return report;
    }

    let unit_ok = m.action[f.unit] == int_identity(n);
    report.push(
        "unit acts by identity",
        unit_ok,
        if unit_ok {
            String::new()
        } else {
            let (j, i) = (0..n)
                .flat_map(|j| (0..n).map(move |i| (j, i)))
                .find(|&(j, i)| m.action[f.unit][j][i] != i64::from(i == j))
                .unwrap();
            format!("N_1[{}][{}] = {}", m.labels[j], m.labels[i], m.action[f.unit][j][i])
        },
    );

    let mut rel = None;
    'outer: for q in 0..f.rank() {
        for r in 0..f.rank() {
            let lhs = int_mul(&m.action[q], &m.action[r]);
            let mut rhs = vec![vec![0i64; n]; n];
            for s in 0..f.rank() {
                let c = f.c(q, r, s) as i64;
                if c != 0 {
                    for (row, arow) in rhs.iter_mut().zip(&m.action[s]) {
                        for (x, &y) in row.iter_mut().zip(arow) {
                            *x += c * y;
                        }
                    }
                }
            }
            if lhs != rhs {
                let (j, i) = (0..n).flat_map(|j| (0..n).map(move |i| (j, i))).find(|&(j, i)| lhs[j][i] != rhs[j][i]).unwrap();
                rel = Some(format!(
                    "N_{} N_{} differs from Σ_s c N_s at ({}, {}): {} vs {}",
                    f.labels[q], f.labels[r], m.labels[j], m.labels[i], lhs[j][i], rhs[j][i]
                ));
                break 'outer;
            }
        }
    }
    report.push("module relation", rel.is_none(), rel.unwrap_or_default());

    let dual_w = (0..f.rank()).find(|&r| m.action[f.dual[r]] != int_transpose(&m.action[r]));
    report.push(
        "dual acts by transpose",
        dual_w.is_none(),
        dual_w.map_or(String::new(), |r| format!("N_{} != N_{}^T", f.labels[f.dual[r]], f.labels[r])),
    );

    let uncovered = (0..n).find(|&i| (0..f.rank()).map(|r| (0..n).map(|j| m.action[r][j][i]).sum::<i64>()).sum::<i64>() == 0);
    report.push(
        "every simple is hit",
        uncovered.is_none(),
        uncovered.map_or(String::new(), |i| format!("column {} is zero in every N_r", m.labels[i])),
    );

    let comps = components(m);
    report.push(
        "indecomposable",
        comps == 1,
        if comps == 1 { String::new() } else { format!("support graph has {comps} components") },
    );
    report
}

fn components(m: &ModuleActionData) -> usize {
    let n = m.size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for a in &m.action {
        for j in 0..n {
            for i in 0..n {
                if a[j][i] > 0 {
                    let (x, y) = (find(&mut parent, i), find(&mut parent, j));
                    parent[x] = y;
                }
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

/// Whether the invertible class `d_label` acts trivially on `Gr(M)`.
pub fn d_action_triviality<S>(f: &FusionData<S>, m: &ModuleActionData, d_label: usize) -> Result<bool> {
    let a = m
        .action
        .get(d_label)
        .ok_or_else(|| Error::NotInvertibleClass(format!("index {d_label}")))?;
    let is_perm = a.iter().all(|row| row.iter().filter(|&&x| x != 0).count() == 1 && row.iter().sum::<i64>() == 1)
        && (0..a.len()).all(|i| a.iter().map(|row| row[i]).sum::<i64>() == 1);
    if !is_perm {
        return Err(Error::NotInvertibleClass(f.labels[d_label].clone()));
    }
    Ok(*a == int_identity(a.len()))
}
