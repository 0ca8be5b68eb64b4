//! Brute-force checks on explicit finite-dimensional algebras: the Jacobson
//! radical from the trace form, Cartan data from idempotents and composition
//! series, and `S²` on an explicit Hopf basis.

mod subspace;
mod taft;
mod uqsl2;

pub use subspace::Subspace;
pub use taft::{taft_algebra, taft_idempotents, taft_simples};
pub use uqsl2::{uqsl2_algebra, uqsl2_simples};

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Matrix};
use crate::report::Report;
use crate::scalar::{CycField, CycNum, Field};
use crate::spectrum::SpectrumFactorization;

/// An associative algebra with basis `e_u` and products
/// `e_u e_v = Σ_w table[u][v][w] e_w` (sparse).
#[derive(Debug, Clone)]
pub struct StructureAlgebra {
    pub labels: Vec<String>,
    pub field: CycField,
    table: Vec<Vec<Vec<(usize, CycNum)>>>,
    pub unit: Vec<CycNum>,
    /// Basis indices of a generating set, with names.
    pub generators: Vec<(String, usize)>,
}

/// A module given by the images of all basis elements.
#[derive(Debug, Clone)]
pub struct SimpleModule {
    pub name: String,
    pub dim: usize,
    pub basis_images: Vec<Matrix<CycNum>>,
}

impl SimpleModule {
    pub fn image(&self, x: &[CycNum]) -> Matrix<CycNum> {
        let field = self.basis_images[0].ctx().clone();
        x.iter()
            .zip(&self.basis_images)
            .filter(|(c, _)| !c.is_zero())
            .fold(Matrix::zeros(&field, self.dim, self.dim), |acc, (c, m)| acc.add(&m.scale(c)))
    }
}

impl StructureAlgebra {
    pub fn new(
        labels: Vec<String>,
        field: CycField,
        table: Vec<Vec<Vec<(usize, CycNum)>>>,
        unit: Vec<CycNum>,
        generators: Vec<(String, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) || unit.len() != n {
            return Err(Error::DimensionMismatch(format!("structure table must be {n}x{n}")));
        }
        Ok(StructureAlgebra { labels, field, table, unit, generators })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis_vector(&self, u: usize) -> Vec<CycNum> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[u] = self.field.one();
        v
    }

    pub fn basis_product(&self, u: usize, v: usize) -> &[(usize, CycNum)] {
        &self.table[u][v]
    }

    pub fn mul(&self, x: &[CycNum], y: &[CycNum]) -> Vec<CycNum> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (u, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (v, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a.mul(b);
                for (w, c) in &self.table[u][v] {
                    out[*w] = out[*w].add(&ab.mul(c));
                }
            }
        }
        out
    }

    /// Left multiplication by `x`, column `v` = `x e_v`.
    pub fn left_matrix(&self, x: &[CycNum]) -> Matrix<CycNum> {
        let cols: Vec<Vec<CycNum>> = (0..self.dim()).map(|v| self.mul(x, &self.basis_vector(v))).collect();
        Matrix::from_fn(&self.field, self.dim(), self.dim(), |i, j| cols[j][i].clone())
    }

    /// Right multiplication by `x`, column `v` = `e_v x`.
    pub fn right_matrix(&self, x: &[CycNum]) -> Matrix<CycNum> {
        let cols: Vec<Vec<CycNum>> = (0..self.dim()).map(|v| self.mul(&self.basis_vector(v), x)).collect();
        Matrix::from_fn(&self.field, self.dim(), self.dim(), |i, j| cols[j][i].clone())
    }

    /// Unit law and associativity on every basis triple.
    pub fn audit(&self) -> Report {
        let n = self.dim();
        let mut report = Report::new("structure constants");
        let unit_bad = (0..n).find(|&u| {
            let e = self.basis_vector(u);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        });
        report.push("unit", unit_bad.is_none(), unit_bad.map_or(String::new(), |u| format!("fails on {}", self.labels[u])));
        let mut assoc_bad = None;
        'outer: for u in 0..n {
            let eu = self.basis_vector(u);
            for v in 0..n {
                let uv = self.mul(&eu, &self.basis_vector(v));
                for w in 0..n {
                    let ew = self.basis_vector(w);
                    let lhs = self.mul(&uv, &ew);
                    let rhs = self.mul(&eu, &self.mul(&self.basis_vector(v), &ew));
                    if lhs != rhs {
                        assoc_bad = Some((u, v, w));
                        break 'outer;
                    }
                }
            }
        }
        report.push(
            "associativity",
            assoc_bad.is_none(),
            assoc_bad.map_or(String::new(), |(u, v, w)| {
                format!("({} {}) {} != {} ({} {})", self.labels[u], self.labels[v], self.labels[w], self.labels[u], self.labels[v], self.labels[w])
            }),
        );
        report
    }

    /// `Tr(L_{e_w})` for every basis element.
    fn basis_traces(&self) -> Vec<CycNum> {
        (0..self.dim())
            .map(|w| {
                (0..self.dim()).fold(self.field.zero(), |acc, x| {
                    self.table[w][x].iter().filter(|(y, _)| *y == x).fold(acc, |a, (_, c)| a.add(c))
                })
            })
            .collect()
    }
}

/// The Jacobson radical as the kernel of the trace form
/// `(a, b) ↦ Tr(L_{ab})` (characteristic zero).
pub fn radical_via_trace_form(a: &StructureAlgebra) -> Subspace {
    let t = a.basis_traces();
    let n = a.dim();
    let gram = Matrix::from_fn(&a.field, n, n, |u, v| {
        a.basis_product(u, v).iter().fold(a.field.zero(), |acc, (w, c)| acc.add(&c.mul(&t[*w])))
    });
    Subspace::span(&a.field, n, gram.null_space())
}

/// Radical dimension, two-sided ideal closure and the Wedderburn count
/// `dim A − dim rad A = Σ (dim L)²`.
pub fn radical_report(a: &StructureAlgebra, simples: &[SimpleModule]) -> (Subspace, Report) {
    let rad = radical_via_trace_form(a);
    let mut report = Report::new("radical");
    report.push("dimension", true, format!("dim rad = {}", rad.dim()));
    let closed = rad.basis().iter().all(|r| {
        (0..a.dim()).all(|u| {
            let e = a.basis_vector(u);
            rad.contains(&a.mul(&e, r)) && rad.contains(&a.mul(r, &e))
        })
    });
    report.push("two-sided ideal", closed, "");
    if !simples.is_empty() {
        let ss: usize = simples.iter().map(|s| s.dim * s.dim).sum();
        let ok = a.dim() - rad.dim() == ss;
        report.push("semisimple quotient", ok, format!("dim A - dim rad = {}, Σ (dim L)^2 = {ss}", a.dim() - rad.dim()));
    }
    (rad, report)
}

/// `rad^k` for `k = 0, 1, …` until it vanishes.
pub fn radical_filtration(a: &StructureAlgebra, rad: &Subspace) -> Vec<Subspace> {
    let mut layers = vec![Subspace::whole(&a.field, a.dim())];
    let mut current = rad.clone();
    while current.dim() > 0 {
        let next: Vec<Vec<CycNum>> = rad
            .basis()
            .iter()
            .flat_map(|r| current.basis().iter().map(move |s| a.mul(r, s)))
            .collect();
        let next = Subspace::span(&a.field, a.dim(), next);
        if next.dim() == current.dim() {
            break;
        }
        layers.push(current);
        current = next;
    }
    layers.push(current);
    layers
}

/// `dim Hom_A(U/W, L)` for submodules `W ⊆ U` of the left regular module,
/// from the linear conditions `f(W) = 0` and `f(g u) = ρ(g) f(u)` on
/// generators.
pub fn intertwiner_count(a: &StructureAlgebra, upper: &Subspace, lower: &Subspace, simple: &SimpleModule) -> Result<usize> {
    let m = upper.dim();
    let d = simple.dim;
    if m == 0 {
        return Ok(0);
    }
    let field = &a.field;
    // unknown (p, i): row p of f applied to upper basis vector i
    let var = |p: usize, i: usize| p * m + i;
    let mut rows: Vec<Vec<CycNum>> = Vec::new();
    for w in lower.basis() {
        let c = upper.coordinates(w).ok_or_else(|| Error::DimensionMismatch("filtration is not nested".into()))?;
        for p in 0..d {
            let mut row = vec![field.zero(); d * m];
            for (i, ci) in c.iter().enumerate() {
                row[var(p, i)] = ci.clone();
            }
            rows.push(row);
        }
    }
    for (_, g) in &a.generators {
        let eg = a.basis_vector(*g);
        let rho = &simple.basis_images[*g];
        for (i, b) in upper.basis().iter().enumerate() {
            let c = upper
                .coordinates(&a.mul(&eg, b))
                .ok_or_else(|| Error::DimensionMismatch("layer is not a left ideal".into()))?;
            // Σ_t c_t f(b_t) − ρ(g) f(b_i) = 0, row by row
            for p in 0..d {
                let mut row = vec![field.zero(); d * m];
                for (t, ct) in c.iter().enumerate() {
                    row[var(p, t)] = row[var(p, t)].add(ct);
                }
                for r in 0..d {
                    let x = rho.get(p, r);
                    if !x.is_zero() {
                        row[var(r, i)] = row[var(r, i)].sub(x);
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_fn(field, rows.len(), d * m, |i, j| rows[i][j].clone());
    Ok(d * m - sys.rank())
}

/// Checks a candidate Cartan matrix `C` (rows and columns indexed like
/// `simples`): the simples are representations, per-projective dimensions
/// `dim A e_r = Σ_q C_{qr} dim L_q` when primitive idempotents are supplied,
/// and composition multiplicities `[A : L_q] = Σ_r C_{qr} dim L_r`.
pub fn validate_cartan(
    a: &StructureAlgebra,
    simples: &[SimpleModule],
    candidate: &IntMatrix,
    idempotents: Option<&[Vec<CycNum>]>,
) -> Result<Report> {
    let k = simples.len();
    if candidate.len() != k || candidate.iter().any(|r| r.len() != k) {
        return Err(Error::DimensionMismatch(format!("candidate must be {k}x{k}")));
    }
    let mut report = Report::new("cartan");
    for s in simples {
        let bad = (0..a.dim()).flat_map(|u| (0..a.dim()).map(move |v| (u, v))).find(|&(u, v)| {
            let prod = s.basis_images[u].mul(&s.basis_images[v]);
            let via = a.basis_product(u, v).iter().fold(Matrix::zeros(&a.field, s.dim, s.dim), |acc, (w, c)| {
                acc.add(&s.basis_images[*w].scale(c))
            });
            !prod.eq_value(&via)
        });
        report.push(
            format!("{} is a representation", s.name),
            bad.is_none(),
            bad.map_or(String::new(), |(u, v)| format!("fails on {} {}", a.labels[u], a.labels[v])),
        );
    }

    if let Some(es) = idempotents {
        for (r, e) in es.iter().enumerate() {
            let idem = a.mul(e, e) == *e;
            let matches = simples.iter().enumerate().all(|(q, s)| {
                let img = s.image(e);
                if q == r {
                    img.eq_value(&Matrix::identity(&a.field, s.dim))
                } else {
                    img.eq_value(&Matrix::zeros(&a.field, s.dim, s.dim))
                }
            });
            let dim_p = a.right_matrix(e).rank();
            let expected: i64 = (0..k).map(|q| candidate[q][r] * simples[q].dim as i64).sum();
            report.push(
                format!("projective {}", simples[r].name),
                idem && matches && dim_p as i64 == expected,
                format!(
                    "dim A e = {dim_p}, Σ_q C_q{r} dim L_q = {expected}{}{}",
                    if idem { "" } else { ", not idempotent" },
                    if matches { "" } else { ", does not lift this simple" }
                ),
            );
        }
    }

    let (rad, _) = radical_report(a, simples);
    let layers = radical_filtration(a, &rad);
    let mut computed = vec![0usize; k];
    for w in layers.windows(2) {
        for (q, s) in simples.iter().enumerate() {
            computed[q] += intertwiner_count(a, &w[0], &w[1], s)?;
        }
    }
    let expected: Vec<i64> =
        (0..k).map(|q| (0..k).map(|r| candidate[q][r] * simples[r].dim as i64).sum()).collect();
    let ok = computed.iter().zip(&expected).all(|(&c, &e)| c as i64 == e);
    report.push(
        "composition multiplicities",
        ok,
        format!("[A : L_q] = {computed:?}, Σ_r C_qr dim L_r = {expected:?}"),
    );
    Ok(report)
}

/// Spectrum of an operator `T` with `T^order = 1`, read off from
/// `dim ker(T − ζ^k)`; the field must contain the `order`-th roots of unity.
pub fn finite_order_spectrum(t: &Matrix<CycNum>, order: u64) -> Result<SpectrumFactorization<CycNum>> {
    let field = t.ctx().clone();
    if !field.order().is_multiple_of(order) {
        return Err(Error::FieldMismatch { left: field.order(), right: order });
    }
    let n = t.rows();
    let mut power = Matrix::identity(&field, n);
    for _ in 0..order {
        power = power.mul(t);
    }
    if !power.eq_value(&Matrix::identity(&field, n)) {
        return Err(Error::BadParameters(format!("operator does not have order dividing {order}")));
    }
    let step = (field.order() / order) as i64;
    let items: Vec<(CycNum, u64)> = (0..order as i64)
        .map(|k| {
            let w = field.zeta_pow(k * step);
            let nullity = n - t.sub(&Matrix::identity(&field, n).scale(&w)).rank();
            (w, nullity as u64)
        })
        .filter(|(_, m)| *m > 0)
        .collect();
    let spec = SpectrumFactorization::from_items(items);
    if spec.total_degree != n as u64 {
        return Err(Error::BadParameters("operator is not diagonalizable over the field".into()));
    }
    Ok(spec)
}
