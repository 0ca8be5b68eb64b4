use crate::linalg::Matrix;
use crate::scalar::{CycField, CycNum, Field};

/// A subspace of `K^n` held as a reduced row echelon basis.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<CycNum>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: &CycField, ambient: usize, vectors: Vec<Vec<CycNum>>) -> Self {
        if vectors.is_empty() {
            return Subspace { ambient, rows: vec![], pivots: vec![] };
        }
        let mut m = Matrix::from_fn(field, vectors.len(), ambient, |i, j| vectors[i][j].clone());
        let pivots = m.rref();
        let rows = (0..pivots.len()).map(|i| (0..ambient).map(|j| m.get(i, j).clone()).collect()).collect();
        Subspace { ambient, rows, pivots }
    }

    pub fn whole(field: &CycField, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<CycNum>] {
        &self.rows
    }

    /// Coordinates in the echelon basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[CycNum]) -> Option<Vec<CycNum>> {
        let c: Vec<CycNum> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (ci, row) in c.iter().zip(&self.rows) {
            if ci.is_zero() {
                continue;
            }
            for (r, x) in rest.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r = r.sub(&ci.mul(x));
                }
            }
        }
        rest.iter().all(|x| x.is_zero()).then_some(c)
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        self.coordinates(v).is_some()
    }
}
