//! Dense matrices over any [`Field`], with exact Gaussian elimination.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::scalar::{Field, NumericScalar};

/// Nonnegative-integer matrices (action matrices, Cartan matrices) indexed
/// `[row][col]`.
pub type IntMatrix = Vec<Vec<i64>>;

pub fn int_identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0; m]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, &x) in row.iter().enumerate() {
            if x != 0 {
                for (j, &y) in b[k].iter().enumerate() {
                    out[i][j] += x * y;
                }
            }
        }
    }
    out
}

pub fn int_transpose(a: &IntMatrix) -> IntMatrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

#[derive(Clone)]
pub struct Matrix<F: Field> {
    ctx: F::Ctx,
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(ctx: &F::Ctx, rows: usize, cols: usize) -> Self {
        Matrix { ctx: ctx.clone(), rows, cols, data: vec![F::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &F::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, F::one(ctx));
        }
        m
    }

    pub fn from_fn(ctx: &F::Ctx, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { ctx: ctx.clone(), rows, cols, data }
    }

    pub fn from_int(ctx: &F::Ctx, a: &IntMatrix) -> Self {
        let cols = a.first().map_or(0, Vec::len);
        Self::from_fn(ctx, a.len(), cols, |i, j| F::from_i64(ctx, a[i][j]))
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        let mut out: Matrix<F> = Matrix::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shapes");
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(F::zero(&self.ctx), |acc, j| {
                    let a = self.get(i, j);
                    if a.is_zero() {
                        acc
                    } else {
                        acc.add(&a.mul(&v[j]))
                    }
                })
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shapes");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shapes");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        let data = self.data.iter().map(|a| a.mul(c)).collect();
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(&self.ctx, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(&self.ctx), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn eq_value(&self, other: &Matrix<F>) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.eq_value(b))
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(ctx: &F::Ctx, blocks: &[Matrix<F>], cols: usize) -> Matrix<F> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "column counts");
            data.extend(b.data.iter().cloned());
        }
        Matrix { ctx: ctx.clone(), rows, cols, data }
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows)
                .map(|i| (i, self.get(i, c).pivot_score()))
                .filter(|&(_, s)| s > 0.0)
                .max_by(|a, b| a.1.total_cmp(&b.1));
            let Some((p, _)) = best else { continue };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let pj = self.get(r, j);
                    if pj.is_zero() {
                        continue;
                    }
                    let v = self.get(i, j).sub(&factor.mul(pj));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// A basis of the right kernel `{v : A v = 0}`.
    pub fn null_space(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(&self.ctx); self.cols];
                v[f] = F::one(&self.ctx);
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = m.get(r, f).neg();
                }
                v
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        F::matrix_rank(self)
    }

    pub(crate) fn elimination_rank(&self) -> usize {
        self.clone().rref().len()
    }
}

impl Matrix<NumericScalar> {
    /// Rank by singular values above `tolerance × largest entry`.
    pub fn svd_rank(&self) -> usize {
        let tol = *self.ctx();
        let m = DMatrix::<Complex64>::from_fn(self.rows, self.cols, |i, j| self.get(i, j).value);
        let scale = m.iter().map(|z| z.norm()).fold(0.0_f64, f64::max);
        if scale == 0.0 {
            return 0;
        }
        m.singular_values().iter().filter(|&&s| s > tol * scale).count()
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<&F>> = (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{CycField, CycNum};

    #[test]
    fn null_space_of_rank_one() {
        let f = CycField::new(1).unwrap();
        let a: Matrix<CycNum> = Matrix::from_int(&f, &vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let ns = a.null_space();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn cyclotomic_kernel() {
        // (P - q I) for the 3-cycle P has kernel spanned by (1, q, q^2)-type vectors
        let f = CycField::new(3).unwrap();
        let p = vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]];
        let q = f.zeta_pow(1);
        let a = Matrix::<CycNum>::from_int(&f, &p).sub(&Matrix::identity(&f, 3).scale(&q));
        let ns = a.null_space();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn svd_rank_matches_elimination() {
        let a: Matrix<NumericScalar> = Matrix::from_int(&1e-9, &vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(a.svd_rank(), 1);
        assert_eq!(a.elimination_rank(), 1);
    }

    #[test]
    fn integer_helpers() {
        let p = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(int_mul(&p, &p), int_identity(2));
        assert_eq!(int_transpose(&vec![vec![1, 2]]), vec![vec![1], vec![2]]);
    }
}
