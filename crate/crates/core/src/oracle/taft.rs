use super::{SimpleModule, StructureAlgebra};
use crate::error::{Error, Result};
use crate::families::gcd;
use crate::linalg::Matrix;
use crate::scalar::{CycField, CycNum, Field};

/// `T_n = ⟨g, x | g^n = 1, x^n = 0, g x g⁻¹ = q x⟩` on the basis `g^a x^b`
/// (index `a n + b`), with the antipode `S(g) = g⁻¹`, `S(x) = −x g⁻¹` as a
/// matrix (column `u` = `S(e_u)`).
pub fn taft_algebra(n: usize, s: i64) -> Result<(StructureAlgebra, Matrix<CycNum>)> {
    if n < 2 || gcd(s, n as i64) != 1 {
        return Err(Error::BadParameters(format!("Taft algebra needs n >= 2 and gcd(s, n) = 1, got n={n}, s={s}")));
    }
    let field = CycField::new(n as u64)?;
    let q = |k: i64| field.zeta_pow(s * k);
    let idx = |a: usize, b: usize| a * n + b;
    let labels = (0..n).flat_map(|a| (0..n).map(move |b| format!("g^{a} x^{b}"))).collect();
    // (g^a x^b)(g^c x^d) = q^{-bc} g^{a+c} x^{b+d}, from x g = q⁻¹ g x
    let mut table = vec![vec![Vec::new(); n * n]; n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if b + d < n {
                        table[idx(a, b)][idx(c, d)] = vec![(idx((a + c) % n, b + d), q(-((b * c) as i64)))];
                    }
                }
            }
        }
    }
    let mut unit = vec![field.zero(); n * n];
    unit[0] = field.one();
    let generators = vec![("g".to_string(), idx(1, 0)), ("x".to_string(), idx(0, 1))];
    let alg = StructureAlgebra::new(labels, field.clone(), table, unit, generators)?;

    // S(g^a x^b) = S(x)^b S(g)^a = (−x g⁻¹)^b g^{−a}
    let g_inv = alg.basis_vector(idx(n - 1, 0));
    let s_x: Vec<CycNum> = alg.mul(&alg.basis_vector(idx(0, 1)), &g_inv).iter().map(|c| c.neg()).collect();
    let mut cols = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut v = alg.unit.clone();
            for _ in 0..b {
                v = alg.mul(&v, &s_x);
            }
            v = alg.mul(&v, &alg.basis_vector(idx((n - a) % n, 0)));
            cols.push(v);
        }
    }
    let antipode = Matrix::from_fn(&field, n * n, n * n, |i, j| cols[j][i].clone());
    Ok((alg, antipode))
}

/// The one-dimensional simples `χ_r`: `g ↦ q^r`, `x ↦ 0`.
pub fn taft_simples(alg: &StructureAlgebra, n: usize, s: i64) -> Vec<SimpleModule> {
    let field = &alg.field;
    (0..n)
        .map(|r| {
            let basis_images = (0..n * n)
                .map(|u| {
                    let (a, b) = (u / n, u % n);
                    let v = if b == 0 { field.zeta_pow(s * (r * a) as i64) } else { field.zero() };
                    Matrix::from_fn(field, 1, 1, |_, _| v.clone())
                })
                .collect();
            SimpleModule { name: format!("chi_{r}"), dim: 1, basis_images }
        })
        .collect()
}

/// `e_r = (1/n) Σ_c q^{−rc} g^c`, which acts as 1 on `χ_r` and 0 on the
/// other simples.
pub fn taft_idempotents(alg: &StructureAlgebra, n: usize, s: i64) -> Vec<Vec<CycNum>> {
    let field = &alg.field;
    let inv_n = field.integer(n as i64).inv().expect("n is nonzero");
    (0..n)
        .map(|r| {
            let mut e = vec![field.zero(); n * n];
            for c in 0..n {
                e[c * n] = field.zeta_pow(-s * (r * c) as i64).mul(&inv_n);
            }
            e
        })
        .collect()
}
