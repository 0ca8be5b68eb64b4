use super::{SimpleModule, StructureAlgebra};
use crate::error::{Error, Result};
use crate::families::gcd;
use crate::linalg::Matrix;
use crate::scalar::{CycField, CycNum, Field};

struct Pbw {
    ell: usize,
    field: CycField,
    s: i64,
}

impl Pbw {
    fn idx(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.ell + b) * self.ell + c
    }

    fn q(&self, k: i64) -> CycNum {
        self.field.zeta_pow(self.s * k)
    }

    fn add_to(&self, out: &mut [CycNum], u: usize, c: &CycNum) {
        out[u] = out[u].add(c);
    }

    /// `E · v`.
    fn left_e(&self, v: &[CycNum]) -> Vec<CycNum> {
        let l = self.ell;
        let mut out = vec![self.field.zero(); v.len()];
        for (u, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let (a, b, c) = (u / (l * l), (u / l) % l, u % l);
            if a + 1 < l {
                self.add_to(&mut out, self.idx(a + 1, b, c), x);
            }
        }
        out
    }

    /// `K^{±1} · v`, using `K E = q² E K`, `K F = q⁻² F K`.
    fn left_k(&self, v: &[CycNum], sign: i64) -> Vec<CycNum> {
        let l = self.ell;
        let mut out = vec![self.field.zero(); v.len()];
        for (u, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let (a, b, c) = (u / (l * l), (u / l) % l, u % l);
            let c2 = (c as i64 + sign).rem_euclid(l as i64) as usize;
            let coef = self.q(sign * 2 * (a as i64 - b as i64));
            self.add_to(&mut out, self.idx(a, b, c2), &x.mul(&coef));
        }
        out
    }

    /// `F E^a F^b K^c` in normal order, from
    /// `F E^a = E (F E^{a−1}) − E^{a−1} (q^{2(a−1)} K − q^{−2(a−1)} K⁻¹)/(q − q⁻¹)`.
    fn f_on_monomial(&self, a: usize, b: usize, c: usize) -> Vec<CycNum> {
        let l = self.ell;
        let mut out = vec![self.field.zero(); l * l * l];
        if a == 0 {
            if b + 1 < l {
                out[self.idx(0, b + 1, c)] = self.field.one();
            }
            return out;
        }
        let inner = self.f_on_monomial(a - 1, b, c);
        out = self.left_e(&inner);
        let denom = self.q(1).sub(&self.q(-1)).inv().expect("q is not ±1");
        let shift = 2 * (a as i64 - 1);
        // K F^b K^c = q^{−2b} F^b K^{c+1}, K⁻¹ F^b K^c = q^{2b} F^b K^{c−1}
        let up = self.q(shift - 2 * b as i64).mul(&denom);
        let down = self.q(-shift + 2 * b as i64).mul(&denom);
        let cu = (c + 1) % l;
        let cd = (c + l - 1) % l;
        self.add_to(&mut out, self.idx(a - 1, b, cu), &up.neg());
        self.add_to(&mut out, self.idx(a - 1, b, cd), &down);
        out
    }

    fn left_f(&self, v: &[CycNum]) -> Vec<CycNum> {
        let l = self.ell;
        let mut out = vec![self.field.zero(); v.len()];
        for (u, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let (a, b, c) = (u / (l * l), (u / l) % l, u % l);
            for (w, y) in self.f_on_monomial(a, b, c).iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                self.add_to(&mut out, w, &x.mul(y));
            }
        }
        out
    }
}

/// `u_q(sl2)` at `q = ζ_ℓ^s` on the basis `E^a F^b K^c` (index
/// `(aℓ + b)ℓ + c`) with `K E K⁻¹ = q² E`, `K F K⁻¹ = q⁻² F`,
/// `EF − FE = (K − K⁻¹)/(q − q⁻¹)`, `E^ℓ = F^ℓ = 0`, `K^ℓ = 1`.
pub fn uqsl2_algebra(ell: usize, s: i64) -> Result<StructureAlgebra> {
    if ell < 3 || ell.is_multiple_of(2) || gcd(s, ell as i64) != 1 {
        return Err(Error::BadParameters(format!("u_q(sl2) needs odd ell >= 3 and gcd(s, ell) = 1, got ell={ell}, s={s}")));
    }
    let field = CycField::new(ell as u64)?;
    let p = Pbw { ell, field: field.clone(), s };
    let n = ell * ell * ell;
    let labels = (0..n).map(|u| format!("E^{} F^{} K^{}", u / (ell * ell), (u / ell) % ell, u % ell)).collect();
    let mut table = vec![vec![Vec::new(); n]; n];
    for v in 0..n {
        let mut ev = vec![field.zero(); n];
        ev[v] = field.one();
        // K^c e_v, then F^b, then E^a
        let mut kc = vec![ev];
        for c in 1..ell {
            let next = p.left_k(&kc[c - 1], 1);
            kc.push(next);
        }
        for (c, kv) in kc.iter().enumerate() {
            let mut fb = kv.clone();
            for b in 0..ell {
                let mut ea = fb.clone();
                for a in 0..ell {
                    table[p.idx(a, b, c)][v] =
                        ea.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(w, x)| (w, x.clone())).collect();
                    ea = p.left_e(&ea);
                }
                fb = p.left_f(&fb);
            }
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let generators = vec![
        ("E".to_string(), p.idx(1, 0, 0)),
        ("F".to_string(), p.idx(0, 1, 0)),
        ("K".to_string(), p.idx(0, 0, 1)),
    ];
    StructureAlgebra::new(labels, field, table, unit, generators)
}

/// `L(λ)`, `λ = 0..ℓ−1`, of dimension `λ + 1`: `K v_i = q^{λ−2i} v_i`,
/// `F v_i = v_{i+1}`, `E v_i = [i][λ−i+1] v_{i−1}`. Named by dimension.
pub fn uqsl2_simples(alg: &StructureAlgebra, ell: usize, s: i64) -> Vec<SimpleModule> {
    let field = &alg.field;
    let q = |k: i64| field.zeta_pow(s * k);
    let qint = |k: i64| q(k).sub(&q(-k)).mul(&q(1).sub(&q(-1)).inv().expect("q is not ±1"));
    (0..ell)
        .map(|lam| {
            let d = lam + 1;
            let e = Matrix::from_fn(field, d, d, |r, c| {
                if c >= 1 && r == c - 1 {
                    qint(c as i64).mul(&qint((lam - c + 1) as i64))
                } else {
                    field.zero()
                }
            });
            let f = Matrix::from_fn(field, d, d, |r, c| if r == c + 1 { field.one() } else { field.zero() });
            let k = Matrix::from_fn(field, d, d, |r, c| if r == c { q(lam as i64 - 2 * c as i64) } else { field.zero() });
            let pow = |m: &Matrix<CycNum>, e: usize| (0..e).fold(Matrix::identity(field, d), |acc, _| acc.mul(m));
            let basis_images = (0..ell * ell * ell)
                .map(|u| pow(&e, u / (ell * ell)).mul(&pow(&f, (u / ell) % ell)).mul(&pow(&k, u % ell)))
                .collect();
            SimpleModule { name: format!("L{d}"), dim: d, basis_images }
        })
        .collect()
}
