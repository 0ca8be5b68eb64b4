//! Chebyshev polynomials of the second kind in the normalization
//! `P_j(2 cos θ) = sin(jθ) / sin θ`, and the ring `Z[x]/(Q)` they span.

/// Integer polynomial, constant term first.
pub type IntPoly = Vec<i64>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

pub fn poly_add(a: &[i64], b: &[i64]) -> IntPoly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect())
}

pub fn poly_scale(a: &[i64], c: i64) -> IntPoly {
    trim(a.iter().map(|x| x * c).collect())
}

pub fn poly_mul(a: &[i64], b: &[i64]) -> IntPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// `x · p`.
fn shift(p: &[i64]) -> IntPoly {
    let mut out = vec![0];
    out.extend_from_slice(p);
    trim(out)
}

/// Remainder of `a` modulo a monic `m`.
pub fn poly_rem_monic(a: &[i64], m: &[i64]) -> IntPoly {
    assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm && r.len() > 1 {
        let lead = *r.last().unwrap();
        let off = r.len() - 1 - dm;
        for (k, c) in m.iter().enumerate() {
            r[off + k] -= lead * c;
        }
        r.pop();
        r = trim(r);
        if r.len() <= dm {
            break;
        }
    }
    trim(r)
}

pub fn poly_eval(p: &[i64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
}

/// `P_j` for `j ≥ 1`: `P_1 = 1`, `P_2 = x`, `P_{j+1} = x P_j − P_{j−1}`.
pub fn chebyshev(j: usize) -> IntPoly {
    assert!(j >= 1, "Chebyshev index starts at 1");
    let (mut prev, mut cur) = (vec![0], vec![1]);
    for _ in 1..j {
        let next = poly_add(&shift(&cur), &poly_scale(&prev, -1));
        prev = cur;
        cur = next;
    }
    cur
}

/// `Q = x P_ℓ − 2 P_{ℓ−1} − 2`, the relation of `Gr(Rep u_q(sl2))`.
pub fn ring_relation(ell: usize) -> IntPoly {
    let a = shift(&chebyshev(ell));
    let b = poly_scale(&chebyshev(ell - 1), -2);
    poly_add(&poly_add(&a, &b), &[-2])
}

/// Coordinates of a polynomial of degree `< n` in the basis `P_1..P_n`
/// (each `P_j` is monic of degree `j − 1`).
pub fn in_chebyshev_basis(p: &[i64], n: usize) -> Vec<i64> {
    let basis: Vec<IntPoly> = (1..=n).map(chebyshev).collect();
    let mut r = p.to_vec();
    r.resize(n, 0);
    let mut coords = vec![0; n];
    for j in (0..n).rev() {
        let c = r[j];
        if c != 0 {
            coords[j] = c;
            for (k, b) in basis[j].iter().enumerate() {
                r[k] -= c * b;
            }
        }
    }
    coords
}
