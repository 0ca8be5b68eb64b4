use antipode_core::families::{fibonacci, group_preset, taft_family, vecg_family, FamilyInstance, MValue};
use antipode_core::modcat::dimension_identity;
use antipode_core::scalar::{factored_combine, CombineOp, CycField, CycNum, FactoredValue, Field, Q};
use antipode_core::spectrum::{char_poly_s2, pivotal_twist_invariance, quadruples};
use num_complex::Complex64;
use proptest::prelude::*;

fn exact(fam: &FamilyInstance) -> &[CycNum] {
    match &fam.m {
        MValue::Exact(m) => m,
        other => panic!("expected an exact m-vector, got {other:?}"),
    }
}

fn cyc(field: &CycField, coeffs: &[(i64, i64)]) -> CycNum {
    let qs = coeffs.iter().map(|&(a, b)| Q::new(a.into(), b.into())).collect();
    field.from_power_coeffs(qs)
}

fn coeff_strategy(len: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-20i64..20, 1i64..6), len)
}

/// `Vec_{Z/n}` acting on `Z/n / H` with `H` of order `h`, and `κ(g) = ζ_n^{kg}`
/// restricted to `k` with `κ|_H = 1`.
fn cyclic_instance(n: usize, h: usize, k: usize) -> FamilyInstance {
    let g = group_preset(&format!("Z{n}")).unwrap();
    let f = CycField::new(n as u64).unwrap();
    let step = n / h;
    let sub: Vec<usize> = (0..h).map(|i| i * step).collect();
    let k = (k * h) % n;
    let kappa: Vec<CycNum> = (0..n).map(|x| f.zeta_pow((k * x) as i64)).collect();
    vecg_family(&g, &kappa, &sub).unwrap()
}

fn cyclic_params() -> impl Strategy<Value = (usize, usize, usize)> {
    (2usize..7).prop_flat_map(|n| {
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        (Just(n), prop::sample::select(divisors), 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in coeff_strategy(4), b in coeff_strategy(4)) {
        let f = CycField::new(5).unwrap();
        let (x, y) = (cyc(&f, &a), cyc(&f, &b));
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        prop_assert_eq!(x.add(&y).conj(), x.conj().add(&y.conj()));
    }

    #[test]
    fn field_inverse_round_trips(a in coeff_strategy(6)) {
        let f = CycField::new(7).unwrap();
        let x = cyc(&f, &a);
        prop_assume!(!x.is_zero());
        prop_assert!(x.mul(&x.inv().unwrap()).is_one());
    }

    #[test]
    fn canonical_form_evaluates_like_the_product(
        atoms in prop::collection::vec((0usize..5, 0i64..5, any::<bool>()), 1..6),
        re in 0.2f64..1.5,
        im in -1.0f64..1.0,
    ) {
        let roots = [[1, 0], [0, 1], [1, 1], [1, -1], [2, 1]];
        let f = CycField::new(5).unwrap();
        let point = [Complex64::new(re, im), Complex64::new(im, re)];
        let mut acc = FactoredValue::one(&f, 2);
        let mut expected = Complex64::new(1.0, 0.0);
        for (alpha, e, divide) in atoms {
            let a = FactoredValue::atom(&f, roots[alpha].to_vec(), e).unwrap();
            let v = a.evaluate(&point);
            prop_assume!(v.norm() > 1e-6);
            if divide {
                acc = factored_combine(&acc, &a, CombineOp::Div);
                expected /= v;
            } else {
                acc = factored_combine(&acc, &a, CombineOp::Mul);
                expected *= v;
            }
        }
        let got = acc.evaluate(&point);
        prop_assert!((got - expected).norm() <= 1e-8 * expected.norm().max(1.0), "{} vs {}", got, expected);
    }

    #[test]
    fn spectrum_is_invariant_under_rescaling_m(a in coeff_strategy(4), which in 0usize..2) {
        let fam = if which == 0 { taft_family(5, 2).unwrap() } else { fibonacci().unwrap() };
        let c = cyc(&fam.field, &a[..fam.field.degree()]);
        prop_assume!(!c.is_zero());
        let m = exact(&fam);
        let scaled: Vec<CycNum> = m.iter().map(|x| x.mul(&c)).collect();
        let before = char_poly_s2(&fam.fusion, &fam.module, m).unwrap();
        prop_assert_eq!(char_poly_s2(&fam.fusion, &fam.module, &scaled).unwrap(), before);
    }

    #[test]
    fn cyclic_pointed_invariants((n, h, k) in cyclic_params()) {
        let fam = cyclic_instance(n, h, k);
        let spec = char_poly_s2(&fam.fusion, &fam.module, exact(&fam)).unwrap();
        prop_assert_eq!(spec.total_degree as u128, dimension_identity(&fam.fusion, &fam.module));
        let diag: u64 = quadruples(&fam.fusion, &fam.module)
            .iter()
            .filter(|q| q.0 == q.1 && q.2 == q.3)
            .map(|q| q.4)
            .sum();
        prop_assert!(spec.multiplicity_of(&fam.field.one()) >= diag);
    }

    #[test]
    fn taft_twist_by_a_unit_is_invisible(n in prop::sample::select(vec![3usize, 5, 7]), t in 0usize..7) {
        prop_assume!(num_integer::gcd(1 + t, n) == 1);
        let fam = taft_family(n, 1).unwrap();
        let b: Vec<CycNum> = (0..n).map(|a| fam.field.zeta_pow((t * a) as i64)).collect();
        prop_assert!(pivotal_twist_invariance(&fam.fusion, &fam.module, exact(&fam), &b, &b).unwrap());
    }
}
