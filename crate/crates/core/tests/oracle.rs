use antipode_core::oracle::{
    finite_order_spectrum, radical_report, radical_via_trace_form, taft_algebra, taft_idempotents, taft_simples,
    uqsl2_algebra, uqsl2_simples, validate_cartan,
};
use antipode_core::scalar::Field;

#[test]
fn taft_algebra_is_associative() {
    for n in [2, 3] {
        let (a, _) = taft_algebra(n, 1).unwrap();
        assert_eq!(a.dim(), n * n);
        assert!(a.audit().passed(), "{}", a.audit());
    }
}

#[test]
fn taft_radical() {
    let (a, _) = taft_algebra(2, 1).unwrap();
    let simples = taft_simples(&a, 2, 1);
    let (rad, report) = radical_report(&a, &simples);
    assert_eq!(rad.dim(), 2);
    assert!(report.passed(), "{report}");
}

#[test]
fn taft_squared_antipode() {
    let (a, s) = taft_algebra(3, 1).unwrap();
    let spec = finite_order_spectrum(&s.mul(&s), 3).unwrap();
    assert_eq!(spec.factors.len(), 3);
    for t in 0..3 {
        assert_eq!(spec.multiplicity_of(&a.field.zeta_pow(t)), 3);
    }
}

#[test]
fn taft_cartan_all_ones() {
    let (a, _) = taft_algebra(3, 1).unwrap();
    let simples = taft_simples(&a, 3, 1);
    let e = taft_idempotents(&a, 3, 1);
    let ok = validate_cartan(&a, &simples, &vec![vec![1; 3]; 3], Some(&e)).unwrap();
    assert!(ok.passed(), "{ok}");
    let bad = validate_cartan(&a, &simples, &vec![vec![2, 1, 1], vec![1, 1, 1], vec![1, 1, 1]], Some(&e)).unwrap();
    assert!(!bad.passed());
}

#[test]
fn uqsl2_algebra_relations() {
    let a = uqsl2_algebra(3, 1).unwrap();
    assert_eq!(a.dim(), 27);
    assert!(a.audit().passed(), "{}", a.audit());
    let f = &a.field;
    let (e, fv, k) = (a.basis_vector(9), a.basis_vector(3), a.basis_vector(1));
    let k_inv = a.basis_vector(2);
    let ef = a.mul(&e, &fv);
    let fe = a.mul(&fv, &e);
    let denom = f.zeta_pow(1).sub(&f.zeta_pow(-1)).inv().unwrap();
    let lhs: Vec<_> = ef.iter().zip(&fe).map(|(x, y)| x.sub(y)).collect();
    let rhs: Vec<_> = k.iter().zip(&k_inv).map(|(x, y)| x.sub(y).mul(&denom)).collect();
    assert_eq!(lhs, rhs);
}

#[test]
fn uqsl2_radical_and_cartan() {
    let a = uqsl2_algebra(3, 1).unwrap();
    assert_eq!(radical_via_trace_form(&a).dim(), 13);
    let simples = uqsl2_simples(&a, 3, 1);
    let good = validate_cartan(&a, &simples, &vec![vec![2, 2, 0], vec![2, 2, 0], vec![0, 0, 1]], None).unwrap();
    assert!(good.passed(), "{good}");
    let bad = validate_cartan(&a, &simples, &vec![vec![4, 0, 0], vec![0, 2, 0], vec![0, 0, 1]], None).unwrap();
    assert!(!bad.passed());
}
