use antipode_core::families::{
    fibonacci, group_preset, taft_family, uqg_family, uqsl2_expected, uqsl2_family, vecg_family, Lambda, MValue,
    RootSystemData, TorusPoint, UqgSpectrum,
};
use antipode_core::grothendieck::{q_matrix, verify_fusion};
use antipode_core::modcat::{dimension_identity, verify_module};
use antipode_core::pivotalization::{char_poly_pivotalized, from_matched_pivotal, signed};
use antipode_core::scalar::{CycField, CycNum, Field};
use antipode_core::spectrum::{
    char_poly_s2, dimension_eigenspace, lambda_limit, m_bar, power_of_polynomial, quadruples, render_polynomial,
    LambdaLimit,
};
use antipode_core::Error;

fn exact(m: &MValue) -> &[CycNum] {
    match m {
        MValue::Exact(v) => v,
        other => panic!("expected an exact m-vector, got {other:?}"),
    }
}

#[test]
fn taft_three_has_equal_multiplicities() {
    let fam = taft_family(3, 1).unwrap();
    assert!(verify_fusion(&fam.fusion, true).passed());
    assert!(verify_module(&fam.fusion, &fam.module).passed());
    let spec = char_poly_s2(&fam.fusion, &fam.module, exact(&fam.m)).unwrap();
    assert_eq!(spec.total_degree, 81);
    assert_eq!(spec.factors.len(), 3);
    for t in 0..3 {
        assert_eq!(spec.multiplicity_of(&fam.field.zeta_pow(t)), 27);
    }
    assert!(quadruples(&fam.fusion, &fam.module).iter().all(|q| q.4 == 1));
}

#[test]
fn uqsl2_quadruples_all_have_weight_ell() {
    for ell in [3, 5] {
        let fam = uqsl2_family(ell, 1, &Lambda::Symbolic).unwrap();
        assert!(verify_fusion(&fam.fusion, false).passed());
        assert!(!verify_fusion(&fam.fusion, true).passed());
        assert!(verify_module(&fam.fusion, &fam.module).passed());
        let quads = quadruples(&fam.fusion, &fam.module);
        assert_eq!(quads.len(), ell.pow(4));
        assert!(quads.iter().all(|q| q.4 == ell as u64));
    }
}

#[test]
fn uqsl2_symbolic_matches_product_formula() {
    let fam = uqsl2_family(3, 1, &Lambda::Symbolic).unwrap();
    let MValue::Symbolic(m) = &fam.m else { panic!() };
    let spec = char_poly_s2(&fam.fusion, &fam.module, m).unwrap();
    assert_eq!(spec, uqsl2_expected(3, 1).unwrap());
    assert_eq!(spec.total_degree, 243);
    let zero = lambda_limit(&spec, LambdaLimit::Zero).unwrap();
    let (p, e) = power_of_polynomial(&zero).unwrap();
    assert_eq!((render_polynomial(&p), e), ("z^3 - 1".to_string(), 81));
}

#[test]
fn uqsl2_dimension_eigenspace_has_dimension_two() {
    let fam = uqsl2_family(3, 1, &Lambda::Symbolic).unwrap();
    let (_, k) = dimension_eigenspace(&fam.fusion, &fam.module, &fam.field).unwrap();
    assert_eq!(k, 2);
}

#[test]
fn uqsl2_q_element_is_invertible_at_ell_three() {
    let fam = uqsl2_family(3, 1, &Lambda::Symbolic).unwrap();
    let q = q_matrix(&fam.fusion, &fam.module.action, &fam.field).unwrap();
    assert_eq!(q.rank(), 3);
}

#[test]
fn fibonacci_spectrum() {
    let fam = fibonacci().unwrap();
    let m = exact(&fam.m);
    let spec = char_poly_s2(&fam.fusion, &fam.module, m).unwrap();
    let phi = m[1].clone();
    let f = &fam.field;
    let mult = |v: CycNum| spec.multiplicity_of(&v);
    assert_eq!(spec.total_degree, 13);
    assert_eq!(mult(f.one()), 7);
    assert_eq!(mult(phi.clone()), 2);
    assert_eq!(mult(phi.inv().unwrap()), 2);
    assert_eq!(mult(phi.mul(&phi)), 1);
    assert_eq!(mult(phi.mul(&phi).inv().unwrap()), 1);
    assert_eq!(dimension_identity(&fam.fusion, &fam.module), 13);
}

#[test]
fn vec_z2_with_sign_character_is_involutive() {
    let g = group_preset("Z2").unwrap();
    let f = CycField::new(1).unwrap();
    let fam = vecg_family(&g, &[f.one(), f.integer(-1)], &[0]).unwrap();
    let m = exact(&fam.m);
    let spec = char_poly_s2(&fam.fusion, &fam.module, m).unwrap();
    assert_eq!(spec.total_degree, 8);
    assert_eq!(spec.multiplicity_of(&f.one()), 8);
    let p = from_matched_pivotal(&fam.fusion, &fam.module, m, &fam.field).unwrap();
    let piv = char_poly_pivotalized(&p, &fam.module).unwrap();
    assert_eq!(piv, spec.try_map(signed).unwrap());
}

#[test]
fn vecg_nontrivial_on_subgroup_is_unmatched() {
    let g = group_preset("Z2").unwrap();
    let f = CycField::new(1).unwrap();
    let fam = vecg_family(&g, &[f.one(), f.integer(-1)], &[0, 1]).unwrap();
    assert!(matches!(fam.m, MValue::Unmatched(_)), "{:?}", fam.m);
    assert_eq!(dimension_eigenspace(&fam.fusion, &fam.module, &fam.field).unwrap_err(), Error::EmptyEigenspace);
}

#[test]
fn s3_on_cosets_of_a_transposition() {
    let g = group_preset("S3").unwrap();
    let f = CycField::new(1).unwrap();
    let sign: Vec<CycNum> = [1, -1, -1, -1, 1, 1].iter().map(|&x| f.integer(x)).collect();
    let fam = vecg_family(&g, &sign, &[0, 4, 5]).unwrap();
    assert_eq!(fam.module.size(), 2);
    let m = exact(&fam.m);
    let mb = m_bar(&fam.fusion, &fam.module, m, &fam.field).unwrap();
    assert_eq!(mb.len(), 2);
    let spec = char_poly_s2(&fam.fusion, &fam.module, m).unwrap();
    assert_eq!(spec.total_degree as u128, dimension_identity(&fam.fusion, &fam.module));
}

#[test]
fn a1_reproduces_uqsl2() {
    for ell in [3, 5] {
        let rs = RootSystemData::type_a(1).unwrap();
        let UqgSpectrum::Symbolic(s) = uqg_family(&rs, ell, 1, &TorusPoint::Symbolic).unwrap() else { panic!() };
        assert_eq!(s, uqsl2_expected(ell, 1).unwrap());
    }
}

#[test]
fn a2_numeric_total_degree() {
    let rs = RootSystemData::type_a(2).unwrap();
    let torus = TorusPoint::Numeric(vec![num_complex::Complex64::new(0.37, 0.21), num_complex::Complex64::new(1.3, -0.4)], 1e-9);
    let s = uqg_family(&rs, 5, 1, &torus).unwrap();
    assert_eq!(s.total_degree(), 5u64.pow(12));
}
