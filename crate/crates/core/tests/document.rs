use antipode_core::document::SpecDocument;
use antipode_core::families::{fibonacci, taft_family, uqsl2_family, Lambda, MValue};
use antipode_core::grothendieck::verify_fusion;
use antipode_core::modcat::verify_module;
use antipode_core::Error;

#[test]
fn emitted_families_reload() {
    let fams = [taft_family(3, 1).unwrap(), uqsl2_family(5, 2, &Lambda::Symbolic).unwrap(), fibonacci().unwrap()];
    for fam in fams {
        let doc = SpecDocument::from_family(&fam);
        let json = doc.to_json();
        let back = SpecDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        let loaded = back.load().unwrap();
        assert_eq!(loaded.fusion.constants, fam.fusion.constants);
        assert_eq!(loaded.fusion.dims, fam.fusion.dims);
        assert_eq!(loaded.module, fam.module);
        assert!(verify_fusion(&loaded.fusion, false).passed());
        assert!(verify_module(&loaded.fusion, &loaded.module).passed());
        match (loaded.m.unwrap(), &fam.m) {
            (MValue::Exact(a), MValue::Exact(b)) => assert_eq!(&a, b),
            (MValue::Symbolic(a), MValue::Symbolic(b)) => assert_eq!(&a, b),
            other => panic!("m changed kind: {other:?}"),
        }
    }
}

#[test]
fn syntax_errors_carry_positions() {
    let err = SpecDocument::from_json("{\n  \"scalar_backend\": ,\n}").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
}

#[test]
fn undeclared_labels_are_named() {
    let fam = taft_family(2, 1).unwrap();
    let mut doc = SpecDocument::from_family(&fam);
    doc.category.fusion[0].2 = "7".into();
    match doc.load() {
        Err(Error::Schema(msg)) => assert!(msg.contains("'7'"), "{msg}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn literal_errors_carry_columns() {
    let fam = taft_family(2, 1).unwrap();
    let mut doc = SpecDocument::from_family(&fam);
    doc.m_vector = Some(vec!["1".into(), "1 + ?".into()]);
    match doc.load() {
        Err(Error::Parse { column, message, .. }) => {
            assert_eq!(column, 5);
            assert!(message.starts_with("m_vector[1]"), "{message}");
        }
        other => panic!("{other:?}"),
    }
}
