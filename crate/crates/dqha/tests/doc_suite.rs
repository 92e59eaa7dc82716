//! JSON document round-trips for algebras and modules.

use dqha::algebra::same_algebra;
use dqha::builders::{builtin_algebra, builtin_module, REGISTERED_ALGEBRAS, REGISTERED_MODULES};
use dqha::doc::{document_kind, AlgebraDocument, ModuleDocument};
use dqha::DqhaError;
use std::path::Path;

#[test]
fn algebra_documents_round_trip() {
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        let doc = AlgebraDocument::from_algebra(&alg);
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let parsed: AlgebraDocument = serde_json::from_str(&text).unwrap();
        let rebuilt = parsed.build().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(same_algebra(&alg, &rebuilt), "{name}");
        // emission is deterministic
        let again = serde_json::to_string_pretty(&AlgebraDocument::from_algebra(&rebuilt)).unwrap();
        assert_eq!(text, again, "{name}");
    }
}

#[test]
fn module_documents_round_trip() {
    for name in REGISTERED_MODULES {
        let m = builtin_module(name).unwrap();
        let doc = ModuleDocument::from_module(&m);
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let parsed: ModuleDocument = serde_json::from_str(&text).unwrap();
        let rebuilt = parsed.build(Path::new(".")).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(m.flavor(), rebuilt.flavor(), "{name}");
        assert_eq!(m.dim(), rebuilt.dim(), "{name}");
        assert!(same_algebra(m.alg(), rebuilt.alg()), "{name}");
        assert_eq!(m.action_triples(), rebuilt.action_triples(), "{name}");
        assert_eq!(
            m.comodule().coaction_triples(),
            rebuilt.comodule().coaction_triples(),
            "{name}"
        );
        let again = serde_json::to_string_pretty(&ModuleDocument::from_module(&rebuilt)).unwrap();
        assert_eq!(text, again, "{name}");
    }
}

#[test]
fn document_kind_detection() {
    let alg = builtin_algebra("kz3").unwrap();
    let alg_text = serde_json::to_string(&AlgebraDocument::from_algebra(&alg)).unwrap();
    assert_eq!(document_kind(&alg_text).unwrap(), "algebra");
    let m = builtin_module("m_theta").unwrap();
    let mod_text = serde_json::to_string(&ModuleDocument::from_module(&m)).unwrap();
    assert_eq!(document_kind(&mod_text).unwrap(), "module");
    assert!(matches!(
        document_kind("{not json"),
        Err(DqhaError::ParseError(_))
    ));
}

#[test]
fn malformed_documents_are_rejected() {
    let bad: std::result::Result<AlgebraDocument, _> = serde_json::from_str("{\"field\": \"q\"}");
    assert!(bad.is_err());
    // a structurally complete document with inconsistent shapes fails build
    let alg = builtin_algebra("kz3").unwrap();
    let mut doc = AlgebraDocument::from_algebra(&alg);
    doc.dimension = 2;
    assert!(doc.build().is_err());
}

#[test]
fn scalar_field_tags() {
    use dqha::doc::parse_field;
    use dqha::scalar::ScalarField;
    assert_eq!(parse_field("q").unwrap(), ScalarField::Rationals);
    assert_eq!(parse_field("fp:13").unwrap(), ScalarField::prime(13).unwrap());
    assert!(parse_field("fp:12").is_err());
    assert!(parse_field("real").is_err());
}
