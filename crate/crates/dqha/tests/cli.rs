//! End-to-end tests of the command-line binary: exit codes, report
//! contents, and document round-trips.

use std::io::Write;
use std::process::{Command, Output};

fn dqha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dqha"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate_builtin_algebra_exits_zero() {
    let out = dqha(&["validate", "builtin:kz3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("pass  eq-1.3"));
}

#[test]
fn broken_beta_exits_one_and_names_the_axiom() {
    let out = dqha(&["validate", "builtin:kw_z2_broken_beta"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL  eq-1.6"), "{text}");
}

#[test]
fn malformed_document_exits_two() {
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    write!(tmp, "{{ definitely not json").unwrap();
    let out = dqha(&["validate", tmp.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = dqha(&["validate", "/does/not/exist.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_builtin_module() {
    let out = dqha(&["validate", "builtin:m_theta"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("pass  eq-2.9"));
}

#[test]
fn json_report_is_machine_readable() {
    let out = dqha(&["validate", "builtin:kw_z2", "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let items = v["report"]["items"].as_array().unwrap();
    assert!(items.iter().all(|i| i["pass"].as_bool().unwrap()));
    assert!(items.iter().any(|i| i["name"] == "eq-1.6"));
}

#[test]
fn derive_emits_twist_values() {
    let out = dqha(&["derive", "builtin:kw_z2", "--emit", "f,g"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("f(g, g) = -1"), "{text}");
}

#[test]
fn braid_check_passes() {
    let out = dqha(&["braid", "builtin:m_theta", "builtin:m_theta", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[5]"), "{text}");
    assert!(text.contains("pass  identity"), "{text}");
}

#[test]
fn field_override_rebuilds_builtin() {
    let out = dqha(&["validate", "builtin:kz3", "--field", "fp:7"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = dqha(&["validate", "builtin:kz3", "--field", "fp:6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn emitted_documents_round_trip() {
    for (args, label) in [
        (
            vec!["dual", "builtin:m_theta", "--hand", "left", "--report", "json"],
            "dual",
        ),
        (
            vec![
                "tensor",
                "builtin:h_yd_kw_z2",
                "builtin:h_yd_kw_z2",
                "--report",
                "json",
            ],
            "tensor",
        ),
        (
            vec!["convert", "builtin:m_theta_rl", "--to", "LL", "--report", "json"],
            "convert",
        ),
    ] {
        let out = dqha(&args);
        assert_eq!(out.status.code(), Some(0), "{label}: {}", stdout(&out));
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let mut tmp = tempfile::NamedTempFile::with_suffix(".json").unwrap();
        serde_json::to_writer(&mut tmp, &v["document"]).unwrap();
        tmp.flush().unwrap();
        let back = dqha(&["validate", tmp.path().to_str().unwrap()]);
        assert_eq!(back.status.code(), Some(0), "{label}: {}", stdout(&back));
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["report", "builtin:kw_z2", "--report", "json"],
        vec!["derive", "builtin:kw_z4_f13", "--emit", "pq,u"],
        vec!["dual", "builtin:h_yd_kw_z2_f13", "--hand", "right"],
    ] {
        let a = dqha(&args);
        let b = dqha(&args);
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
    }
}

#[test]
fn report_verb_covers_derived_structure() {
    let out = dqha(&["report", "builtin:kw_z2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for item in ["eq-1.3", "twist pair", "eq-2.5", "eq-3.2", "eq-3.3"] {
        assert!(text.contains(&format!("pass  {item}")), "{item}: {text}");
    }
}

#[test]
fn arity_cap_env_var_is_respected() {
    let out = Command::new(env!("CARGO_BIN_EXE_dqha"))
        .args(["report", "builtin:h_yd_kw_z2"])
        .env("DQHA_ARITY_CAP", "3")
        .output()
        .unwrap();
    // the regular-module action needs deep coproducts, so a cap of 3 fails
    assert_ne!(out.status.code(), Some(0));
}
