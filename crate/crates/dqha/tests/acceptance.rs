//! Acceptance checklist. Each numbered criterion prints a single
//! `criterion N: pass|FAIL` line; the test fails if any criterion fails.

use std::process::Command;
use std::sync::Arc;

use dqha::algebra::check_dqha_axioms;
use dqha::builders::{
    builtin_algebra, builtin_algebra_with_field, builtin_module, kw_z2_broken_beta, m_theta,
    m_theta_rl, one_dim_yd, small_comodules, trivial_ll, REGISTERED_ALGEBRAS,
    REGISTERED_MODULES,
};
use dqha::canonical::{check_pq_identities, CanonicalElements};
use dqha::comodule::ComoduleSide;
use dqha::duals::{
    check_lemma_32, check_snake, check_snake_yd, check_yd_morphisms, comodule_dual,
    lemma_33_lhs, yd_dual, Handedness,
};
use dqha::linalg::Vector;
use dqha::scalar::ScalarField;
use dqha::yd::{
    braiding, braiding_inverse, check_alt_axiom, check_braided_functor_t,
    check_center_condition, check_yd, convert_flavor, h_as_yd, tensor_yd, Flavor,
    YetterDrinfeldModule,
};
use dqha::{DualQuasiHopfAlgebra, Result};

fn pool() -> Vec<(&'static str, Arc<DualQuasiHopfAlgebra>)> {
    REGISTERED_ALGEBRAS
        .iter()
        .map(|n| (*n, builtin_algebra(n).unwrap()))
        .collect()
}

fn criterion_1() -> Result<()> {
    for (name, alg) in pool() {
        let report = check_dqha_axioms(&alg);
        if !report.passed() {
            return Err(dqha::DqhaError::ValidationFailed(format!("{name}: {report}")));
        }
    }
    let broken = kw_z2_broken_beta()?;
    let report = check_dqha_axioms(&broken);
    let failed: Vec<&str> = report.failures().map(|i| i.name.as_str()).collect();
    if failed != ["eq-1.6"] {
        return Err(dqha::DqhaError::ValidationFailed(format!(
            "broken beta failed {failed:?}, expected exactly eq-1.6"
        )));
    }
    Ok(())
}

fn criterion_2() -> Result<()> {
    // derivation itself validates the twist equations on all tuples
    for (name, alg) in pool() {
        alg.twist_pair().map_err(|e| {
            dqha::DqhaError::ValidationFailed(format!("{name}: {e}"))
        })?;
    }
    let alg = builtin_algebra("kw_z2")?;
    let pair = alg.twist_pair()?;
    if *pair.f.value(&[1, 1]) != alg.field().from_i64(-1) {
        return Err(dqha::DqhaError::ValidationFailed("f(g,g) != -1".into()));
    }
    Ok(())
}

fn criterion_3() -> Result<()> {
    for (name, alg) in pool() {
        let report = check_pq_identities(&alg)?;
        if !report.passed() {
            return Err(dqha::DqhaError::ValidationFailed(format!("{name}: {report}")));
        }
    }
    // Hopf degeneration: all five canonical forms are counit products
    for name in ["kz3", "kdualz2"] {
        let alg = builtin_algebra(name)?;
        let e = CanonicalElements::compute(&alg)?;
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let eps = alg.eps_basis(a) * alg.eps_basis(b);
                for form in [&e.p_r, &e.q_r, &e.p_l, &e.q_l, &e.u] {
                    if *form.value(&[a, b]) != eps {
                        return Err(dqha::DqhaError::ValidationFailed(format!(
                            "{name}: canonical element differs from counit at ({a},{b})"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Result<()> {
    // h_as_yd cross-checks its two action formulas entrywise on every
    // algebra and fails construction if they disagree
    for (name, alg) in pool() {
        let m = h_as_yd(&alg).map_err(|e| {
            dqha::DqhaError::ValidationFailed(format!("{name}: {e}"))
        })?;
        let direct = check_yd(&m);
        let alt = check_alt_axiom(&m)?;
        if !direct.passed() || !alt.passed() {
            return Err(dqha::DqhaError::ValidationFailed(format!(
                "{name}: {direct}{alt}"
            )));
        }
    }
    let alg = builtin_algebra("kw_z2")?;
    let m = h_as_yd(&alg)?;
    let mut minus_e = Vector::unit(alg.field(), 2, 0);
    minus_e.scale(&alg.field().from_i64(-1));
    if m.act_on_basis(1, 1) != minus_e {
        return Err(dqha::DqhaError::ValidationFailed(
            "g acting on g is not -e".into(),
        ));
    }
    Ok(())
}

fn criterion_5() -> Result<()> {
    for (name, alg) in pool() {
        let mut mods = vec![h_as_yd(&alg)?, trivial_ll(&alg)?];
        if name == "kw_z2_f13" {
            mods.push(m_theta()?.with_algebra(alg.clone())?);
        }
        let h = h_as_yd(&alg)?;
        mods.push(tensor_yd(&h, &h)?); // up to dimension 16 on k_w[Z4]
        for m in &mods {
            for n in &mods {
                let c = braiding(m, n)?;
                let ci = braiding_inverse(m, n)?;
                if !c.compose(&ci).is_identity() || !ci.compose(&c).is_identity() {
                    return Err(dqha::DqhaError::ValidationFailed(format!(
                        "{name}: braiding not invertible"
                    )));
                }
            }
        }
    }
    Ok(())
}

fn criterion_6() -> Result<()> {
    for name in REGISTERED_MODULES {
        let m = builtin_module(name)?;
        let pool = small_comodules(m.alg(), m.flavor().comodule_side());
        for x in &pool {
            for y in &pool {
                if x.dim() > 2 || y.dim() > 2 {
                    continue;
                }
                let report = check_center_condition(&m, x, y)?;
                if !report.passed() {
                    return Err(dqha::DqhaError::ValidationFailed(format!(
                        "{name}: {report}"
                    )));
                }
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Result<()> {
    let m = m_theta_rl()?;
    let t = convert_flavor(&m)?;
    if !check_yd(&t).passed() {
        return Err(dqha::DqhaError::ValidationFailed(
            "converted M_theta_rl fails check_yd".into(),
        ));
    }
    let report = check_braided_functor_t(&m, &m)?;
    if !report.passed() {
        return Err(dqha::DqhaError::ValidationFailed(format!("{report}")));
    }
    // Hopf degeneration: the converted action is m . s(h)
    let alg = builtin_algebra_with_field("kz3", Some(ScalarField::prime(13)?))?;
    let theta = alg.field().from_i64(3);
    let rl = one_dim_yd(&alg, 1, &theta, Flavor::RL)?;
    let ll = convert_flavor(&rl)?;
    for h in 0..alg.dim() {
        let mut expected = Vector::zero(alg.field(), 1);
        for (i, c) in alg.s_basis(h).support() {
            expected.add_scaled(&rl.act_on_basis(i, 0), c);
        }
        if ll.act_on_basis(h, 0) != expected {
            return Err(dqha::DqhaError::ValidationFailed(format!(
                "Hopf degeneration differs at h = {h}"
            )));
        }
    }
    Ok(())
}

fn criterion_8() -> Result<()> {
    for (name, alg) in pool() {
        for v in small_comodules(&alg, ComoduleSide::Left) {
            for hand in [Handedness::LeftDual, Handedness::RightDual] {
                let pair = comodule_dual(&v, hand)?;
                if !check_snake(&pair)?.passed() {
                    return Err(dqha::DqhaError::ValidationFailed(format!(
                        "{name}: comodule snake fails"
                    )));
                }
            }
        }
        let report = check_lemma_32(&alg)?;
        if !report.passed() {
            return Err(dqha::DqhaError::ValidationFailed(format!("{name}: {report}")));
        }
    }
    let mods: Vec<YetterDrinfeldModule> =
        vec![h_as_yd(&builtin_algebra("kw_z2")?)?, m_theta()?];
    for m in &mods {
        for hand in [Handedness::LeftDual, Handedness::RightDual] {
            let pair = yd_dual(m, hand)?;
            if !check_yd(&pair.dual).passed()
                || !check_yd_morphisms(&pair)?.passed()
                || !check_snake_yd(&pair)?.passed()
            {
                return Err(dqha::DqhaError::ValidationFailed(
                    "yd dual checks fail".into(),
                ));
            }
        }
    }
    let alg = builtin_algebra("kw_z2")?;
    let spot = lemma_33_lhs(&alg, 1, 1)?;
    let pair = alg.twist_pair()?;
    if spot != alg.field().from_i64(-1) || spot != *pair.f.value(&[1, 1]) {
        return Err(dqha::DqhaError::ValidationFailed(format!(
            "spot value {spot} != -1 = f(g,g)"
        )));
    }
    Ok(())
}

fn criterion_9() -> Result<()> {
    let bin = env!("CARGO_BIN_EXE_dqha");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = run(&["validate", "builtin:kz3"]);
    if ok.status.code() != Some(0) {
        return Err(dqha::DqhaError::ValidationFailed(
            "builtin:kz3 did not exit 0".into(),
        ));
    }
    let broken = run(&["validate", "builtin:kw_z2_broken_beta"]);
    let text = String::from_utf8_lossy(&broken.stdout).into_owned();
    if broken.status.code() != Some(1) || !text.contains("eq-1.6") {
        return Err(dqha::DqhaError::ValidationFailed(format!(
            "broken beta: code {:?}, output {text}",
            broken.status.code()
        )));
    }
    let dir = tempfile::tempdir().unwrap();
    let bad_path = dir.path().join("bad.json");
    std::fs::write(&bad_path, "{ nope").unwrap();
    let bad = run(&["validate", bad_path.to_str().unwrap()]);
    if bad.status.code() != Some(2) {
        return Err(dqha::DqhaError::ValidationFailed(
            "malformed document did not exit 2".into(),
        ));
    }
    // emitted documents round-trip
    let emitted = run(&[
        "dual",
        "builtin:h_yd_kw_z2",
        "--hand",
        "right",
        "--report",
        "json",
    ]);
    let v: serde_json::Value =
        serde_json::from_slice(&emitted.stdout).map_err(|e| {
            dqha::DqhaError::ValidationFailed(format!("emitted document unparsable: {e}"))
        })?;
    let doc_path = dir.path().join("doc.json");
    std::fs::write(&doc_path, serde_json::to_vec(&v["document"]).unwrap()).unwrap();
    let back = run(&["validate", doc_path.to_str().unwrap()]);
    if back.status.code() != Some(0) {
        return Err(dqha::DqhaError::ValidationFailed(
            "emitted document did not validate".into(),
        ));
    }
    Ok(())
}

#[test]
fn acceptance() {
    type Criterion = (u32, fn() -> Result<()>);
    let criteria: Vec<Criterion> = vec![
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut all_ok = true;
    for (n, f) in criteria {
        match f() {
            Ok(()) => println!("criterion {n}: pass"),
            Err(e) => {
                println!("criterion {n}: FAIL ({e})");
                all_ok = false;
            }
        }
    }
    assert!(all_ok, "one or more acceptance criteria failed");
}
