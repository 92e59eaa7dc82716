//! Yetter-Drinfeld modules: the regular-module structure, one-dimensional
//! modules, braidings, center conditions, and flavor conversion.

use dqha::builders::{
    builtin_algebra, builtin_algebra_with_field, builtin_module, kw_z2, kw_z2_f13, kz3,
    m_theta, m_theta_rl, one_dim_yd, small_comodules, trivial_ll, REGISTERED_ALGEBRAS,
    REGISTERED_MODULES,
};
use dqha::linalg::LinearMap;
use dqha::scalar::ScalarField;
use dqha::yd::{
    braiding, braiding_inverse, check_alt_axiom, check_braided_functor_t,
    check_center_condition, check_yd, convert_flavor, h_as_yd, tensor_yd, Flavor,
    YetterDrinfeldModule,
};
use dqha::DqhaError;

#[test]
fn registered_modules_pass_check_yd() {
    for name in REGISTERED_MODULES {
        let m = builtin_module(name).unwrap();
        let report = check_yd(&m);
        assert!(report.passed(), "{name}: {report}");
    }
}

#[test]
fn h_as_yd_hopf_degeneration_is_multiplication() {
    // over a Hopf algebra the regular action collapses to the product
    let alg = kz3().unwrap();
    let m = h_as_yd(&alg).unwrap();
    for h in 0..3 {
        for hp in 0..3 {
            assert_eq!(&m.act_on_basis(h, hp), alg.mul_basis(h, hp), "({h},{hp})");
        }
    }
}

#[test]
fn h_as_yd_action_spot_value() {
    // on k_w[Z2] the cocycle shows up: g acting on g gives -e
    let alg = kw_z2().unwrap();
    let m = h_as_yd(&alg).unwrap();
    let v = m.act_on_basis(1, 1);
    let minus_e = {
        let mut u = alg.unit_vec().clone();
        u.scale(&alg.field().from_i64(-1));
        u
    };
    assert_eq!(v, minus_e, "g acting on g");
}

#[test]
fn h_as_yd_coaction_is_adjoint_shaped() {
    // over a Hopf algebra the coaction is h1 s(h3) (x) h2; on a group
    // algebra that is e (x) h
    let alg = kz3().unwrap();
    let m = h_as_yd(&alg).unwrap();
    for j in 0..3 {
        let terms = m.comodule().coaction(j);
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].h, 0);
        assert_eq!(terms[0].v, j);
        assert!(terms[0].coeff.is_one());
    }
}

#[test]
fn h_as_yd_passes_alternative_axiom() {
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        let m = h_as_yd(&alg).unwrap();
        let report = check_alt_axiom(&m).unwrap();
        assert!(report.passed(), "{name}: {report}");
    }
}

#[test]
fn m_theta_requires_square_root_of_minus_one() {
    // theta = 1 violates the compatibility axiom
    let alg = kw_z2_f13().unwrap();
    let err = one_dim_yd(&alg, 1, &alg.field().one(), Flavor::LL).unwrap_err();
    match err {
        DqhaError::ConstraintViolated(msg) => {
            assert!(msg.contains("eq-2.9"), "{msg}");
        }
        other => panic!("unexpected error {other}"),
    }
    // over the rationals no theta works because theta^2 = -1 is needed
    let alg_q = kw_z2().unwrap();
    assert!(one_dim_yd(&alg_q, 1, &alg_q.field().one(), Flavor::LL).is_err());
}

#[test]
fn trivial_module_is_valid_everywhere() {
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        let m = trivial_ll(&alg).unwrap();
        assert!(check_yd(&m).passed(), "{name}");
    }
}

#[test]
fn perturbed_action_fails_both_equivalent_axioms() {
    // Doubling the action of g on M_theta breaks the compatibility axiom.
    let good = m_theta().unwrap();
    let mut triples = good.action_triples();
    for t in triples.iter_mut() {
        if t.0 == 1 {
            t.3 = &t.3 * &good.alg().field().from_i64(2);
        }
    }
    let bad =
        YetterDrinfeldModule::from_triples(good.comodule().clone(), Flavor::LL, &triples)
            .unwrap();
    let direct = check_yd(&bad);
    assert!(direct.item("eq-2.9").is_some_and(|i| !i.pass), "{direct}");

    // On the direct sum of the trivial module and M_theta, an off-diagonal
    // action term mixes the two coaction weights and breaks colinearity;
    // the equivalent single-display form fails with it.
    use dqha::comodule::Comodule;
    let alg = kw_z2_f13().unwrap();
    let field = alg.field();
    let comodule = Comodule::new(
        alg.clone(),
        Flavor::LL.comodule_side(),
        vec!["v".into(), "w".into()],
        &[(0, 0, 0, field.one()), (1, 1, 1, field.one())],
    )
    .unwrap();
    let sum = YetterDrinfeldModule::from_triples(
        comodule,
        Flavor::LL,
        &[
            (0, 0, 0, field.one()),
            (0, 1, 1, field.one()),
            (1, 0, 0, field.one()),
            (1, 1, 1, field.from_i64(5)),
        ],
    )
    .unwrap();
    assert!(check_yd(&sum).passed(), "unperturbed direct sum");
    let mut triples = sum.action_triples();
    triples.push((1, 0, 1, field.one())); // g sends v into the w line
    let bad =
        YetterDrinfeldModule::from_triples(sum.comodule().clone(), Flavor::LL, &triples)
            .unwrap();
    let direct = check_yd(&bad);
    assert!(direct.item("eq-2.11").is_some_and(|i| !i.pass), "{direct}");
    let alt = check_alt_axiom(&bad).unwrap();
    assert!(alt.item("eq-2.12").is_some_and(|i| !i.pass), "{alt}");
}

#[test]
fn m_theta_self_braiding_is_theta() {
    let m = m_theta().unwrap();
    let c = braiding(&m, &m).unwrap();
    assert_eq!(c.rows, 1);
    assert_eq!(*c.at(0, 0), m.alg().field().from_i64(5));
}

#[test]
fn braiding_inverse_composes_to_identity() {
    for alg_name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(alg_name).unwrap();
        let mut mods = vec![h_as_yd(&alg).unwrap(), trivial_ll(&alg).unwrap()];
        if *alg_name == *"kw_z2_f13" {
            mods.push(m_theta().unwrap().with_algebra(alg.clone()).unwrap());
        }
        for m in &mods {
            for n in &mods {
                let c = braiding(m, n).unwrap();
                let ci = braiding_inverse(m, n).unwrap();
                assert!(
                    c.compose(&ci).is_identity() && ci.compose(&c).is_identity(),
                    "{alg_name}: {} with {}",
                    m.comodule().basis_name(0),
                    n.comodule().basis_name(0),
                );
            }
        }
    }
}

#[test]
fn braiding_invertible_on_tensor_products() {
    // tensor squares push the dimension to 16 on k_w[Z4]
    for alg_name in ["kw_z2", "kw_z4_f13"] {
        let alg = builtin_algebra(alg_name).unwrap();
        let h = h_as_yd(&alg).unwrap();
        let t = tensor_yd(&h, &h).unwrap();
        assert!(check_yd(&t).passed(), "{alg_name} tensor square");
        let c = braiding(&t, &h).unwrap();
        let ci = braiding_inverse(&t, &h).unwrap();
        assert!(c.compose(&ci).is_identity() && ci.compose(&c).is_identity());
        let c2 = braiding(&t, &t).unwrap();
        let ci2 = braiding_inverse(&t, &t).unwrap();
        assert!(c2.compose(&ci2).is_identity() && ci2.compose(&c2).is_identity());
    }
}

#[test]
fn braiding_is_a_comodule_morphism() {
    use dqha::comodule::{comodule_morphism_failure, tensor_comodule};
    let alg = kw_z2().unwrap();
    let m = h_as_yd(&alg).unwrap();
    let n = trivial_ll(&alg).unwrap();
    let c = braiding(&m, &n).unwrap();
    let mn = tensor_comodule(m.comodule(), n.comodule()).unwrap();
    let nm = tensor_comodule(n.comodule(), m.comodule()).unwrap();
    assert!(comodule_morphism_failure(&c, &mn, &nm).is_none());
}

#[test]
fn tensor_products_pass_check_yd() {
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        let h = h_as_yd(&alg).unwrap();
        let t = tensor_yd(&h, &trivial_ll(&alg).unwrap()).unwrap();
        assert!(check_yd(&t).passed(), "{name}");
    }
    // the RL flavor tensors too
    let rl = m_theta_rl().unwrap();
    let t = tensor_yd(&rl, &rl).unwrap();
    assert!(check_yd(&t).passed(), "RL tensor square");
}

#[test]
fn center_conditions_hold_for_registered_modules() {
    for name in REGISTERED_MODULES {
        let m = builtin_module(name).unwrap();
        let side = m.flavor().comodule_side();
        let pool = small_comodules(m.alg(), side);
        for x in &pool {
            for y in &pool {
                let report = check_center_condition(&m, x, y).unwrap();
                assert!(
                    report.passed(),
                    "{name} vs ({}, {}): {report}",
                    x.basis_name(0),
                    y.basis_name(0)
                );
            }
        }
    }
}

#[test]
fn converted_rl_module_is_ll() {
    let m = m_theta_rl().unwrap();
    let t = convert_flavor(&m).unwrap();
    assert_eq!(t.flavor(), Flavor::LL);
    assert!(check_yd(&t).passed());
}

#[test]
fn conversion_preserves_braidings() {
    let m = m_theta_rl().unwrap();
    let report = check_braided_functor_t(&m, &m).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn conversion_hopf_degeneration_acts_through_antipode() {
    // over a Hopf algebra the converted action is m . s(h)
    let alg = builtin_algebra_with_field("kz3", Some(ScalarField::prime(13).unwrap())).unwrap();
    let theta = alg.field().from_i64(3); // a primitive cube root of unity mod 13
    let m = one_dim_yd(&alg, 1, &theta, Flavor::RL).unwrap();
    let t = convert_flavor(&m).unwrap();
    for h in 0..3 {
        let converted = t.act_on_basis(h, 0);
        let mut expected = dqha::linalg::Vector::zero(alg.field(), 1);
        // the right action of s(h) on the one-dimensional module
        for (i, c) in alg.s_basis(h).support() {
            expected.add_scaled(&m.act_on_basis(i, 0), c);
        }
        assert_eq!(converted, expected, "h = {h}");
    }
    // and the RL module itself is not trivial
    assert_eq!(*m.act_on_basis(1, 0).support().next().unwrap().1, theta);
}

#[test]
fn flavored_one_dim_modules() {
    // each flavor admits the trivial one-dimensional module
    let alg = kw_z2().unwrap();
    for flavor in [Flavor::LL, Flavor::RL, Flavor::LR, Flavor::RR] {
        let m = one_dim_yd(&alg, 0, &alg.field().one(), flavor).unwrap();
        assert!(check_yd(&m).passed(), "{flavor:?}");
    }
}

#[test]
fn mixed_flavor_operations_are_rejected() {
    let ll = m_theta().unwrap();
    let rl = m_theta_rl().unwrap().with_algebra(ll.alg().clone()).unwrap();
    assert!(matches!(
        tensor_yd(&ll, &rl),
        Err(DqhaError::FlavorMismatch(_))
    ));
    assert!(matches!(
        braiding(&ll, &rl),
        Err(DqhaError::FlavorMismatch(_))
    ));
    assert!(matches!(
        convert_flavor(&ll),
        Err(DqhaError::FlavorMismatch(_))
    ));
}

#[test]
fn action_forms_disagree_is_not_raised_on_pool() {
    // h_as_yd cross-checks two independent formulas for the action; both
    // must agree on every algebra in the pool
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        assert!(h_as_yd(&alg).is_ok(), "{name}");
    }
}

#[test]
fn unit_acts_as_identity() {
    for name in REGISTERED_MODULES {
        let m = builtin_module(name).unwrap();
        let alg = m.alg().clone();
        let field = alg.field();
        let mut acc = LinearMap::zero(field, m.dim(), m.dim());
        for (i, c) in alg.unit_vec().support() {
            for r in 0..m.dim() {
                for s in 0..m.dim() {
                    let add = c * m.action_basis(i).at(r, s);
                    let cur = acc.at(r, s).clone();
                    *acc.at_mut(r, s) = &cur + &add;
                }
            }
        }
        assert!(acc.is_identity(), "{name}");
    }
}
