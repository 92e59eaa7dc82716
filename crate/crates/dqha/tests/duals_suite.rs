//! Comodule and Yetter-Drinfeld duals: snake equations, structure-map
//! compatibility, and the canonical-element identities behind them.

use dqha::builders::{builtin_algebra, kw_z2, m_theta, REGISTERED_ALGEBRAS};
use dqha::builders::small_comodules;
use dqha::comodule::ComoduleSide;
use dqha::duals::{
    check_lemma_32, check_snake, check_snake_yd, check_yd_morphisms, comodule_dual,
    lemma_33_lhs, yd_dual, Handedness, YdDualPair,
};
use dqha::yd::{check_yd, h_as_yd};
use dqha::DqhaError;

#[test]
fn comodule_duals_satisfy_snake_equations() {
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        for v in small_comodules(&alg, ComoduleSide::Left) {
            for hand in [Handedness::LeftDual, Handedness::RightDual] {
                let pair = comodule_dual(&v, hand)
                    .unwrap_or_else(|e| panic!("{name} {}: {e}", v.basis_name(0)));
                let report = check_snake(&pair).unwrap();
                assert!(report.passed(), "{name} {hand:?}: {report}");
            }
        }
    }
}

#[test]
fn evaluation_pairs_through_beta() {
    // ev on the left dual is beta(s^{-1}(v_{(-1)})) phi(v_{(0)}); on
    // M_theta the coaction weight is g and beta(g) = -1
    let alg = kw_z2().unwrap();
    let minus_one = alg.field().from_i64(-1);
    assert_eq!(*alg.beta().value(&[1]), minus_one, "beta(g)");
    let s_inv = alg.s_inv_basis(1).unwrap();
    assert_eq!(alg.beta_vec(s_inv), minus_one, "beta(s^{{-1}}(g))");

    let m = m_theta().unwrap();
    let pair = yd_dual(&m, Handedness::LeftDual).unwrap();
    assert_eq!(*pair.ev.at(0, 0), m.alg().field().from_i64(-1));
    // the regular comodule has trivial coaction, so there ev is the plain
    // dual pairing with no beta weight
    let reg = h_as_yd(&alg).unwrap();
    let reg_pair = yd_dual(&reg, Handedness::LeftDual).unwrap();
    for i in 0..reg.dim() {
        for j in 0..reg.dim() {
            let expect = if i == j {
                alg.field().one()
            } else {
                alg.field().zero()
            };
            assert_eq!(*reg_pair.ev.at(0, i * reg.dim() + j), expect);
        }
    }
}

#[test]
fn yd_duals_are_valid_modules_with_compatible_structure_maps() {
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        let m = h_as_yd(&alg).unwrap();
        for hand in [Handedness::LeftDual, Handedness::RightDual] {
            let pair = yd_dual(&m, hand).unwrap_or_else(|e| panic!("{name} {hand:?}: {e}"));
            assert!(check_yd(&pair.dual).passed(), "{name} {hand:?}");
            assert!(check_yd_morphisms(&pair).unwrap().passed(), "{name} {hand:?}");
            assert!(check_snake_yd(&pair).unwrap().passed(), "{name} {hand:?}");
        }
    }
    let m = m_theta().unwrap();
    for hand in [Handedness::LeftDual, Handedness::RightDual] {
        let pair = yd_dual(&m, hand).unwrap();
        assert!(check_yd(&pair.dual).passed(), "M_theta {hand:?}");
        assert!(check_snake_yd(&pair).unwrap().passed(), "M_theta {hand:?}");
    }
}

#[test]
fn dual_action_scalars() {
    // over a Hopf algebra the dual character is theta^{-1}
    use dqha::builders::{builtin_algebra_with_field, one_dim_yd};
    use dqha::scalar::ScalarField;
    use dqha::yd::Flavor;
    let alg = builtin_algebra_with_field("kz3", Some(ScalarField::prime(13).unwrap())).unwrap();
    let field = alg.field();
    let theta = field.from_i64(3);
    let m = one_dim_yd(&alg, 1, &theta, Flavor::LL).unwrap();
    let pair = yd_dual(&m, Handedness::RightDual).unwrap();
    let g_action = pair.dual.act_on_basis(1, 0);
    let (_, c) = g_action.support().next().unwrap();
    assert_eq!(*c, theta.inv().unwrap());

    // on M_theta the twist factors f(g,g) g(g,g) = 1 cancel and s fixes g,
    // so the dual character is theta itself
    let m = m_theta().unwrap();
    let field = m.alg().field();
    let pair = yd_dual(&m, Handedness::RightDual).unwrap();
    let g_action = pair.dual.act_on_basis(1, 0);
    let (_, c) = g_action.support().next().unwrap();
    assert_eq!(*c, field.from_i64(5));
}

#[test]
fn scaled_coevaluation_breaks_the_snake() {
    let alg = kw_z2().unwrap();
    let m = h_as_yd(&alg).unwrap();
    let pair = yd_dual(&m, Handedness::LeftDual).unwrap();
    let mut coev = pair.coev.clone();
    coev.scale(&alg.field().from_i64(2));
    let broken = YdDualPair {
        primal: pair.primal.clone(),
        dual: pair.dual.clone(),
        ev: pair.ev.clone(),
        coev,
        handedness: pair.handedness,
    };
    let report = check_snake_yd(&broken).unwrap();
    assert!(!report.passed());
    // the residual is twice the identity, reported entrywise
    let detail = report
        .failures()
        .next()
        .and_then(|i| i.detail.clone())
        .unwrap();
    assert!(detail.contains('2'), "{detail}");
}

#[test]
fn right_comodules_are_rejected_by_comodule_dual() {
    let alg = kw_z2().unwrap();
    let v = dqha::comodule::Comodule::trivial(alg, ComoduleSide::Right);
    assert!(matches!(
        comodule_dual(&v, Handedness::LeftDual),
        Err(DqhaError::FlavorMismatch(_))
    ));
}

#[test]
fn lemma_32_identities_hold_on_pool() {
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        let report = check_lemma_32(&alg).unwrap();
        assert!(report.passed(), "{name}: {report}");
    }
}

#[test]
fn lemma_33_spot_value_matches_twist() {
    let alg = kw_z2().unwrap();
    let lhs = lemma_33_lhs(&alg, 1, 1).unwrap();
    let pair = alg.twist_pair().unwrap();
    assert_eq!(lhs, *pair.f.value(&[1, 1]));
    assert_eq!(lhs, alg.field().from_i64(-1));
}
