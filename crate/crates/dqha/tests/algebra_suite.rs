//! Axiom suite, variants, twist pairs, and canonical elements on the
//! registered algebra pool.

use dqha::algebra::{build_variant, check_dqha_axioms, same_algebra, twist, Variant};
use dqha::builders::{
    builtin_algebra, dual_group_hopf, group_dqha, group_hopf, kw_z2, kw_z2_broken_beta, kz3,
    root_of_unity, FiniteGroupPresentation, ThreeCocycle, REGISTERED_ALGEBRAS,
};
use dqha::canonical::{check_pq_identities, CanonicalElements};
use dqha::form::MultilinearForm;
use dqha::scalar::ScalarField;

#[test]
fn pool_passes_axiom_suite() {
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        let report = check_dqha_axioms(&alg);
        assert!(report.passed(), "{name}: {report}");
    }
}

#[test]
fn broken_beta_fails_exactly_eq_1_6() {
    let alg = kw_z2_broken_beta().unwrap();
    let report = check_dqha_axioms(&alg);
    let failed: Vec<&str> = report.failures().map(|i| i.name.as_str()).collect();
    assert_eq!(failed, vec!["eq-1.6"], "{report}");
}

#[test]
fn variants_pass_axiom_suite() {
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        for v in [Variant::Op, Variant::Cop, Variant::OpCop] {
            let built = build_variant(&alg, v).unwrap();
            let report = check_dqha_axioms(&built);
            assert!(report.passed(), "{name} variant {v:?}: {report}");
        }
    }
}

#[test]
fn op_cop_involutions() {
    let alg = kw_z2().unwrap();
    for v in [Variant::Op, Variant::Cop, Variant::OpCop] {
        let once = build_variant(&alg, v).unwrap();
        let twice = build_variant(&once, v).unwrap();
        assert!(same_algebra(&alg, &twice), "{v:?} applied twice");
    }
}

#[test]
fn twist_pair_spot_values() {
    let alg = kw_z2().unwrap();
    let pair = alg.twist_pair().unwrap();
    let minus_one = alg.field().from_i64(-1);
    assert_eq!(*pair.f.value(&[1, 1]), minus_one, "f(g,g)");
    // g is the convolution inverse, and f(g,g) is its own inverse here
    assert_eq!(*pair.g.value(&[1, 1]), minus_one, "g(g,g)");
}

#[test]
fn twist_pair_exists_on_pool() {
    // derivation validates that g = f^{-1} and that f intertwines the
    // antipode with the product and reassociator on all tuples
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        alg.twist_pair().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn hopf_twist_pair_is_trivial() {
    let alg = kz3().unwrap();
    let pair = alg.twist_pair().unwrap();
    for a in 0..3 {
        for b in 0..3 {
            assert!(pair.f.value(&[a, b]).is_one());
            assert!(pair.g.value(&[a, b]).is_one());
        }
    }
}

#[test]
fn canonical_identities_hold_on_pool() {
    for name in REGISTERED_ALGEBRAS {
        let alg = builtin_algebra(name).unwrap();
        let report = check_pq_identities(&alg).unwrap();
        assert!(report.passed(), "{name}: {report}");
    }
}

#[test]
fn hopf_canonical_elements_degenerate_to_counits() {
    for name in ["kz3", "kdualz2"] {
        let alg = builtin_algebra(name).unwrap();
        let e = CanonicalElements::compute(&alg).unwrap();
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let eps = alg.eps_basis(a) * alg.eps_basis(b);
                for (label, form) in [
                    ("p^R", &e.p_r),
                    ("q^R", &e.q_r),
                    ("p^L", &e.p_l),
                    ("q^L", &e.q_l),
                    ("U", &e.u),
                ] {
                    assert_eq!(*form.value(&[a, b]), eps, "{name} {label}({a},{b})");
                }
            }
        }
    }
}

#[test]
fn canonical_u_spot_value() {
    let alg = kw_z2().unwrap();
    let e = CanonicalElements::compute(&alg).unwrap();
    assert!(e.u.value(&[1, 1]).is_one(), "U(g,g)");
}

#[test]
fn cocycle_builder_satisfies_cocycle_law() {
    // the n = 4 cocycle over F13 with zeta = 5 on all 4^4 quadruples
    let field = ScalarField::prime(13).unwrap();
    let zeta = root_of_unity(field, 4).unwrap();
    ThreeCocycle::cyclic(4, field, &zeta).unwrap();
    // a non-root scalar breaks normalization or the law
    let bad = ThreeCocycle::cyclic(4, field, &field.from_i64(2));
    assert!(bad.is_err());
}

#[test]
fn group_dqha_with_trivial_cocycle_equals_group_hopf() {
    let g = FiniteGroupPresentation::cyclic(3);
    let field = ScalarField::Rationals;
    let hopf = group_hopf(&g, field).unwrap();
    let dqha = group_dqha(&ThreeCocycle::trivial(g, field)).unwrap();
    assert!(same_algebra(&hopf, &dqha));
}

#[test]
fn symmetric3_group_hopf_is_valid() {
    let g = FiniteGroupPresentation::symmetric3();
    let alg = group_hopf(&g, ScalarField::Rationals).unwrap();
    assert!(check_dqha_axioms(&alg).passed());
}

#[test]
fn dual_group_hopf_has_convolution_coproduct() {
    let g = FiniteGroupPresentation::cyclic(2);
    let alg = dual_group_hopf(&g, ScalarField::Rationals).unwrap();
    assert!(check_dqha_axioms(&alg).passed());
    // delta(d_e) = d_e (x) d_e + d_g (x) d_g
    let terms = alg.delta_k(0, 2).unwrap();
    let mut pairs: Vec<(usize, usize)> = terms.iter().map(|t| (t.idx[0], t.idx[1])).collect();
    pairs.sort();
    assert_eq!(pairs, vec![(0, 0), (1, 1)]);
    assert!(terms.iter().all(|t| t.coeff.is_one()));
    // counit is evaluation at the identity
    assert!(alg.eps_basis(0).is_one());
    assert!(alg.eps_basis(1).is_zero());
}

#[test]
fn gauge_twist_preserves_axioms() {
    // a non-counit normalized invertible bilinear form on k_w[Z2]
    let alg = kw_z2().unwrap();
    let field = alg.field();
    let mut f = MultilinearForm::from_fn(field, 2, 2, |_| field.one());
    f.set(&[1, 1], field.from_i64(-1));
    let twisted = twist(&alg, &f).unwrap();
    let report = check_dqha_axioms(&twisted);
    assert!(report.passed(), "{report}");
    // the coalgebra is untouched
    assert_eq!(twisted.dim(), alg.dim());
    for i in 0..alg.dim() {
        assert_eq!(alg.eps_basis(i), twisted.eps_basis(i));
    }
}

#[test]
fn delta_k_arity_cap() {
    let alg = kz3().unwrap();
    let err = alg.delta_k(0, 64).unwrap_err();
    assert!(matches!(err, dqha::DqhaError::ArityCapExceeded { .. }));
}
