//! Randomized structural properties: convolution algebra laws, the
//! pentagon/triangle coherence of comodule associators, and naturality of
//! the braiding.

use std::sync::Arc;

use proptest::prelude::*;

use dqha::builders::{builtin_algebra, small_comodules, REGISTERED_ALGEBRAS};
use dqha::comodule::{
    associator, associator_inv, comodule_morphism_failure, pentagon_failure, tensor_comodule,
    triangle_failure, ComoduleSide,
};
use dqha::form::{convolution_inverse, convolution_product, convolution_unit, MultilinearForm};
use dqha::yd::{braiding, h_as_yd, tensor_yd};
use dqha::DualQuasiHopfAlgebra;

fn pool_algebra(idx: usize) -> Arc<DualQuasiHopfAlgebra> {
    let name = REGISTERED_ALGEBRAS[idx % REGISTERED_ALGEBRAS.len()];
    builtin_algebra(name).unwrap()
}

/// A deterministic pseudo-random form from a seed and a salt.
fn seeded_form(alg: &DualQuasiHopfAlgebra, arity: usize, seed: u64, salt: u64) -> MultilinearForm {
    let field = alg.field();
    MultilinearForm::from_fn(field, arity, alg.dim(), |t| {
        let mut x = seed.wrapping_mul(6364136223846793005).wrapping_add(salt);
        for &i in t {
            x = x.wrapping_mul(25214903917).wrapping_add(i as u64 + 11);
        }
        field.from_i64(((x >> 33) % 13) as i64 - 6)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn convolution_is_associative(idx in 0usize..5, arity in 1usize..=3, seed in 0u64..1000) {
        let alg = pool_algebra(idx);
        let co = alg.coalgebra();
        let a = seeded_form(&alg, arity, seed, 1);
        let b = seeded_form(&alg, arity, seed, 2);
        let c = seeded_form(&alg, arity, seed, 3);
        let left = convolution_product(&convolution_product(&a, &b, co).unwrap(), &c, co).unwrap();
        let right = convolution_product(&a, &convolution_product(&b, &c, co).unwrap(), co).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn convolution_unit_is_neutral(idx in 0usize..5, arity in 1usize..=3, seed in 0u64..1000) {
        let alg = pool_algebra(idx);
        let co = alg.coalgebra();
        let a = seeded_form(&alg, arity, seed, 7);
        let e = convolution_unit(co, arity);
        prop_assert_eq!(convolution_product(&a, &e, co).unwrap(), a.clone());
        prop_assert_eq!(convolution_product(&e, &a, co).unwrap(), a);
    }

    #[test]
    fn convolution_inverse_round_trip(idx in 0usize..5) {
        // the reassociator is convolution invertible on every pool algebra
        let alg = pool_algebra(idx);
        let co = alg.coalgebra();
        let inv = convolution_inverse(alg.sigma(), co).unwrap();
        let e = convolution_unit(co, 3);
        prop_assert_eq!(convolution_product(alg.sigma(), &inv, co).unwrap(), e.clone());
        prop_assert_eq!(convolution_product(&inv, alg.sigma(), co).unwrap(), e);
    }

    #[test]
    fn pentagon_and_triangle_hold(idx in 0usize..5, pick in proptest::collection::vec(0usize..4, 4)) {
        let alg = pool_algebra(idx);
        let pool = small_comodules(&alg, ComoduleSide::Left);
        let m = &pool[pick[0] % pool.len()];
        let n = &pool[pick[1] % pool.len()];
        let p = &pool[pick[2] % pool.len()];
        let q = &pool[pick[3] % pool.len()];
        prop_assert!(pentagon_failure(m, n, p, q).unwrap().is_none());
        prop_assert!(triangle_failure(m, n).unwrap().is_none());
        let a = associator(m, n, p).unwrap();
        let ai = associator_inv(m, n, p).unwrap();
        prop_assert!(a.compose(&ai).is_identity());
        prop_assert!(ai.compose(&a).is_identity());
    }

    #[test]
    fn braiding_is_natural_in_the_comodule_structure(idx in 0usize..5) {
        let alg = pool_algebra(idx);
        let h = h_as_yd(&alg).unwrap();
        let t = tensor_yd(&h, &h).unwrap();
        for (m, n) in [(&h, &h), (&h, &t), (&t, &h)] {
            let c = braiding(m, n).unwrap();
            let mn = tensor_comodule(m.comodule(), n.comodule()).unwrap();
            let nm = tensor_comodule(n.comodule(), m.comodule()).unwrap();
            prop_assert!(comodule_morphism_failure(&c, &mn, &nm).is_none());
        }
    }
}
