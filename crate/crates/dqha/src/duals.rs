//! Left and right duals in the finite-dimensional comodule category and in
//! the left-left module category, with snake-equation verification and the
//! supporting bilinear identity suite.

use std::sync::Arc;

use crate::algebra::DualQuasiHopfAlgebra;
use crate::comodule::{
    associator, associator_inv, comodule_morphism_failure, Comodule, ComoduleSide,
};
use crate::error::{DqhaError, Result};
use crate::exec::{decode_tuple, scan_fail, tuple_count};
use crate::linalg::LinearMap;
use crate::report::CheckReport;
use crate::yd::{check_yd, tensor_yd, Flavor, YetterDrinfeldModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Handedness {
    /// `V^*` with `ev: V^* (x) V -> k` and `coev: k -> V (x) V^*`.
    LeftDual,
    /// `^*V` with `ev: V (x) ^*V -> k` and `coev: k -> ^*V (x) V`.
    RightDual,
}

/// A comodule together with its dual, evaluation and coevaluation.
/// `ev` is a `1 x (d_dual * d)` row (left dual) or `1 x (d * d_dual)`
/// (right dual); `coev` is the matching column.
#[derive(Clone, Debug, PartialEq)]
pub struct DualPair {
    pub primal: Comodule,
    pub dual: Comodule,
    pub ev: LinearMap,
    pub coev: LinearMap,
    pub handedness: Handedness,
}

/// A left-left module together with its dual and the inherited
/// evaluation and coevaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct YdDualPair {
    pub primal: YetterDrinfeldModule,
    pub dual: YetterDrinfeldModule,
    pub ev: LinearMap,
    pub coev: LinearMap,
    pub handedness: Handedness,
}

/// Dual of a finite-dimensional left comodule: coaction through `s^{-1}`
/// (left dual) or `s` (right dual), evaluation weighted by `beta`,
/// coevaluation by `alpha`. Snake equations are validated on construction.
pub fn comodule_dual(v: &Comodule, handedness: Handedness) -> Result<DualPair> {
    if v.side() != ComoduleSide::Left {
        return Err(DqhaError::FlavorMismatch(
            "duals are constructed for left comodules".into(),
        ));
    }
    let alg = v.alg().clone();
    let field = alg.field();
    let dv = v.dim();

    let mut names = Vec::with_capacity(dv);
    let mut triples = Vec::new();
    let mut ev = LinearMap::zero(field, 1, dv * dv);
    let mut coev = LinearMap::zero(field, dv * dv, 1);
    match handedness {
        Handedness::LeftDual => {
            for i in 0..dv {
                names.push(format!("{}*", v.basis_name(i)));
            }
            for i in 0..dv {
                for t in v.coaction(i) {
                    // rho(v^{t.v}) += coeff * s^{-1}(e_h) (x) v^i
                    let sh = alg.s_inv_basis(t.h)?;
                    for (hh, c) in sh.support() {
                        triples.push((t.v, hh, i, &t.coeff * c));
                    }
                    // ev(v^{t.v} (x) v_i) += coeff * beta(s^{-1}(e_h))
                    let b = alg.beta_vec(sh);
                    if !b.is_zero() {
                        let col = t.v * dv + i;
                        *ev.at_mut(0, col) = ev.at(0, col) + &(&t.coeff * &b);
                    }
                    // coev(1) += coeff * alpha(s^{-1}(e_h)) v_{t.v} (x) v^i
                    let a = alg.alpha_vec(sh);
                    if !a.is_zero() {
                        let row = t.v * dv + i;
                        *coev.at_mut(row, 0) = coev.at(row, 0) + &(&t.coeff * &a);
                    }
                }
            }
        }
        Handedness::RightDual => {
            for i in 0..dv {
                names.push(format!("*{}", v.basis_name(i)));
            }
            for i in 0..dv {
                for t in v.coaction(i) {
                    // rho(v^{t.v}) += coeff * s(e_h) (x) v^i
                    let sh = alg.s_basis(t.h);
                    for (hh, c) in sh.support() {
                        triples.push((t.v, hh, i, &t.coeff * c));
                    }
                    // ev(v_i (x) v^{t.v}) += coeff * beta(e_h)
                    let b = alg.beta().value(&[t.h]);
                    if !b.is_zero() {
                        let col = i * dv + t.v;
                        *ev.at_mut(0, col) = ev.at(0, col) + &(&t.coeff * b);
                    }
                    // coev(1) += coeff * alpha(e_h) v^i (x) v_{t.v}
                    let a = alg.alpha().value(&[t.h]);
                    if !a.is_zero() {
                        let row = i * dv + t.v;
                        *coev.at_mut(row, 0) = coev.at(row, 0) + &(&t.coeff * a);
                    }
                }
            }
        }
    }
    let dual = Comodule::new(
        alg,
        ComoduleSide::Left,
        names,
        &triples,
    )?;
    let pair = DualPair {
        primal: v.clone(),
        dual,
        ev,
        coev,
        handedness,
    };
    let report = check_snake(&pair)?;
    if let Some(item) = report.failures().next() {
        return Err(DqhaError::SnakeFailed(format!(
            "{}: {}",
            item.name,
            item.detail.as_deref().unwrap_or("")
        )));
    }
    Ok(pair)
}

/// Both triangle composites for a dual pair, with the comodule-category
/// associators inserted.
pub fn check_snake(p: &DualPair) -> Result<CheckReport> {
    snake_report(&p.primal, &p.dual, &p.ev, &p.coev, p.handedness)
}

/// Snake check for a module dual pair; the forgetful functor is monoidal,
/// so the composites are those of the underlying comodules.
pub fn check_snake_yd(p: &YdDualPair) -> Result<CheckReport> {
    snake_report(
        p.primal.comodule(),
        p.dual.comodule(),
        &p.ev,
        &p.coev,
        p.handedness,
    )
}

fn snake_report(
    v: &Comodule,
    dual: &Comodule,
    ev: &LinearMap,
    coev: &LinearMap,
    handedness: Handedness,
) -> Result<CheckReport> {
    let field = v.alg().field();
    let id_v = LinearMap::identity(field, v.dim());
    let id_d = LinearMap::identity(field, dual.dim());
    let mut report = CheckReport::new();
    let (first, second) = match handedness {
        Handedness::LeftDual => (
            // (V (x) ev) o a_{V,V*,V} o (coev (x) V) = id_V
            id_v.kronecker(ev)
                .compose(&associator(v, dual, v)?)
                .compose(&coev.kronecker(&id_v)),
            // (ev (x) V*) o a^{-1}_{V*,V,V*} o (V* (x) coev) = id_{V*}
            ev.kronecker(&id_d)
                .compose(&associator_inv(dual, v, dual)?)
                .compose(&id_d.kronecker(coev)),
        ),
        Handedness::RightDual => (
            // (^*V (x) ev) o a_{^*V,V,^*V} o (coev (x) ^*V) = id_{^*V}
            id_d.kronecker(ev)
                .compose(&associator(dual, v, dual)?)
                .compose(&coev.kronecker(&id_d)),
            // (ev (x) V) o a^{-1}_{V,^*V,V} o (V (x) coev) = id_V
            ev.kronecker(&id_v)
                .compose(&associator_inv(v, dual, v)?)
                .compose(&id_v.kronecker(coev)),
        ),
    };
    report.push(
        "snake (first composite)",
        if first.is_identity() {
            None
        } else {
            Some(format!("composite is {first}, not the identity"))
        },
    );
    report.push(
        "snake (second composite)",
        if second.is_identity() {
            None
        } else {
            Some(format!("composite is {second}, not the identity"))
        },
    );
    Ok(report)
}

/// Dual of a finite-dimensional LL module. The coaction and the
/// evaluation/coevaluation are those of the underlying comodule dual; the
/// action follows the displayed formulas through the twist pair `(f, g)`.
/// The result is validated: it passes the module axioms, ev and coev
/// intertwine both the coactions and the actions, and the snake equations
/// hold.
pub fn yd_dual(m: &YetterDrinfeldModule, handedness: Handedness) -> Result<YdDualPair> {
    if m.flavor() != Flavor::LL {
        return Err(DqhaError::FlavorMismatch(
            "duals are constructed for LL modules".into(),
        ));
    }
    let alg = m.alg().clone();
    let field = alg.field();
    let d = alg.dim();
    let dm = m.dim();
    let pair = alg.twist_pair()?;
    let base = comodule_dual(m.comodule(), handedness)?;

    let mut actions = vec![LinearMap::zero(field, dm, dm); d];
    for h in 0..d {
        for i in 0..dm {
            match handedness {
                Handedness::RightDual => {
                    // h.phi = f(s^{-1}(h3), m_{i,-1}) g((s^{-1}(h2).m_{i,0})_{-1}, s^{-1}(h1))
                    //         phi((s^{-1}(h2).m_{i,0})_0) m^i
                    for th in alg.delta_k(h, 3)?.iter() {
                        for t in m.comodule().coaction(i) {
                            let fv = pair
                                .f
                                .eval(&[alg.s_inv_basis(th.idx[2])?, alg.basis(t.h)]);
                            if fv.is_zero() {
                                continue;
                            }
                            let u = m.act_vec(
                                alg.s_inv_basis(th.idx[1])?,
                                &crate::linalg::Vector::unit(field, dm, t.v),
                            );
                            for (k, cu) in u.support() {
                                for tu in m.comodule().coaction(k) {
                                    let gv = pair.g.eval(&[
                                        alg.basis(tu.h),
                                        alg.s_inv_basis(th.idx[0])?,
                                    ]);
                                    if gv.is_zero() {
                                        continue;
                                    }
                                    let w = &(&(&(&th.coeff * &t.coeff) * &fv)
                                        * &(cu * &tu.coeff))
                                        * &gv;
                                    *actions[h].at_mut(i, tu.v) =
                                        actions[h].at(i, tu.v) + &w;
                                }
                            }
                        }
                    }
                }
                Handedness::LeftDual => {
                    // h.phi = f(s^{-1}(m_{i,-1}), h3) g(h1, s^{-1}((s(h2).m_{i,0})_{-1}))
                    //         phi((s(h2).m_{i,0})_0) m^i
                    for th in alg.delta_k(h, 3)?.iter() {
                        for t in m.comodule().coaction(i) {
                            let fv = pair
                                .f
                                .eval(&[alg.s_inv_basis(t.h)?, alg.basis(th.idx[2])]);
                            if fv.is_zero() {
                                continue;
                            }
                            let u = m.act_vec(
                                alg.s_basis(th.idx[1]),
                                &crate::linalg::Vector::unit(field, dm, t.v),
                            );
                            for (k, cu) in u.support() {
                                for tu in m.comodule().coaction(k) {
                                    let gv = pair.g.eval(&[
                                        alg.basis(th.idx[0]),
                                        alg.s_inv_basis(tu.h)?,
                                    ]);
                                    if gv.is_zero() {
                                        continue;
                                    }
                                    let w = &(&(&(&th.coeff * &t.coeff) * &fv)
                                        * &(cu * &tu.coeff))
                                        * &gv;
                                    *actions[h].at_mut(i, tu.v) =
                                        actions[h].at(i, tu.v) + &w;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let dual = YetterDrinfeldModule::new(base.dual.clone(), Flavor::LL, actions)?;

    let report = check_yd(&dual);
    if let Some(item) = report.failures().next() {
        return Err(DqhaError::ValidationFailed(format!(
            "dual module fails {}: {}",
            item.name,
            item.detail.as_deref().unwrap_or("")
        )));
    }

    let out = YdDualPair {
        primal: m.clone(),
        dual,
        ev: base.ev,
        coev: base.coev,
        handedness,
    };
    let morphism = check_yd_morphisms(&out)?;
    if let Some(item) = morphism.failures().next() {
        return Err(DqhaError::NotYDMorphism(format!(
            "{}: {}",
            item.name,
            item.detail.as_deref().unwrap_or("")
        )));
    }
    let snake = check_snake_yd(&out)?;
    if let Some(item) = snake.failures().next() {
        return Err(DqhaError::SnakeFailed(format!(
            "{}: {}",
            item.name,
            item.detail.as_deref().unwrap_or("")
        )));
    }
    Ok(out)
}

/// Are ev and coev morphisms in the module category? Checks H-colinearity
/// against the tensor comodules and compatibility with the tensor actions
/// (`ev o action_h = eps(h) ev`, `action_h o coev = eps(h) coev`).
pub fn check_yd_morphisms(p: &YdDualPair) -> Result<CheckReport> {
    let alg = p.primal.alg().clone();
    let d = alg.dim();
    let mut report = CheckReport::new();

    // domains per handedness: ev on Dual (x) M (left) or M (x) Dual (right);
    // coev into M (x) Dual (left) or Dual (x) M (right)
    let (ev_pair, coev_pair) = match p.handedness {
        Handedness::LeftDual => ((&p.dual, &p.primal), (&p.primal, &p.dual)),
        Handedness::RightDual => ((&p.primal, &p.dual), (&p.dual, &p.primal)),
    };
    let ev_tensor = tensor_yd(ev_pair.0, ev_pair.1)?;
    let coev_tensor = tensor_yd(coev_pair.0, coev_pair.1)?;
    let trivial = Comodule::trivial(alg.clone(), ComoduleSide::Left);

    report.push(
        "ev is colinear",
        comodule_morphism_failure(&p.ev, ev_tensor.comodule(), &trivial),
    );
    report.push(
        "coev is colinear",
        comodule_morphism_failure(&p.coev, &trivial, coev_tensor.comodule()),
    );

    let mut ev_fail = None;
    for h in 0..d {
        let lhs = p.ev.compose(ev_tensor.action_basis(h));
        let mut rhs = p.ev.clone();
        rhs.scale(alg.eps_basis(h));
        if lhs != rhs {
            ev_fail = Some(format!(
                "ev does not intertwine the action of {}",
                alg.basis_name(h)
            ));
            break;
        }
    }
    report.push("ev intertwines the action", ev_fail);

    let mut coev_fail = None;
    for h in 0..d {
        let lhs = coev_tensor.action_basis(h).compose(&p.coev);
        let mut rhs = p.coev.clone();
        rhs.scale(alg.eps_basis(h));
        if lhs != rhs {
            coev_fail = Some(format!(
                "coev does not intertwine the action of {}",
                alg.basis_name(h)
            ));
            break;
        }
    }
    report.push("coev intertwines the action", coev_fail);
    Ok(report)
}

/// Identity suite for the bilinear elements used by the dual action
/// formulas: eq-3.2 and eq-3.3.
pub fn check_lemma_32(h: &Arc<DualQuasiHopfAlgebra>) -> Result<CheckReport> {
    let field = h.field();
    let d = h.dim();
    let e = h.canonical()?;
    let pair = h.twist_pair()?;
    let mut report = CheckReport::new();

    // eq-3.2: q^L(a1, b1 c1) sigma(a2, b2, c2)
    //   = q^L(a2, b1) sigma^{-1}(s(a1), a3 b2, c)
    report.push(
        "eq-3.2",
        scan_fail(tuple_count(3, d), |flat| {
            let t = decode_tuple(flat, 3, d);
            let run = || -> Result<(crate::scalar::Scalar, crate::scalar::Scalar)> {
                let (a, b, c) = (t[0], t[1], t[2]);
                let mut lhs = field.zero();
                for ta in h.delta_k(a, 2)?.iter() {
                    for tb in h.delta_k(b, 2)?.iter() {
                        for tc in h.delta_k(c, 2)?.iter() {
                            let s =
                                h.sigma().value(&[ta.idx[1], tb.idx[1], tc.idx[1]]);
                            if s.is_zero() {
                                continue;
                            }
                            let q = e.q_l.eval(&[
                                h.basis(ta.idx[0]),
                                h.mul_basis(tb.idx[0], tc.idx[0]),
                            ]);
                            let w = &(&(&ta.coeff * &tb.coeff) * &tc.coeff)
                                * &(&q * s);
                            lhs = &lhs + &w;
                        }
                    }
                }
                let mut rhs = field.zero();
                for ta in h.delta_k(a, 3)?.iter() {
                    for tb in h.delta_k(b, 2)?.iter() {
                        let q = e.q_l.value(&[ta.idx[1], tb.idx[0]]);
                        if q.is_zero() {
                            continue;
                        }
                        let s = h.sigma_inv().eval(&[
                            h.s_basis(ta.idx[0]),
                            h.mul_basis(ta.idx[2], tb.idx[1]),
                            h.basis(c),
                        ]);
                        let w = &(&(&ta.coeff * &tb.coeff) * q) * &s;
                        rhs = &rhs + &w;
                    }
                }
                Ok((lhs, rhs))
            };
            match run() {
                Ok((lhs, rhs)) if lhs == rhs => None,
                Ok((lhs, rhs)) => Some(format!(
                    "at {}: lhs = {lhs}, rhs = {rhs}",
                    h.tuple_name(&t)
                )),
                Err(err) => Some(format!("at {}: {err}", h.tuple_name(&t))),
            }
        }),
    );

    // eq-3.3: p^R(s(a1), a3 b3) q^L(a2, b2) q^L(b1, s(a4 b4)) = f(a, b)
    report.push(
        "eq-3.3",
        scan_fail(tuple_count(2, d), |flat| {
            let t = decode_tuple(flat, 2, d);
            let run = || -> Result<(crate::scalar::Scalar, crate::scalar::Scalar)> {
                let (a, b) = (t[0], t[1]);
                let lhs = lemma_33_lhs(h, a, b)?;
                Ok((lhs, pair.f.value(&[a, b]).clone()))
            };
            match run() {
                Ok((lhs, rhs)) if lhs == rhs => None,
                Ok((lhs, rhs)) => Some(format!(
                    "at {}: lhs = {lhs}, rhs = {rhs}",
                    h.tuple_name(&t)
                )),
                Err(err) => Some(format!("at {}: {err}", h.tuple_name(&t))),
            }
        }),
    );
    Ok(report)
}

/// Left side of eq-3.3 at one basis pair (exposed for spot checks).
pub fn lemma_33_lhs(
    h: &DualQuasiHopfAlgebra,
    a: usize,
    b: usize,
) -> Result<crate::scalar::Scalar> {
    let field = h.field();
    let e = h.canonical()?;
    let mut lhs = field.zero();
    for ta in h.delta_k(a, 4)?.iter() {
        for tb in h.delta_k(b, 4)?.iter() {
            let q1 = e.q_l.value(&[ta.idx[1], tb.idx[1]]);
            if q1.is_zero() {
                continue;
            }
            let p = e.p_r.eval(&[
                h.s_basis(ta.idx[0]),
                h.mul_basis(ta.idx[2], tb.idx[2]),
            ]);
            if p.is_zero() {
                continue;
            }
            let q2 = e.q_l.eval(&[
                h.basis(tb.idx[0]),
                &h.s_vec(h.mul_basis(ta.idx[3], tb.idx[3])),
            ]);
            let w = &(&(&ta.coeff * &tb.coeff) * q1) * &(&p * &q2);
            lhs = &lhs + &w;
        }
    }
    Ok(lhs)
}
