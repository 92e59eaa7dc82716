//! The canonical bilinear elements `p^R, q^R, p^L, q^L` and `U`, with the
//! exhaustive identity suite that pins them down.

use crate::algebra::DualQuasiHopfAlgebra;
use crate::error::{DqhaError, Result};
use crate::exec::{decode_tuple, scan_fail, tuple_count};
use crate::form::MultilinearForm;
use crate::linalg::Vector;
use crate::report::CheckReport;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalElements {
    pub p_r: MultilinearForm,
    pub q_r: MultilinearForm,
    pub p_l: MultilinearForm,
    pub q_l: MultilinearForm,
    pub u: MultilinearForm,
}

impl CanonicalElements {
    /// Compute all five elements and validate their identity suite
    /// (eq-2.1 through eq-2.8); requires a bijective antipode.
    pub fn compute(h: &DualQuasiHopfAlgebra) -> Result<CanonicalElements> {
        let elems = compute_raw(h)?;
        let report = check_identities(h, &elems)?;
        if let Some(item) = report.failures().next() {
            return Err(DqhaError::ValidationFailed(format!(
                "{}: {}",
                item.name,
                item.detail.as_deref().unwrap_or("")
            )));
        }
        Ok(elems)
    }
}

/// The four bilinear elements `(p^R, q^R, p^L, q^L)`, validated against
/// the identity suite.
pub fn compute_pq(
    h: &DualQuasiHopfAlgebra,
) -> Result<(MultilinearForm, MultilinearForm, MultilinearForm, MultilinearForm)> {
    let e = CanonicalElements::compute(h)?;
    Ok((e.p_r, e.q_r, e.p_l, e.q_l))
}

/// The bilinear element `U`, validated against the identity suite.
pub fn compute_u(h: &DualQuasiHopfAlgebra) -> Result<MultilinearForm> {
    Ok(CanonicalElements::compute(h)?.u)
}

fn compute_raw(h: &DualQuasiHopfAlgebra) -> Result<CanonicalElements> {
    let d = h.dim();
    let field = h.field();
    h.antipode_inv()?;

    let mut p_r = MultilinearForm::zero(field, 2, d);
    let mut q_r = MultilinearForm::zero(field, 2, d);
    let mut p_l = MultilinearForm::zero(field, 2, d);
    let mut q_l = MultilinearForm::zero(field, 2, d);
    for a in 0..d {
        for b in 0..d {
            // p^R(a,b) = sigma^{-1}(a, b1, s(b3)) beta(b2)
            // q^R(a,b) = sigma(a, b3, s^{-1}(b1)) alpha(s^{-1}(b2))
            let mut pv = field.zero();
            let mut qv = field.zero();
            for tb in h.delta_k(b, 3)?.iter() {
                let w = &tb.coeff * h.beta().value(&[tb.idx[1]]);
                if !w.is_zero() {
                    let v = h.sigma_inv().eval(&[
                        h.basis(a),
                        h.basis(tb.idx[0]),
                        h.s_basis(tb.idx[2]),
                    ]);
                    pv = &pv + &(&w * &v);
                }
                let aw = h.alpha_vec(h.s_inv_basis(tb.idx[1])?);
                if !aw.is_zero() {
                    let v = h.sigma().eval(&[
                        h.basis(a),
                        h.basis(tb.idx[2]),
                        h.s_inv_basis(tb.idx[0])?,
                    ]);
                    qv = &qv + &(&(&tb.coeff * &aw) * &v);
                }
            }
            p_r.set(&[a, b], pv);
            q_r.set(&[a, b], qv);

            // p^L(a,b) = sigma(s^{-1}(a3), a1, b) beta(s^{-1}(a2))
            // q^L(a,b) = sigma^{-1}(s(a1), a3, b) alpha(a2)
            let mut plv = field.zero();
            let mut qlv = field.zero();
            for ta in h.delta_k(a, 3)?.iter() {
                let bw = h.beta_vec(h.s_inv_basis(ta.idx[1])?);
                if !bw.is_zero() {
                    let v = h.sigma().eval(&[
                        h.s_inv_basis(ta.idx[2])?,
                        h.basis(ta.idx[0]),
                        h.basis(b),
                    ]);
                    plv = &plv + &(&(&ta.coeff * &bw) * &v);
                }
                let aw = h.alpha().value(&[ta.idx[1]]);
                if !aw.is_zero() {
                    let v = h.sigma_inv().eval(&[
                        h.s_basis(ta.idx[0]),
                        h.basis(ta.idx[2]),
                        h.basis(b),
                    ]);
                    qlv = &qlv + &(&(&ta.coeff * aw) * &v);
                }
            }
            p_l.set(&[a, b], plv);
            q_l.set(&[a, b], qlv);
        }
    }

    // U(a,b) = g(a1,b1) q^R(s(b2), s(a2))
    let pair = h.twist_pair()?;
    let mut u = MultilinearForm::zero(field, 2, d);
    for a in 0..d {
        for b in 0..d {
            let mut uv = field.zero();
            for ta in h.delta_k(a, 2)?.iter() {
                for tb in h.delta_k(b, 2)?.iter() {
                    let g = pair.g.value(&[ta.idx[0], tb.idx[0]]);
                    if g.is_zero() {
                        continue;
                    }
                    let q = q_r.eval(&[h.s_basis(tb.idx[1]), h.s_basis(ta.idx[1])]);
                    uv = &uv + &(&(&(&ta.coeff * &tb.coeff) * g) * &q);
                }
            }
            u.set(&[a, b], uv);
        }
    }

    Ok(CanonicalElements {
        p_r,
        q_r,
        p_l,
        q_l,
        u,
    })
}

fn scan_vec<F>(h: &DualQuasiHopfAlgebra, arity: usize, eval: F) -> Option<String>
where
    F: Fn(&[usize]) -> Result<(Vector, Vector)> + Sync,
{
    let d = h.dim();
    scan_fail(tuple_count(arity, d), |flat| {
        let t = decode_tuple(flat, arity, d);
        match eval(&t) {
            Ok((lhs, rhs)) if lhs == rhs => None,
            Ok((lhs, rhs)) => Some(format!(
                "at {}: lhs = {lhs}, rhs = {rhs}",
                h.tuple_name(&t)
            )),
            Err(e) => Some(format!("at {}: {e}", h.tuple_name(&t))),
        }
    })
}

fn scan_sc<F>(h: &DualQuasiHopfAlgebra, arity: usize, eval: F) -> Option<String>
where
    F: Fn(&[usize]) -> Result<(Scalar, Scalar)> + Sync,
{
    let d = h.dim();
    scan_fail(tuple_count(arity, d), |flat| {
        let t = decode_tuple(flat, arity, d);
        match eval(&t) {
            Ok((lhs, rhs)) if lhs == rhs => None,
            Ok((lhs, rhs)) => Some(format!(
                "at {}: lhs = {lhs}, rhs = {rhs}",
                h.tuple_name(&t)
            )),
            Err(e) => Some(format!("at {}: {e}", h.tuple_name(&t))),
        }
    })
}

/// The full identity suite for the canonical elements. Public entry point:
/// computes the elements from scratch and reports per identity.
pub fn check_pq_identities(h: &DualQuasiHopfAlgebra) -> Result<CheckReport> {
    let elems = compute_raw(h)?;
    check_identities(h, &elems)
}

fn check_identities(h: &DualQuasiHopfAlgebra, e: &CanonicalElements) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let field = h.field();
    let d = h.dim();
    let pair = h.twist_pair()?;

    // eq-2.1: p^R(a1,b) a2 = (a1 b1) p^R(a2,b2) s(b3)
    //         q^R(a2,b) a1 = (a2 b3) q^R(a1,b2) s^{-1}(b1)
    report.push(
        "eq-2.1",
        scan_vec(h, 2, |t| {
            let (a, b) = (t[0], t[1]);
            let mut lhs = Vector::zero(field, d);
            for ta in h.delta_k(a, 2)?.iter() {
                let w = &ta.coeff * e.p_r.value(&[ta.idx[0], b]);
                if !w.is_zero() {
                    lhs.add_scaled(h.basis(ta.idx[1]), &w);
                }
            }
            let mut rhs = Vector::zero(field, d);
            for ta in h.delta_k(a, 2)?.iter() {
                for tb in h.delta_k(b, 3)?.iter() {
                    let w = &(&ta.coeff * &tb.coeff) * e.p_r.value(&[ta.idx[1], tb.idx[1]]);
                    if w.is_zero() {
                        continue;
                    }
                    rhs.add_scaled(
                        &h.mul(h.mul_basis(ta.idx[0], tb.idx[0]), h.s_basis(tb.idx[2])),
                        &w,
                    );
                }
            }
            if lhs != rhs {
                return Ok((lhs, rhs));
            }
            let mut lhs2 = Vector::zero(field, d);
            for ta in h.delta_k(a, 2)?.iter() {
                let w = &ta.coeff * e.q_r.value(&[ta.idx[1], b]);
                if !w.is_zero() {
                    lhs2.add_scaled(h.basis(ta.idx[0]), &w);
                }
            }
            let mut rhs2 = Vector::zero(field, d);
            for ta in h.delta_k(a, 2)?.iter() {
                for tb in h.delta_k(b, 3)?.iter() {
                    let w = &(&ta.coeff * &tb.coeff) * e.q_r.value(&[ta.idx[0], tb.idx[1]]);
                    if w.is_zero() {
                        continue;
                    }
                    rhs2.add_scaled(
                        &h.mul(
                            h.mul_basis(ta.idx[1], tb.idx[2]),
                            h.s_inv_basis(tb.idx[0])?,
                        ),
                        &w,
                    );
                }
            }
            Ok((lhs2, rhs2))
        }),
    );

    // eq-2.2: p^L(a,b1) b2 = s^{-1}(a3) p^L(a2,b2) (a1 b1)
    //         q^L(a,b2) b1 = s(a1) q^L(a2,b1) (a3 b2)
    report.push(
        "eq-2.2",
        scan_vec(h, 2, |t| {
            let (a, b) = (t[0], t[1]);
            let mut lhs = Vector::zero(field, d);
            for tb in h.delta_k(b, 2)?.iter() {
                let w = &tb.coeff * e.p_l.value(&[a, tb.idx[0]]);
                if !w.is_zero() {
                    lhs.add_scaled(h.basis(tb.idx[1]), &w);
                }
            }
            let mut rhs = Vector::zero(field, d);
            for ta in h.delta_k(a, 3)?.iter() {
                for tb in h.delta_k(b, 2)?.iter() {
                    let w = &(&ta.coeff * &tb.coeff) * e.p_l.value(&[ta.idx[1], tb.idx[1]]);
                    if w.is_zero() {
                        continue;
                    }
                    rhs.add_scaled(
                        &h.mul(
                            h.s_inv_basis(ta.idx[2])?,
                            h.mul_basis(ta.idx[0], tb.idx[0]),
                        ),
                        &w,
                    );
                }
            }
            if lhs != rhs {
                return Ok((lhs, rhs));
            }
            let mut lhs2 = Vector::zero(field, d);
            for tb in h.delta_k(b, 2)?.iter() {
                let w = &tb.coeff * e.q_l.value(&[a, tb.idx[1]]);
                if !w.is_zero() {
                    lhs2.add_scaled(h.basis(tb.idx[0]), &w);
                }
            }
            let mut rhs2 = Vector::zero(field, d);
            for ta in h.delta_k(a, 3)?.iter() {
                for tb in h.delta_k(b, 2)?.iter() {
                    let w = &(&ta.coeff * &tb.coeff) * e.q_l.value(&[ta.idx[1], tb.idx[0]]);
                    if w.is_zero() {
                        continue;
                    }
                    rhs2.add_scaled(
                        &h.mul(h.s_basis(ta.idx[0]), h.mul_basis(ta.idx[2], tb.idx[1])),
                        &w,
                    );
                }
            }
            Ok((lhs2, rhs2))
        }),
    );

    // eq-2.3: q^R(a1 b1, s(b3)) p^R(a2, b2) = eps(a) eps(b)
    //         p^L(s(a1), a3 b2) q^L(a2, b1) = eps(a) eps(b)
    report.push(
        "eq-2.3",
        scan_sc(h, 2, |t| {
            let (a, b) = (t[0], t[1]);
            let eps = h.eps_basis(a) * h.eps_basis(b);
            let mut lhs = field.zero();
            for ta in h.delta_k(a, 2)?.iter() {
                for tb in h.delta_k(b, 3)?.iter() {
                    let w = &(&ta.coeff * &tb.coeff) * e.p_r.value(&[ta.idx[1], tb.idx[1]]);
                    if w.is_zero() {
                        continue;
                    }
                    let q = e.q_r.eval(&[
                        h.mul_basis(ta.idx[0], tb.idx[0]),
                        h.s_basis(tb.idx[2]),
                    ]);
                    lhs = &lhs + &(&w * &q);
                }
            }
            if lhs != eps {
                return Ok((lhs, eps));
            }
            let mut lhs2 = field.zero();
            for ta in h.delta_k(a, 3)?.iter() {
                for tb in h.delta_k(b, 2)?.iter() {
                    let w = &(&ta.coeff * &tb.coeff) * e.q_l.value(&[ta.idx[1], tb.idx[0]]);
                    if w.is_zero() {
                        continue;
                    }
                    let p = e.p_l.eval(&[
                        h.s_basis(ta.idx[0]),
                        h.mul_basis(ta.idx[2], tb.idx[1]),
                    ]);
                    lhs2 = &lhs2 + &(&w * &p);
                }
            }
            Ok((lhs2, eps))
        }),
    );

    // eq-2.4: q^L(s^{-1}(a3), a1 b1) p^L(a2, b2) = eps(a) eps(b)
    //         q^R(a1, b2) p^R(a2 b3, s^{-1}(b1)) = eps(a) eps(b)
    report.push(
        "eq-2.4",
        scan_sc(h, 2, |t| {
            let (a, b) = (t[0], t[1]);
            let eps = h.eps_basis(a) * h.eps_basis(b);
            let mut lhs = field.zero();
            for ta in h.delta_k(a, 3)?.iter() {
                for tb in h.delta_k(b, 2)?.iter() {
                    let w = &(&ta.coeff * &tb.coeff) * e.p_l.value(&[ta.idx[1], tb.idx[1]]);
                    if w.is_zero() {
                        continue;
                    }
                    let q = e.q_l.eval(&[
                        h.s_inv_basis(ta.idx[2])?,
                        h.mul_basis(ta.idx[0], tb.idx[0]),
                    ]);
                    lhs = &lhs + &(&w * &q);
                }
            }
            if lhs != eps {
                return Ok((lhs, eps));
            }
            let mut lhs2 = field.zero();
            for ta in h.delta_k(a, 2)?.iter() {
                for tb in h.delta_k(b, 3)?.iter() {
                    let w = &(&ta.coeff * &tb.coeff) * e.q_r.value(&[ta.idx[0], tb.idx[1]]);
                    if w.is_zero() {
                        continue;
                    }
                    let p = e.p_r.eval(&[
                        h.mul_basis(ta.idx[1], tb.idx[2]),
                        h.s_inv_basis(tb.idx[0])?,
                    ]);
                    lhs2 = &lhs2 + &(&w * &p);
                }
            }
            Ok((lhs2, eps))
        }),
    );

    // eq-2.5: q^R(a1,b1) q^R(a2 b2, c1) sigma^{-1}(a3,b3,c2)
    //   = sigma(a2 (b4 c4), s^{-1}(c1), s^{-1}(b1)) f(s^{-1}(c2), s^{-1}(b2)) q^R(a1, b3 c3)
    report.push(
        "eq-2.5",
        scan_sc(h, 3, |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            let mut lhs = field.zero();
            for ta in h.delta_k(a, 3)?.iter() {
                for tb in h.delta_k(b, 3)?.iter() {
                    for tc in h.delta_k(c, 2)?.iter() {
                        let w = &(&(&ta.coeff * &tb.coeff) * &tc.coeff)
                            * &(e.q_r.value(&[ta.idx[0], tb.idx[0]])
                                * h.sigma_inv().value(&[ta.idx[2], tb.idx[2], tc.idx[1]]));
                        if w.is_zero() {
                            continue;
                        }
                        let q = e.q_r.eval(&[
                            h.mul_basis(ta.idx[1], tb.idx[1]),
                            h.basis(tc.idx[0]),
                        ]);
                        lhs = &lhs + &(&w * &q);
                    }
                }
            }
            let mut rhs = field.zero();
            for ta in h.delta_k(a, 2)?.iter() {
                for tb in h.delta_k(b, 4)?.iter() {
                    for tc in h.delta_k(c, 4)?.iter() {
                        let w = &(&ta.coeff * &tb.coeff) * &tc.coeff;
                        let q = e.q_r.eval(&[
                            h.basis(ta.idx[0]),
                            h.mul_basis(tb.idx[2], tc.idx[2]),
                        ]);
                        if q.is_zero() {
                            continue;
                        }
                        let fv = pair.f.eval(&[
                            h.s_inv_basis(tc.idx[1])?,
                            h.s_inv_basis(tb.idx[1])?,
                        ]);
                        if fv.is_zero() {
                            continue;
                        }
                        let s = h.sigma().eval(&[
                            &h.mul(h.basis(ta.idx[1]), h.mul_basis(tb.idx[3], tc.idx[3])),
                            h.s_inv_basis(tc.idx[0])?,
                            h.s_inv_basis(tb.idx[0])?,
                        ]);
                        rhs = &rhs + &(&(&(&w * &q) * &fv) * &s);
                    }
                }
            }
            Ok((lhs, rhs))
        }),
    );

    // eq-2.6: sigma(a1,b1,c1) p^R(a2 b2, c2) p^R(a3, b3)
    //   = sigma^{-1}(a1 (b1 c1), s(c4), s(b4)) p^R(a2, b2 c2) g(b3, c3)
    report.push(
        "eq-2.6",
        scan_sc(h, 3, |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            let mut lhs = field.zero();
            for ta in h.delta_k(a, 3)?.iter() {
                for tb in h.delta_k(b, 3)?.iter() {
                    for tc in h.delta_k(c, 2)?.iter() {
                        let w = &(&(&ta.coeff * &tb.coeff) * &tc.coeff)
                            * &(h.sigma().value(&[ta.idx[0], tb.idx[0], tc.idx[0]])
                                * e.p_r.value(&[ta.idx[2], tb.idx[2]]));
                        if w.is_zero() {
                            continue;
                        }
                        let p = e.p_r.eval(&[
                            h.mul_basis(ta.idx[1], tb.idx[1]),
                            h.basis(tc.idx[1]),
                        ]);
                        lhs = &lhs + &(&w * &p);
                    }
                }
            }
            let mut rhs = field.zero();
            for ta in h.delta_k(a, 2)?.iter() {
                for tb in h.delta_k(b, 4)?.iter() {
                    for tc in h.delta_k(c, 4)?.iter() {
                        let w = &(&ta.coeff * &tb.coeff) * &tc.coeff;
                        let gv = pair.g.value(&[tb.idx[2], tc.idx[2]]);
                        if gv.is_zero() {
                            continue;
                        }
                        let p = e.p_r.eval(&[
                            h.basis(ta.idx[1]),
                            h.mul_basis(tb.idx[1], tc.idx[1]),
                        ]);
                        if p.is_zero() {
                            continue;
                        }
                        let s = h.sigma_inv().eval(&[
                            &h.mul(h.basis(ta.idx[0]), h.mul_basis(tb.idx[0], tc.idx[0])),
                            h.s_basis(tc.idx[3]),
                            h.s_basis(tb.idx[3]),
                        ]);
                        rhs = &rhs + &(&(&(&w * gv) * &p) * &s);
                    }
                }
            }
            Ok((lhs, rhs))
        }),
    );

    // eq-2.7: U(a, b1) s(b2) = s(a1 b1) U(a2, b2) a3
    report.push(
        "eq-2.7",
        scan_vec(h, 2, |t| {
            let (a, b) = (t[0], t[1]);
            let mut lhs = Vector::zero(field, d);
            for tb in h.delta_k(b, 2)?.iter() {
                let w = &tb.coeff * e.u.value(&[a, tb.idx[0]]);
                if !w.is_zero() {
                    lhs.add_scaled(h.s_basis(tb.idx[1]), &w);
                }
            }
            let mut rhs = Vector::zero(field, d);
            for ta in h.delta_k(a, 3)?.iter() {
                for tb in h.delta_k(b, 2)?.iter() {
                    let w = &(&ta.coeff * &tb.coeff) * e.u.value(&[ta.idx[1], tb.idx[1]]);
                    if w.is_zero() {
                        continue;
                    }
                    rhs.add_scaled(
                        &h.mul(
                            &h.s_vec(h.mul_basis(ta.idx[0], tb.idx[0])),
                            h.basis(ta.idx[2]),
                        ),
                        &w,
                    );
                }
            }
            Ok((lhs, rhs))
        }),
    );

    // eq-2.8: U(a, b1 c1) U(b2, c2)
    //   = sigma(a1,b1,c1) sigma(s((a2 b2) c2), a4, b4) U(a3 b3, c3)
    report.push(
        "eq-2.8",
        scan_sc(h, 3, |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            let mut lhs = field.zero();
            for tb in h.delta_k(b, 2)?.iter() {
                for tc in h.delta_k(c, 2)?.iter() {
                    let w = &(&tb.coeff * &tc.coeff) * e.u.value(&[tb.idx[1], tc.idx[1]]);
                    if w.is_zero() {
                        continue;
                    }
                    let u1 = e
                        .u
                        .eval(&[h.basis(a), h.mul_basis(tb.idx[0], tc.idx[0])]);
                    lhs = &lhs + &(&w * &u1);
                }
            }
            let mut rhs = field.zero();
            for ta in h.delta_k(a, 4)?.iter() {
                for tb in h.delta_k(b, 4)?.iter() {
                    for tc in h.delta_k(c, 3)?.iter() {
                        let w = &(&ta.coeff * &tb.coeff) * &tc.coeff;
                        let s1 = h.sigma().value(&[ta.idx[0], tb.idx[0], tc.idx[0]]);
                        if s1.is_zero() {
                            continue;
                        }
                        let u = e.u.eval(&[
                            h.mul_basis(ta.idx[2], tb.idx[2]),
                            h.basis(tc.idx[2]),
                        ]);
                        if u.is_zero() {
                            continue;
                        }
                        let inner = h.mul(
                            h.mul_basis(ta.idx[1], tb.idx[1]),
                            h.basis(tc.idx[1]),
                        );
                        let s2 = h.sigma().eval(&[
                            &h.s_vec(&inner),
                            h.basis(ta.idx[3]),
                            h.basis(tb.idx[3]),
                        ]);
                        rhs = &rhs + &(&(&(&w * s1) * &u) * &s2);
                    }
                }
            }
            Ok((lhs, rhs))
        }),
    );

    Ok(report)
}
