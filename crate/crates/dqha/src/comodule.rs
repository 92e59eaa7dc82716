//! Left and right comodules over the underlying coalgebra, their tensor
//! products, and the reassociator-twisted associativity constraints of the
//! comodule categories.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::DualQuasiHopfAlgebra;
use crate::error::{DqhaError, Result};
use crate::linalg::{LinearMap, Vector};
use crate::report::CheckReport;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComoduleSide {
    Left,
    Right,
}

/// One summand of a coaction: `coeff * e_h (x) b_v` for a left comodule,
/// `coeff * b_v (x) e_h` for a right one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoTerm {
    pub h: usize,
    pub v: usize,
    pub coeff: Scalar,
}

#[derive(Clone, Debug)]
pub struct Comodule {
    alg: Arc<DualQuasiHopfAlgebra>,
    side: ComoduleSide,
    basis_names: Vec<String>,
    /// `coaction[m]` is the term list of `rho(b_m)`.
    coaction: Vec<Vec<CoTerm>>,
}

impl PartialEq for Comodule {
    fn eq(&self, other: &Comodule) -> bool {
        self.side == other.side
            && self.basis_names == other.basis_names
            && self.coaction == other.coaction
            && Arc::ptr_eq(&self.alg, &other.alg)
    }
}

impl Comodule {
    /// Build from sparse coaction triples `(m, h, v, c)` adding
    /// `c * e_h (x) b_v` (left) or `c * b_v (x) e_h` (right) to `rho(b_m)`.
    pub fn new(
        alg: Arc<DualQuasiHopfAlgebra>,
        side: ComoduleSide,
        basis_names: Vec<String>,
        triples: &[(usize, usize, usize, Scalar)],
    ) -> Result<Comodule> {
        let dm = basis_names.len();
        if dm == 0 {
            return Err(DqhaError::ShapeError("empty comodule basis".into()));
        }
        let d = alg.dim();
        let mut maps: Vec<HashMap<(usize, usize), Scalar>> = vec![HashMap::new(); dm];
        for (m, h, v, c) in triples {
            if *m >= dm || *v >= dm || *h >= d {
                return Err(DqhaError::ShapeError(format!(
                    "coaction index out of range: ({m}, {h}, {v})"
                )));
            }
            let slot = maps[*m]
                .entry((*h, *v))
                .or_insert_with(|| alg.field().zero());
            *slot = &*slot + c;
        }
        let coaction = maps
            .into_iter()
            .map(|m| {
                let mut terms: Vec<CoTerm> = m
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|((h, v), coeff)| CoTerm { h, v, coeff })
                    .collect();
                terms.sort_by_key(|t| (t.h, t.v));
                terms
            })
            .collect();
        Ok(Comodule {
            alg,
            side,
            basis_names,
            coaction,
        })
    }

    /// The unit object: the base field with the trivial coaction.
    pub fn trivial(alg: Arc<DualQuasiHopfAlgebra>, side: ComoduleSide) -> Comodule {
        let triples: Vec<(usize, usize, usize, Scalar)> = alg
            .unit_vec()
            .support()
            .map(|(h, c)| (0, h, 0, c.clone()))
            .collect();
        Comodule::new(alg, side, vec!["1".into()], &triples).expect("trivial comodule")
    }

    pub fn alg(&self) -> &Arc<DualQuasiHopfAlgebra> {
        &self.alg
    }

    pub fn side(&self) -> ComoduleSide {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis_names[i]
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn coaction(&self, m: usize) -> &[CoTerm] {
        &self.coaction[m]
    }

    pub fn coaction_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (m, terms) in self.coaction.iter().enumerate() {
            for t in terms {
                out.push((m, t.h, t.v, t.coeff.clone()));
            }
        }
        out
    }
}

/// Comodule axiom report: coassociativity of the coaction against the
/// coproduct, and the counit law.
pub fn check_comodule(c: &Comodule) -> CheckReport {
    let mut report = CheckReport::new();
    let alg = c.alg();
    let field = alg.field();

    let mut coassoc_fail = None;
    'outer: for m in 0..c.dim() {
        // both sides as maps into H (x) H (x) M (left) or M (x) H (x) H
        // (right), keyed (h1, h2, v)
        let mut lhs: HashMap<(usize, usize, usize), Scalar> = HashMap::new();
        let mut rhs: HashMap<(usize, usize, usize), Scalar> = HashMap::new();
        for t in c.coaction(m) {
            // coproduct applied to the H leg
            let delta = match alg.delta_k(t.h, 2) {
                Ok(d) => d,
                Err(e) => {
                    coassoc_fail = Some(format!("at {}: {e}", c.basis_name(m)));
                    break 'outer;
                }
            };
            for d in delta.iter() {
                let v = &t.coeff * &d.coeff;
                let slot = lhs
                    .entry((d.idx[0], d.idx[1], t.v))
                    .or_insert_with(|| field.zero());
                *slot = &*slot + &v;
            }
            // coaction applied again to the M leg
            for u in c.coaction(t.v) {
                let v = &t.coeff * &u.coeff;
                let key = match c.side() {
                    ComoduleSide::Left => (t.h, u.h, u.v),
                    ComoduleSide::Right => (u.h, t.h, u.v),
                };
                let slot = rhs.entry(key).or_insert_with(|| field.zero());
                *slot = &*slot + &v;
            }
        }
        lhs.retain(|_, v| !v.is_zero());
        rhs.retain(|_, v| !v.is_zero());
        if lhs != rhs {
            coassoc_fail = Some(format!(
                "coaction coassociativity fails at basis element {}",
                c.basis_name(m)
            ));
            break;
        }
    }
    report.push("coaction coassociativity", coassoc_fail);

    let mut counit_fail = None;
    for m in 0..c.dim() {
        let mut img = Vector::zero(field, c.dim());
        for t in c.coaction(m) {
            let v = &t.coeff * alg.eps_basis(t.h);
            img.coords[t.v] = &img.coords[t.v] + &v;
        }
        if img != Vector::unit(field, c.dim(), m) {
            counit_fail = Some(format!(
                "counit law fails at basis element {}: got {img}",
                c.basis_name(m)
            ));
            break;
        }
    }
    report.push("coaction counit", counit_fail);
    report
}

/// Tensor product of two same-sided comodules; basis flat index
/// `m * dim(N) + n`, diagonal coaction multiplied in H.
pub fn tensor_comodule(m: &Comodule, n: &Comodule) -> Result<Comodule> {
    if m.side() != n.side() {
        return Err(DqhaError::FlavorMismatch(
            "tensor of a left and a right comodule".into(),
        ));
    }
    if !Arc::ptr_eq(m.alg(), n.alg()) {
        return Err(DqhaError::ShapeMismatch(
            "comodules over different algebras".into(),
        ));
    }
    let alg = m.alg().clone();
    let dn = n.dim();
    let mut names = Vec::with_capacity(m.dim() * dn);
    for a in 0..m.dim() {
        for b in 0..dn {
            names.push(format!("{}(x){}", m.basis_name(a), n.basis_name(b)));
        }
    }
    let mut triples = Vec::new();
    for a in 0..m.dim() {
        for b in 0..dn {
            for ta in m.coaction(a) {
                for tb in n.coaction(b) {
                    let prod = alg.mul_basis(ta.h, tb.h);
                    let c = &ta.coeff * &tb.coeff;
                    for (h, w) in prod.support() {
                        triples.push((a * dn + b, h, ta.v * dn + tb.v, &c * w));
                    }
                }
            }
        }
    }
    Comodule::new(alg, m.side(), names, &triples)
}

/// The associativity constraint `a_{M,N,P}: (M (x) N) (x) P -> M (x) (N (x) P)`
/// as a matrix on the common flat basis. Left comodules weight by
/// `sigma^{-1}` of the three H legs, right comodules by `sigma`.
pub fn associator(m: &Comodule, n: &Comodule, p: &Comodule) -> Result<LinearMap> {
    associator_with(m, n, p, false)
}

/// Inverse associativity constraint (swaps the reassociator for its
/// convolution inverse).
pub fn associator_inv(m: &Comodule, n: &Comodule, p: &Comodule) -> Result<LinearMap> {
    associator_with(m, n, p, true)
}

fn associator_with(m: &Comodule, n: &Comodule, p: &Comodule, invert: bool) -> Result<LinearMap> {
    if m.side() != n.side() || n.side() != p.side() {
        return Err(DqhaError::FlavorMismatch(
            "associator of mixed-sided comodules".into(),
        ));
    }
    let alg = m.alg();
    let field = alg.field();
    let (dn, dp) = (n.dim(), p.dim());
    let total = m.dim() * dn * dp;
    let mut out = LinearMap::zero(field, total, total);
    let form = match (m.side(), invert) {
        (ComoduleSide::Left, false) | (ComoduleSide::Right, true) => alg.sigma_inv(),
        (ComoduleSide::Left, true) | (ComoduleSide::Right, false) => alg.sigma(),
    };
    for a in 0..m.dim() {
        for b in 0..dn {
            for c in 0..dp {
                let col = (a * dn + b) * dp + c;
                for ta in m.coaction(a) {
                    for tb in n.coaction(b) {
                        for tc in p.coaction(c) {
                            let w = form.value(&[ta.h, tb.h, tc.h]);
                            if w.is_zero() {
                                continue;
                            }
                            let coeff =
                                &(&(&ta.coeff * &tb.coeff) * &tc.coeff) * w;
                            let row = (ta.v * dn + tb.v) * dp + tc.v;
                            *out.at_mut(row, col) = out.at(row, col) + &coeff;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Is `f: M -> N` a map of comodules? Returns the first failing basis
/// element's description.
pub fn comodule_morphism_failure(f: &LinearMap, m: &Comodule, n: &Comodule) -> Option<String> {
    if m.side() != n.side() {
        return Some("comodules have different sides".into());
    }
    if f.rows != n.dim() || f.cols != m.dim() {
        return Some(format!(
            "map has shape {}x{}, expected {}x{}",
            f.rows,
            f.cols,
            n.dim(),
            m.dim()
        ));
    }
    let field = m.alg().field();
    for v in 0..m.dim() {
        // rho_N(f(v)) vs (id (x) f)(rho_M(v)), keyed (h, target)
        let mut lhs: HashMap<(usize, usize), Scalar> = HashMap::new();
        for (w, c) in f.column(v).support() {
            for t in n.coaction(w) {
                let val = &t.coeff * c;
                let slot = lhs.entry((t.h, t.v)).or_insert_with(|| field.zero());
                *slot = &*slot + &val;
            }
        }
        let mut rhs: HashMap<(usize, usize), Scalar> = HashMap::new();
        for t in m.coaction(v) {
            for (w, c) in f.column(t.v).support() {
                let val = &t.coeff * c;
                let slot = rhs.entry((t.h, w)).or_insert_with(|| field.zero());
                *slot = &*slot + &val;
            }
        }
        lhs.retain(|_, x| !x.is_zero());
        rhs.retain(|_, x| !x.is_zero());
        if lhs != rhs {
            return Some(format!(
                "coaction not intertwined at basis element {}",
                m.basis_name(v)
            ));
        }
    }
    None
}

/// Pentagon identity for four comodules:
/// `a_{M,N,P(x)Q} o a_{M(x)N,P,Q} = (id (x) a_{N,P,Q}) o a_{M,N(x)P,Q} o (a_{M,N,P} (x) id)`.
pub fn pentagon_failure(
    m: &Comodule,
    n: &Comodule,
    p: &Comodule,
    q: &Comodule,
) -> Result<Option<String>> {
    let field = m.alg().field();
    let mn = tensor_comodule(m, n)?;
    let np = tensor_comodule(n, p)?;
    let pq = tensor_comodule(p, q)?;
    let lhs = associator(m, n, &pq)?.compose(&associator(&mn, p, q)?);
    let id_m = LinearMap::identity(field, m.dim());
    let id_q = LinearMap::identity(field, q.dim());
    let rhs = id_m
        .kronecker(&associator(n, p, q)?)
        .compose(&associator(m, &np, q)?)
        .compose(&associator(m, n, p)?.kronecker(&id_q));
    Ok(if lhs == rhs {
        None
    } else {
        Some("pentagon identity fails".into())
    })
}

/// Triangle identity with the unit object:
/// `(id (x) l_N) o a_{M,1,N} = r_M (x) id` reduces, with trivial unit
/// constraints, to `a_{M,1,N} = id`.
pub fn triangle_failure(m: &Comodule, n: &Comodule) -> Result<Option<String>> {
    let unit = Comodule::trivial(m.alg().clone(), m.side());
    let a = associator(m, &unit, n)?;
    Ok(if a.is_identity() {
        None
    } else {
        Some("associator with the unit object in the middle is not the identity".into())
    })
}
