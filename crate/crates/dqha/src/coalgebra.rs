//! Coassociative coalgebras given by structure constants, with a memoized
//! iterated-coproduct (Sweedler) engine.
//!
//! `delta_k(i, k)` returns `Delta^{(k)}(e_i)` as a sparse sum of basis
//! tensors; every formula in the crate is evaluated by contracting these
//! term lists against multilinear forms and extending linearly.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{DqhaError, Result};
use crate::form::MultilinearForm;
use crate::report::CheckReport;
use crate::scalar::{Scalar, ScalarField};

/// One summand of an iterated coproduct: `coeff * e_{idx[0]} (x) ... (x) e_{idx[k-1]}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub idx: Vec<usize>,
    pub coeff: Scalar,
}

/// Default iterated-coproduct cap, overridable via `DQHA_ARITY_CAP`.
pub fn default_arity_cap() -> usize {
    std::env::var("DQHA_ARITY_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(8)
}

#[derive(Debug)]
pub struct Coalgebra {
    field: ScalarField,
    dim: usize,
    basis_names: Vec<String>,
    /// `delta[i]` is the term list of `Delta(e_i)` (arity 2).
    delta: Vec<Vec<Term>>,
    epsilon: MultilinearForm,
    cap: usize,
    memo: Mutex<HashMap<(usize, usize), Arc<Vec<Term>>>>,
}

impl Clone for Coalgebra {
    fn clone(&self) -> Coalgebra {
        Coalgebra {
            field: self.field,
            dim: self.dim,
            basis_names: self.basis_names.clone(),
            delta: self.delta.clone(),
            epsilon: self.epsilon.clone(),
            cap: self.cap,
            memo: Mutex::new(self.memo.lock().unwrap().clone()),
        }
    }
}

impl PartialEq for Coalgebra {
    fn eq(&self, other: &Coalgebra) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.basis_names == other.basis_names
            && self.canonical_delta() == other.canonical_delta()
            && self.epsilon == other.epsilon
    }
}

impl Coalgebra {
    /// Build from sparse comultiplication triples `(i, j, k, v)` meaning
    /// `Delta(e_i) += v e_j (x) e_k` and counit values per basis element.
    /// Only shapes are checked here; axioms are the business of
    /// [`check_coalgebra`].
    pub fn new(
        field: ScalarField,
        basis_names: Vec<String>,
        delta_triples: &[(usize, usize, usize, Scalar)],
        epsilon_values: Vec<Scalar>,
    ) -> Result<Coalgebra> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(DqhaError::ShapeError("empty basis".into()));
        }
        if epsilon_values.len() != dim {
            return Err(DqhaError::DimensionMismatch {
                expected: dim,
                got: epsilon_values.len(),
            });
        }
        let mut delta: Vec<HashMap<(usize, usize), Scalar>> = vec![HashMap::new(); dim];
        for (i, j, k, v) in delta_triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(DqhaError::ShapeError(format!(
                    "delta index out of range: ({i}, {j}, {k})"
                )));
            }
            let slot = delta[*i].entry((*j, *k)).or_insert_with(|| field.zero());
            *slot = &*slot + v;
        }
        let delta = delta
            .into_iter()
            .map(|m| {
                let mut terms: Vec<Term> = m
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|((j, k), v)| Term {
                        idx: vec![j, k],
                        coeff: v,
                    })
                    .collect();
                terms.sort_by(|a, b| a.idx.cmp(&b.idx));
                terms
            })
            .collect();
        let mut epsilon = MultilinearForm::zero(field, 1, dim);
        for (i, v) in epsilon_values.into_iter().enumerate() {
            epsilon.set(&[i], v);
        }
        Ok(Coalgebra {
            field,
            dim,
            basis_names,
            delta,
            epsilon,
            cap: default_arity_cap(),
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity_cap(&self) -> usize {
        self.cap
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis_names[i]
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn epsilon(&self) -> &MultilinearForm {
        &self.epsilon
    }

    pub fn delta_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, terms) in self.delta.iter().enumerate() {
            for t in terms {
                out.push((i, t.idx[0], t.idx[1], t.coeff.clone()));
            }
        }
        out
    }

    fn canonical_delta(&self) -> Vec<Vec<Term>> {
        self.delta.clone()
    }

    /// `Delta^{(k)}(e_i)` as a memoized sparse term list; `Delta^{(1)} = id`.
    pub fn delta_k(&self, i: usize, k: usize) -> Result<Arc<Vec<Term>>> {
        if k == 0 || k > self.cap {
            return Err(DqhaError::ArityCapExceeded {
                requested: k,
                cap: self.cap,
            });
        }
        if let Some(hit) = self.memo.lock().unwrap().get(&(i, k)) {
            return Ok(hit.clone());
        }
        let result: Vec<Term> = if k == 1 {
            vec![Term {
                idx: vec![i],
                coeff: self.field.one(),
            }]
        } else {
            // Delta^{(k)} = (id^{k-2} (x) Delta) o Delta^{(k-1)}
            let prev = self.delta_k(i, k - 1)?;
            let mut merged: HashMap<Vec<usize>, Scalar> = HashMap::new();
            for t in prev.iter() {
                let last = *t.idx.last().expect("nonempty tuple");
                for d in &self.delta[last] {
                    let mut idx = t.idx.clone();
                    idx.pop();
                    idx.push(d.idx[0]);
                    idx.push(d.idx[1]);
                    let v = &t.coeff * &d.coeff;
                    let slot = merged.entry(idx).or_insert_with(|| self.field.zero());
                    *slot = &*slot + &v;
                }
            }
            let mut terms: Vec<Term> = merged
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(idx, coeff)| Term { idx, coeff })
                .collect();
            terms.sort_by(|a, b| a.idx.cmp(&b.idx));
            terms
        };
        let arc = Arc::new(result);
        self.memo
            .lock()
            .unwrap()
            .insert((i, k), arc.clone());
        Ok(arc)
    }
}

/// Per-axiom coassociativity and counit report, naming the first failing
/// basis element.
pub fn check_coalgebra(c: &Coalgebra) -> CheckReport {
    let mut report = CheckReport::new();

    // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    let mut coassoc_fail = None;
    for i in 0..c.dim() {
        let left = expand(c, i, true);
        let right = expand(c, i, false);
        if left != right {
            coassoc_fail = Some(format!(
                "coassociativity fails at basis element {}",
                c.basis_name(i)
            ));
            break;
        }
    }
    report.push("coassociativity", coassoc_fail);

    // counit: (eps (x) id) Delta = (id (x) eps) Delta = id
    let mut counit_fail = None;
    for i in 0..c.dim() {
        let mut left = vec![c.field().zero(); c.dim()];
        let mut right = vec![c.field().zero(); c.dim()];
        if let Ok(terms) = c.delta_k(i, 2) {
            for t in terms.iter() {
                left[t.idx[1]] = &left[t.idx[1]] + &(&t.coeff * c.epsilon().value(&[t.idx[0]]));
                right[t.idx[0]] = &right[t.idx[0]] + &(&t.coeff * c.epsilon().value(&[t.idx[1]]));
            }
        }
        let ok = (0..c.dim()).all(|j| {
            let expect = if i == j { c.field().one() } else { c.field().zero() };
            left[j] == expect && right[j] == expect
        });
        if !ok {
            counit_fail = Some(format!("counit fails at basis element {}", c.basis_name(i)));
            break;
        }
    }
    report.push("counit", counit_fail);
    report
}

/// Expand `Delta` twice, on the left or right slot, into canonical arity-3
/// term maps.
fn expand(c: &Coalgebra, i: usize, left_slot: bool) -> HashMap<Vec<usize>, Scalar> {
    let mut out: HashMap<Vec<usize>, Scalar> = HashMap::new();
    for t in c.delta_k(i, 2).expect("arity 2 within cap").iter() {
        let (expandee, fixed) = if left_slot {
            (t.idx[0], t.idx[1])
        } else {
            (t.idx[1], t.idx[0])
        };
        for d in c.delta_k(expandee, 2).expect("arity 2 within cap").iter() {
            let idx = if left_slot {
                vec![d.idx[0], d.idx[1], fixed]
            } else {
                vec![fixed, d.idx[0], d.idx[1]]
            };
            let v = &t.coeff * &d.coeff;
            let slot = out.entry(idx).or_insert_with(|| c.field().zero());
            *slot = &*slot + &v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(f: ScalarField, n: i64) -> Scalar {
        f.from_i64(n)
    }

    /// kZ2: grouplike basis {e, g}.
    fn group_z2() -> Coalgebra {
        let f = ScalarField::Rationals;
        Coalgebra::new(
            f,
            vec!["e".into(), "g".into()],
            &[(0, 0, 0, s(f, 1)), (1, 1, 1, s(f, 1))],
            vec![s(f, 1), s(f, 1)],
        )
        .unwrap()
    }

    /// k^{Z2}: dual group algebra basis {d_e, d_g}.
    fn dual_z2() -> Coalgebra {
        let f = ScalarField::Rationals;
        Coalgebra::new(
            f,
            vec!["d_e".into(), "d_g".into()],
            &[
                (0, 0, 0, s(f, 1)),
                (0, 1, 1, s(f, 1)),
                (1, 0, 1, s(f, 1)),
                (1, 1, 0, s(f, 1)),
            ],
            vec![s(f, 1), s(f, 0)],
        )
        .unwrap()
    }

    #[test]
    fn grouplike_iterated_coproduct() {
        let c = group_z2();
        let t = c.delta_k(1, 3).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].idx, vec![1, 1, 1]);
        assert!(t[0].coeff.is_one());
    }

    #[test]
    fn dual_group_coproduct() {
        let c = dual_z2();
        // Delta(d_e) = d_e (x) d_e + d_g (x) d_g
        let t = c.delta_k(0, 2).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].idx, vec![0, 0]);
        assert_eq!(t[1].idx, vec![1, 1]);
    }

    #[test]
    fn counit_recovers_identity() {
        let c = dual_z2();
        for i in 0..2 {
            let mut acc = vec![c.field().zero(); 2];
            for t in c.delta_k(i, 2).unwrap().iter() {
                acc[t.idx[1]] = &acc[t.idx[1]] + &(&t.coeff * c.epsilon().value(&[t.idx[0]]));
            }
            for (j, v) in acc.iter().enumerate() {
                assert_eq!(v.is_one(), i == j);
                assert_eq!(v.is_zero(), i != j);
            }
        }
    }

    #[test]
    fn checker_passes_valid_examples() {
        assert!(check_coalgebra(&group_z2()).passed());
        assert!(check_coalgebra(&dual_z2()).passed());
    }

    #[test]
    fn checker_flags_broken_counit() {
        let f = ScalarField::Rationals;
        let c = Coalgebra::new(
            f,
            vec!["e".into(), "g".into()],
            &[(0, 0, 0, s(f, 1)), (1, 1, 1, s(f, 1))],
            vec![s(f, 1), s(f, 0)], // eps(g) = 0
        )
        .unwrap();
        let report = check_coalgebra(&c);
        assert!(!report.passed());
        let item = report.item("counit").unwrap();
        assert!(!item.pass);
        assert!(item.detail.as_ref().unwrap().contains('g'));
    }

    #[test]
    fn arity_cap_enforced() {
        let c = group_z2();
        assert!(matches!(
            c.delta_k(0, c.arity_cap() + 1),
            Err(DqhaError::ArityCapExceeded { .. })
        ));
    }

    #[test]
    fn coproduct_splitting_law() {
        // Delta^{(j+k)} = (Delta^{(j)} (x) Delta^{(k)}) o Delta for small j, k
        let c = dual_z2();
        for i in 0..2 {
            for j in 1..4usize {
                for k in 1..4usize {
                    let direct = c.delta_k(i, j + k).unwrap();
                    let mut merged: HashMap<Vec<usize>, Scalar> = HashMap::new();
                    for t in c.delta_k(i, 2).unwrap().iter() {
                        for a in c.delta_k(t.idx[0], j).unwrap().iter() {
                            for b in c.delta_k(t.idx[1], k).unwrap().iter() {
                                let mut idx = a.idx.clone();
                                idx.extend_from_slice(&b.idx);
                                let v = &(&t.coeff * &a.coeff) * &b.coeff;
                                let slot =
                                    merged.entry(idx).or_insert_with(|| c.field().zero());
                                *slot = &*slot + &v;
                            }
                        }
                    }
                    merged.retain(|_, v| !v.is_zero());
                    let direct_map: HashMap<Vec<usize>, Scalar> = direct
                        .iter()
                        .map(|t| (t.idx.clone(), t.coeff.clone()))
                        .collect();
                    assert_eq!(direct_map, merged, "splitting law at i={i}, j={j}, k={k}");
                }
            }
        }
    }
}
