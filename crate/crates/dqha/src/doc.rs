//! JSON documents for algebras and modules: parsing, emission, and
//! builtin-name resolution. Scalars are serialized as strings in the
//! exact format of the scalar layer ("n/d" over the rationals, a decimal
//! residue over a prime field).

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::DualQuasiHopfAlgebra;
use crate::builders::{builtin_algebra, builtin_module};
use crate::coalgebra::Coalgebra;
use crate::comodule::Comodule;
use crate::error::{DqhaError, Result};
use crate::form::MultilinearForm;
use crate::linalg::{LinearMap, Vector};
use crate::scalar::{Scalar, ScalarField};
use crate::yd::{Flavor, YetterDrinfeldModule};

pub type SparseTriple = (usize, usize, usize, String);

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraDocument {
    /// "q" for the rationals, "fp:<p>" for a prime field.
    pub field: String,
    pub dimension: usize,
    pub basis: Vec<String>,
    /// Coproduct triples `(i, j, k, value)`: `delta(e_i) += value e_j (x) e_k`.
    pub delta: Vec<SparseTriple>,
    pub epsilon: Vec<String>,
    /// Multiplication triples `(i, j, k, value)`: `e_i e_j += value e_k`.
    pub mul: Vec<SparseTriple>,
    pub unit: Vec<String>,
    /// Reassociator entries `(i, j, k, value)`; unlisted triples default to
    /// `eps(i) eps(j) eps(k)`.
    #[serde(default)]
    pub sigma: Vec<SparseTriple>,
    /// Antipode matrix, row-major.
    pub antipode: Vec<Vec<String>>,
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_inv: Option<Vec<SparseTriple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_inv: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum AlgebraRef {
    /// `builtin:<name>` or a file path.
    Name(String),
    Inline(AlgebraDocument),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ModuleDocument {
    pub algebra: AlgebraRef,
    /// "LL", "RL", "LR" or "RR".
    pub flavor: String,
    pub dimension: usize,
    pub basis: Vec<String>,
    /// Coaction triples `(m, h, v, value)`.
    pub coaction: Vec<SparseTriple>,
    /// Action triples `(h, j, i, value)`: `e_h` sends basis `j` to
    /// `value * b_i` (plus others).
    pub action: Vec<SparseTriple>,
}

pub fn parse_field(s: &str) -> Result<ScalarField> {
    if s == "q" {
        return Ok(ScalarField::Rationals);
    }
    if let Some(p) = s.strip_prefix("fp:") {
        let p: u64 = p
            .parse()
            .map_err(|_| DqhaError::ParseError(format!("bad prime in field spec: {s}")))?;
        return ScalarField::prime(p);
    }
    Err(DqhaError::ParseError(format!(
        "field must be \"q\" or \"fp:<p>\", got {s}"
    )))
}

pub fn field_name(f: ScalarField) -> String {
    match f {
        ScalarField::Rationals => "q".into(),
        ScalarField::Prime(p) => format!("fp:{p}"),
    }
}

fn parse_scalars(field: ScalarField, xs: &[String]) -> Result<Vec<Scalar>> {
    xs.iter().map(|s| field.parse(s)).collect()
}

fn parse_triples(
    field: ScalarField,
    ts: &[SparseTriple],
) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    ts.iter()
        .map(|(i, j, k, v)| Ok((*i, *j, *k, field.parse(v)?)))
        .collect()
}

fn emit_triples(ts: &[(usize, usize, usize, Scalar)]) -> Vec<SparseTriple> {
    let mut out: Vec<SparseTriple> = ts
        .iter()
        .map(|(i, j, k, v)| (*i, *j, *k, v.to_string()))
        .collect();
    out.sort();
    out
}

fn parse_matrix(field: ScalarField, rows: &[Vec<String>]) -> Result<LinearMap> {
    let parsed: Result<Vec<Vec<Scalar>>> =
        rows.iter().map(|r| parse_scalars(field, r)).collect();
    LinearMap::from_rows(field, parsed?)
}

fn emit_matrix(m: &LinearMap) -> Vec<Vec<String>> {
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m.at(i, j).to_string()).collect())
        .collect()
}

fn form_from_triples(
    field: ScalarField,
    dim: usize,
    eps: &[Scalar],
    triples: &[SparseTriple],
) -> Result<MultilinearForm> {
    // counit default, overridden entrywise
    let mut sigma = MultilinearForm::from_fn(field, 3, dim, |t| {
        &(&eps[t[0]] * &eps[t[1]]) * &eps[t[2]]
    });
    for (i, j, k, v) in triples {
        if *i >= dim || *j >= dim || *k >= dim {
            return Err(DqhaError::ShapeError(format!(
                "sigma index out of range: ({i}, {j}, {k})"
            )));
        }
        sigma.set(&[*i, *j, *k], field.parse(v)?);
    }
    Ok(sigma)
}

impl AlgebraDocument {
    pub fn build(&self) -> Result<Arc<DualQuasiHopfAlgebra>> {
        let field = parse_field(&self.field)?;
        let d = self.dimension;
        if self.basis.len() != d {
            return Err(DqhaError::DimensionMismatch {
                expected: d,
                got: self.basis.len(),
            });
        }
        let epsilon = parse_scalars(field, &self.epsilon)?;
        let coalgebra = Coalgebra::new(
            field,
            self.basis.clone(),
            &parse_triples(field, &self.delta)?,
            epsilon.clone(),
        )?;
        let sigma = form_from_triples(field, d, &epsilon, &self.sigma)?;
        let sigma_inv = self
            .sigma_inv
            .as_ref()
            .map(|ts| form_from_triples(field, d, &epsilon, ts))
            .transpose()?;
        let unit_coords = parse_scalars(field, &self.unit)?;
        if unit_coords.len() != d {
            return Err(DqhaError::DimensionMismatch {
                expected: d,
                got: unit_coords.len(),
            });
        }
        let unit = Vector::from_coords(field, unit_coords);
        let antipode = parse_matrix(field, &self.antipode)?;
        let s_inv = self
            .s_inv
            .as_ref()
            .map(|m| parse_matrix(field, m))
            .transpose()?;
        let alpha_coords = parse_scalars(field, &self.alpha)?;
        let beta_coords = parse_scalars(field, &self.beta)?;
        if alpha_coords.len() != d || beta_coords.len() != d {
            return Err(DqhaError::ShapeError(
                "alpha and beta must have one entry per basis element".into(),
            ));
        }
        let alpha = MultilinearForm::from_fn(field, 1, d, |t| alpha_coords[t[0]].clone());
        let beta = MultilinearForm::from_fn(field, 1, d, |t| beta_coords[t[0]].clone());
        Ok(Arc::new(DualQuasiHopfAlgebra::new(
            coalgebra,
            &parse_triples(field, &self.mul)?,
            unit,
            sigma,
            sigma_inv,
            antipode,
            s_inv,
            alpha,
            beta,
        )?))
    }

    pub fn from_algebra(h: &DualQuasiHopfAlgebra) -> AlgebraDocument {
        let d = h.dim();
        let c = h.coalgebra();
        // emit only the sigma entries that differ from the counit default
        let mut sigma = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let def = &(h.eps_basis(i) * h.eps_basis(j)) * h.eps_basis(k);
                    let v = h.sigma().value(&[i, j, k]);
                    if *v != def {
                        sigma.push((i, j, k, v.to_string()));
                    }
                }
            }
        }
        AlgebraDocument {
            field: field_name(h.field()),
            dimension: d,
            basis: c.basis_names().to_vec(),
            delta: emit_triples(&c.delta_triples()),
            epsilon: (0..d).map(|i| h.eps_basis(i).to_string()).collect(),
            mul: emit_triples(&h.mul_triples()),
            unit: (0..d)
                .map(|i| h.unit_vec().coords[i].to_string())
                .collect(),
            sigma,
            antipode: emit_matrix(h.antipode()),
            alpha: (0..d).map(|i| h.alpha().value(&[i]).to_string()).collect(),
            beta: (0..d).map(|i| h.beta().value(&[i]).to_string()).collect(),
            sigma_inv: None,
            s_inv: None,
        }
    }
}

fn parse_flavor(s: &str) -> Result<Flavor> {
    match s {
        "LL" => Ok(Flavor::LL),
        "RL" => Ok(Flavor::RL),
        "LR" => Ok(Flavor::LR),
        "RR" => Ok(Flavor::RR),
        other => Err(DqhaError::ParseError(format!(
            "flavor must be LL, RL, LR or RR, got {other}"
        ))),
    }
}

impl ModuleDocument {
    pub fn build(&self, base_dir: &Path) -> Result<YetterDrinfeldModule> {
        let alg = match &self.algebra {
            AlgebraRef::Inline(doc) => doc.build()?,
            AlgebraRef::Name(name) => resolve_algebra(name, base_dir)?,
        };
        let field = alg.field();
        let flavor = parse_flavor(&self.flavor)?;
        if self.basis.len() != self.dimension {
            return Err(DqhaError::DimensionMismatch {
                expected: self.dimension,
                got: self.basis.len(),
            });
        }
        let comodule = Comodule::new(
            alg,
            flavor.comodule_side(),
            self.basis.clone(),
            &parse_triples(field, &self.coaction)?,
        )?;
        YetterDrinfeldModule::from_triples(
            comodule,
            flavor,
            &parse_triples(field, &self.action)?,
        )
    }

    pub fn from_module(m: &YetterDrinfeldModule) -> ModuleDocument {
        ModuleDocument {
            algebra: AlgebraRef::Inline(AlgebraDocument::from_algebra(m.alg())),
            flavor: m.flavor().name().into(),
            dimension: m.dim(),
            basis: m.comodule().basis_names().to_vec(),
            coaction: emit_triples(&m.comodule().coaction_triples()),
            action: emit_triples(&m.action_triples()),
        }
    }
}

/// Resolve `builtin:<name>` or a file path to an algebra.
pub fn resolve_algebra(spec: &str, base_dir: &Path) -> Result<Arc<DualQuasiHopfAlgebra>> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtin_algebra(name);
    }
    let path = base_dir.join(spec);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| DqhaError::ParseError(format!("cannot read {}: {e}", path.display())))?;
    let doc: AlgebraDocument = serde_json::from_str(&text)
        .map_err(|e| DqhaError::ParseError(format!("{}: {e}", path.display())))?;
    doc.build()
}

/// Resolve `builtin:<name>` or a file path to a module.
pub fn resolve_module(spec: &str, base_dir: &Path) -> Result<YetterDrinfeldModule> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtin_module(name);
    }
    let path = base_dir.join(spec);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| DqhaError::ParseError(format!("cannot read {}: {e}", path.display())))?;
    let doc: ModuleDocument = serde_json::from_str(&text)
        .map_err(|e| DqhaError::ParseError(format!("{}: {e}", path.display())))?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    doc.build(&dir)
}

/// Is the JSON at this path a module document (as opposed to an algebra)?
pub fn document_kind(text: &str) -> Result<&'static str> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| DqhaError::ParseError(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| DqhaError::ParseError("document must be a JSON object".into()))?;
    if obj.contains_key("flavor") {
        Ok("module")
    } else if obj.contains_key("antipode") {
        Ok("algebra")
    } else {
        Err(DqhaError::ParseError(
            "document is neither an algebra (no antipode) nor a module (no flavor)".into(),
        ))
    }
}
