//! Concrete example builders: group algebras, cocycle-twisted group
//! algebras, dual group algebras, one-dimensional modules, and the named
//! pool used throughout the test suites.

use std::sync::Arc;

use crate::algebra::DualQuasiHopfAlgebra;
use crate::coalgebra::Coalgebra;
use crate::comodule::{Comodule, ComoduleSide};
use crate::error::{DqhaError, Result};
use crate::form::MultilinearForm;
use crate::linalg::{LinearMap, Vector};
use crate::scalar::{Scalar, ScalarField};
use crate::yd::{check_yd, h_as_yd, Flavor, YetterDrinfeldModule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupPresentation {
    pub order: usize,
    /// `mul_table[i][j]` is the index of the product of elements i and j.
    pub mul_table: Vec<Vec<usize>>,
    pub inverse_table: Vec<usize>,
    pub identity: usize,
    pub names: Vec<String>,
}

impl FiniteGroupPresentation {
    /// Build from a multiplication table; the identity and inverses are
    /// located, and the group laws are verified.
    pub fn from_mul_table(
        mul_table: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
    ) -> Result<FiniteGroupPresentation> {
        let n = mul_table.len();
        if n == 0 || mul_table.iter().any(|r| r.len() != n) {
            return Err(DqhaError::InvalidGroupTable(
                "multiplication table must be square and nonempty".into(),
            ));
        }
        if mul_table.iter().flatten().any(|&k| k >= n) {
            return Err(DqhaError::InvalidGroupTable(
                "table entry out of range".into(),
            ));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| mul_table[e][i] == i && mul_table[i][e] == i))
            .ok_or_else(|| DqhaError::InvalidGroupTable("no identity element".into()))?;
        let mut inverse_table = Vec::with_capacity(n);
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| mul_table[i][j] == identity && mul_table[j][i] == identity)
                .ok_or_else(|| {
                    DqhaError::InvalidGroupTable(format!("element {i} has no inverse"))
                })?;
            inverse_table.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul_table[mul_table[a][b]][c] != mul_table[a][mul_table[b][c]] {
                        return Err(DqhaError::InvalidGroupTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let names = match names {
            Some(ns) => {
                if ns.len() != n {
                    return Err(DqhaError::InvalidGroupTable(
                        "name list length does not match the order".into(),
                    ));
                }
                ns
            }
            None => (0..n)
                .map(|i| if i == identity { "e".into() } else { format!("x{i}") })
                .collect(),
        };
        Ok(FiniteGroupPresentation {
            order: n,
            mul_table,
            inverse_table,
            identity,
            names,
        })
    }

    /// The cyclic group of order n, generator `g`, elements `e, g, g2, ...`.
    pub fn cyclic(n: usize) -> FiniteGroupPresentation {
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "e".into(),
                1 => "g".into(),
                k => format!("g{k}"),
            })
            .collect();
        FiniteGroupPresentation::from_mul_table(table, Some(names)).expect("cyclic group")
    }

    /// The symmetric group on three letters.
    pub fn symmetric3() -> FiniteGroupPresentation {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
        let table = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| {
                        let r = compose(&perms[i], &perms[j]);
                        perms.iter().position(|p| *p == r).unwrap()
                    })
                    .collect()
            })
            .collect();
        let names = (0..6).map(|i| format!("p{i}")).collect();
        FiniteGroupPresentation::from_mul_table(table, Some(names)).expect("S3")
    }
}

/// A normalized 3-cocycle on a finite group, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeCocycle {
    pub group: FiniteGroupPresentation,
    pub field: ScalarField,
    /// `values[(a*n + b)*n + c]`, all nonzero.
    pub values: Vec<Scalar>,
}

impl ThreeCocycle {
    pub fn new(
        group: FiniteGroupPresentation,
        field: ScalarField,
        values: Vec<Scalar>,
    ) -> Result<ThreeCocycle> {
        let n = group.order;
        if values.len() != n * n * n {
            return Err(DqhaError::ShapeError(format!(
                "cocycle table must have {n}^3 entries"
            )));
        }
        let w = ThreeCocycle {
            group,
            field,
            values,
        };
        let e = w.group.identity;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let v = w.value(a, b, c);
                    if v.is_zero() {
                        return Err(DqhaError::NotNormalized(format!(
                            "cocycle vanishes at ({a}, {b}, {c})"
                        )));
                    }
                    if (a == e || b == e || c == e) && !v.is_one() {
                        return Err(DqhaError::NotNormalized(format!(
                            "cocycle is not 1 at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        // w(a,b,cd) w(ab,c,d) = w(b,c,d) w(a,bc,d) w(a,b,c)
        let mul = |i: usize, j: usize| w.group.mul_table[i][j];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let lhs = w.value(a, b, mul(c, d)) * w.value(mul(a, b), c, d);
                        let rhs = &(w.value(b, c, d) * w.value(a, mul(b, c), d))
                            * w.value(a, b, c);
                        if lhs != rhs {
                            return Err(DqhaError::NotACocycle(format!(
                                "cocycle law fails at ({a}, {b}, {c}, {d})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(w)
    }

    pub fn trivial(group: FiniteGroupPresentation, field: ScalarField) -> ThreeCocycle {
        let n = group.order;
        ThreeCocycle::new(group, field, vec![field.one(); n * n * n]).expect("trivial cocycle")
    }

    /// The standard cocycle on the cyclic group of order n:
    /// `w(g^a, g^b, g^c) = zeta^(a * floor((b + c) / n))` for a fixed
    /// n-th root of unity `zeta`.
    pub fn cyclic(n: usize, field: ScalarField, zeta: &Scalar) -> Result<ThreeCocycle> {
        let group = FiniteGroupPresentation::cyclic(n);
        let mut values = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let exp = (a * ((b + c) / n)) as i64;
                    values.push(zeta.pow(exp)?);
                }
            }
        }
        ThreeCocycle::new(group, field, values)
    }

    pub fn value(&self, a: usize, b: usize, c: usize) -> &Scalar {
        let n = self.group.order;
        &self.values[(a * n + b) * n + c]
    }
}

fn grouplike_coalgebra(g: &FiniteGroupPresentation, field: ScalarField) -> Result<Coalgebra> {
    let n = g.order;
    let triples: Vec<(usize, usize, usize, Scalar)> =
        (0..n).map(|i| (i, i, i, field.one())).collect();
    Coalgebra::new(field, g.names.clone(), &triples, vec![field.one(); n])
}

/// The group algebra kG as a Hopf algebra: grouplike basis, trivial
/// reassociator, antipode by inversion.
pub fn group_hopf(
    g: &FiniteGroupPresentation,
    field: ScalarField,
) -> Result<DualQuasiHopfAlgebra> {
    group_dqha(&ThreeCocycle::trivial(g.clone(), field))
}

/// The cocycle-twisted group algebra: `sigma` restricts to the cocycle on
/// the grouplike basis, `alpha` is the counit, and `beta` is forced by the
/// antipode axioms to `beta(x) = w(x, x^{-1}, x)^{-1}`.
pub fn group_dqha(w: &ThreeCocycle) -> Result<DualQuasiHopfAlgebra> {
    let g = &w.group;
    let field = w.field;
    let n = g.order;
    let coalgebra = grouplike_coalgebra(g, field)?;
    let mul_triples: Vec<(usize, usize, usize, Scalar)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j, g.mul_table[i][j], field.one())))
        .collect();
    let unit = Vector::unit(field, n, g.identity);
    let mut sigma = MultilinearForm::zero(field, 3, n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                sigma.set(&[a, b, c], w.value(a, b, c).clone());
            }
        }
    }
    let mut antipode = LinearMap::zero(field, n, n);
    for i in 0..n {
        *antipode.at_mut(g.inverse_table[i], i) = field.one();
    }
    let alpha = MultilinearForm::from_fn(field, 1, n, |_| field.one());
    let mut beta = MultilinearForm::zero(field, 1, n);
    for i in 0..n {
        beta.set(&[i], w.value(i, g.inverse_table[i], i).inv()?);
    }
    DualQuasiHopfAlgebra::new(
        coalgebra,
        &mul_triples,
        unit,
        sigma,
        None,
        antipode,
        None,
        alpha,
        beta,
    )
}

/// The function algebra on a finite group: basis of indicator functions,
/// pointwise multiplication, coproduct dual to the group law.
pub fn dual_group_hopf(
    g: &FiniteGroupPresentation,
    field: ScalarField,
) -> Result<DualQuasiHopfAlgebra> {
    let n = g.order;
    let names: Vec<String> = g.names.iter().map(|s| format!("d_{s}")).collect();
    let mut delta_triples = Vec::new();
    for a in 0..n {
        for b in 0..n {
            delta_triples.push((g.mul_table[a][b], a, b, field.one()));
        }
    }
    let epsilon = (0..n)
        .map(|i| {
            if i == g.identity {
                field.one()
            } else {
                field.zero()
            }
        })
        .collect();
    let coalgebra = Coalgebra::new(field, names, &delta_triples, epsilon)?;
    let mul_triples: Vec<(usize, usize, usize, Scalar)> =
        (0..n).map(|i| (i, i, i, field.one())).collect();
    let mut unit = Vector::zero(field, n);
    for i in 0..n {
        unit.coords[i] = field.one();
    }
    // trivial reassociator: counit on each slot
    let ind = |i: usize| {
        if i == g.identity {
            field.one()
        } else {
            field.zero()
        }
    };
    let sigma = MultilinearForm::from_fn(field, 3, n, |t| &(&ind(t[0]) * &ind(t[1])) * &ind(t[2]));
    let mut antipode = LinearMap::zero(field, n, n);
    for i in 0..n {
        *antipode.at_mut(g.inverse_table[i], i) = field.one();
    }
    let alpha = MultilinearForm::from_fn(field, 1, n, |t| ind(t[0]));
    let beta = alpha.clone();
    DualQuasiHopfAlgebra::new(
        coalgebra,
        &mul_triples,
        unit,
        sigma,
        None,
        antipode,
        None,
        alpha,
        beta,
    )
}

/// A one-dimensional module: coaction through a single grouplike basis
/// element `g`, action through the character sending `g` to `theta`
/// (extended along the powers of `g`, zero off its orbit). Returned only
/// if the full axiom suite passes.
pub fn one_dim_yd(
    alg: &Arc<DualQuasiHopfAlgebra>,
    g: usize,
    theta: &Scalar,
    flavor: Flavor,
) -> Result<YetterDrinfeldModule> {
    let field = alg.field();
    let d = alg.dim();
    if g >= d {
        return Err(DqhaError::ShapeError(format!(
            "grouplike index {g} out of range"
        )));
    }
    let single_basis = |v: &Vector| -> Option<usize> {
        let mut hits = v.support();
        match (hits.next(), hits.next()) {
            (Some((i, c)), None) if c.is_one() => Some(i),
            _ => None,
        }
    };
    let e = single_basis(alg.unit_vec()).ok_or_else(|| {
        DqhaError::ConstraintViolated("the unit of the algebra is not a basis element".into())
    })?;
    // character: theta^k on the powers of g, 1 elsewhere (so the identity
    // grouplike with theta = 1 gives the trivial module)
    let mut chi = vec![field.one(); d];
    let mut visited = vec![false; d];
    visited[e] = true;
    let mut cur = e;
    loop {
        let next = single_basis(alg.mul_basis(cur, g)).ok_or_else(|| {
            DqhaError::ConstraintViolated(format!(
                "the element at index {g} does not generate a basis orbit"
            ))
        })?;
        if next == e || visited[next] {
            break;
        }
        visited[next] = true;
        chi[next] = &chi[cur] * theta;
        cur = next;
    }

    let side = flavor.comodule_side();
    let comodule = Comodule::new(
        alg.clone(),
        side,
        vec!["v".into()],
        &[(0, g, 0, field.one())],
    )?;
    let actions: Vec<LinearMap> = chi
        .iter()
        .map(|c| {
            let mut a = LinearMap::zero(field, 1, 1);
            *a.at_mut(0, 0) = c.clone();
            a
        })
        .collect();
    let module = YetterDrinfeldModule::new(comodule, flavor, actions)?;
    let report = check_yd(&module);
    if let Some(item) = report.failures().next() {
        return Err(DqhaError::ConstraintViolated(format!(
            "the action scalar does not satisfy {}: {}",
            item.name,
            item.detail.as_deref().unwrap_or("")
        )));
    }
    Ok(module)
}

fn f13() -> ScalarField {
    ScalarField::prime(13).expect("13 is prime")
}

/// kZ3 over the rationals: group Hopf algebra of the cyclic group of
/// order three.
pub fn kz3() -> Result<Arc<DualQuasiHopfAlgebra>> {
    Ok(Arc::new(group_hopf(
        &FiniteGroupPresentation::cyclic(3),
        ScalarField::Rationals,
    )?))
}

/// The function algebra on Z2 over the rationals.
pub fn kdualz2() -> Result<Arc<DualQuasiHopfAlgebra>> {
    Ok(Arc::new(dual_group_hopf(
        &FiniteGroupPresentation::cyclic(2),
        ScalarField::Rationals,
    )?))
}

/// Z2 twisted by the sign cocycle over the rationals: `sigma(g,g,g) = -1`,
/// `beta(g) = -1`.
pub fn kw_z2() -> Result<Arc<DualQuasiHopfAlgebra>> {
    let field = ScalarField::Rationals;
    let w = ThreeCocycle::cyclic(2, field, &field.from_i64(-1))?;
    Ok(Arc::new(group_dqha(&w)?))
}

/// The same sign-twisted Z2 over F13.
pub fn kw_z2_f13() -> Result<Arc<DualQuasiHopfAlgebra>> {
    let field = f13();
    let w = ThreeCocycle::cyclic(2, field, &field.from_i64(-1))?;
    Ok(Arc::new(group_dqha(&w)?))
}

/// Z4 twisted by the root-of-unity cocycle over F13 (zeta = 5, of order
/// four).
pub fn kw_z4_f13() -> Result<Arc<DualQuasiHopfAlgebra>> {
    let field = f13();
    let w = ThreeCocycle::cyclic(4, field, &field.from_i64(5))?;
    Ok(Arc::new(group_dqha(&w)?))
}

/// The sign-twisted Z2 with `beta` replaced by the counit: a deliberately
/// broken fixture whose axiom report must single out eq-1.6.
pub fn kw_z2_broken_beta() -> Result<Arc<DualQuasiHopfAlgebra>> {
    let field = ScalarField::Rationals;
    let w = ThreeCocycle::cyclic(2, field, &field.from_i64(-1))?;
    let g = &w.group;
    let n = g.order;
    let coalgebra = grouplike_coalgebra(g, field)?;
    let mul_triples: Vec<(usize, usize, usize, Scalar)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j, g.mul_table[i][j], field.one())))
        .collect();
    let mut sigma = MultilinearForm::zero(field, 3, n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                sigma.set(&[a, b, c], w.value(a, b, c).clone());
            }
        }
    }
    let mut antipode = LinearMap::zero(field, n, n);
    for i in 0..n {
        *antipode.at_mut(g.inverse_table[i], i) = field.one();
    }
    let alpha = MultilinearForm::from_fn(field, 1, n, |_| field.one());
    Ok(Arc::new(DualQuasiHopfAlgebra::new(
        coalgebra,
        &mul_triples,
        Vector::unit(field, n, g.identity),
        sigma,
        None,
        antipode,
        None,
        alpha.clone(),
        alpha,
    )?))
}

/// The one-dimensional module over the sign-twisted Z2 / F13 with the
/// action scalar 5 (a square root of -1 mod 13).
pub fn m_theta() -> Result<YetterDrinfeldModule> {
    let alg = kw_z2_f13()?;
    let theta = alg.field().from_i64(5);
    one_dim_yd(&alg, 1, &theta, Flavor::LL)
}

/// The right-action counterpart of [`m_theta`].
pub fn m_theta_rl() -> Result<YetterDrinfeldModule> {
    let alg = kw_z2_f13()?;
    let theta = alg.field().from_i64(5);
    one_dim_yd(&alg, 1, &theta, Flavor::RL)
}

/// Names of the registered algebra pool, in report order.
pub const REGISTERED_ALGEBRAS: [&str; 5] =
    ["kz3", "kdualz2", "kw_z2", "kw_z2_f13", "kw_z4_f13"];

/// Names of the registered module pool, in report order.
pub const REGISTERED_MODULES: [&str; 8] = [
    "h_yd_kz3",
    "h_yd_kdualz2",
    "h_yd_kw_z2",
    "h_yd_kw_z2_f13",
    "h_yd_kw_z4_f13",
    "m_theta",
    "m_theta_rl",
    "trivial_ll_kw_z2",
];

/// Resolve a pool algebra by name.
pub fn builtin_algebra(name: &str) -> Result<Arc<DualQuasiHopfAlgebra>> {
    match name {
        "kz3" => kz3(),
        "kdualz2" => kdualz2(),
        "kw_z2" => kw_z2(),
        "kw_z2_f13" => kw_z2_f13(),
        "kw_z4_f13" => kw_z4_f13(),
        "kw_z2_broken_beta" => kw_z2_broken_beta(),
        other => Err(DqhaError::ParseError(format!(
            "unknown builtin algebra: {other}"
        ))),
    }
}

/// Resolve a pool algebra by name, rebuilding over the requested field
/// where the construction is field-generic.
pub fn builtin_algebra_with_field(
    name: &str,
    field: Option<ScalarField>,
) -> Result<Arc<DualQuasiHopfAlgebra>> {
    let Some(f) = field else {
        return builtin_algebra(name);
    };
    match name {
        "kz3" => Ok(Arc::new(group_hopf(&FiniteGroupPresentation::cyclic(3), f)?)),
        "kdualz2" => Ok(Arc::new(dual_group_hopf(
            &FiniteGroupPresentation::cyclic(2),
            f,
        )?)),
        "kw_z2" | "kw_z2_f13" => {
            let w = ThreeCocycle::cyclic(2, f, &f.from_i64(-1))?;
            Ok(Arc::new(group_dqha(&w)?))
        }
        "kw_z4" | "kw_z4_f13" => {
            let zeta = root_of_unity(f, 4)?;
            let w = ThreeCocycle::cyclic(4, f, &zeta)?;
            Ok(Arc::new(group_dqha(&w)?))
        }
        other => Err(DqhaError::ParseError(format!(
            "builtin algebra {other} cannot be rebuilt over another field"
        ))),
    }
}

/// A primitive n-th root of unity in the field, if one exists.
pub fn root_of_unity(field: ScalarField, n: u32) -> Result<Scalar> {
    match field {
        ScalarField::Rationals => match n {
            1 => Ok(field.one()),
            2 => Ok(field.from_i64(-1)),
            _ => Err(DqhaError::ConstraintViolated(format!(
                "the rationals contain no primitive root of unity of order {n}"
            ))),
        },
        ScalarField::Prime(p) => {
            for x in 1..p {
                let s = field.from_i64(x as i64);
                if s.pow(n as i64)?.is_one()
                    && (1..n).all(|k| !s.pow(k as i64).map(|v| v.is_one()).unwrap_or(false))
                {
                    return Ok(s);
                }
            }
            Err(DqhaError::ConstraintViolated(format!(
                "F_{p} contains no primitive root of unity of order {n}"
            )))
        }
    }
}

/// The trivial one-dimensional LL module: coaction by the unit, action by
/// the counit.
pub fn trivial_ll(alg: &Arc<DualQuasiHopfAlgebra>) -> Result<YetterDrinfeldModule> {
    let coaction: Vec<(usize, usize, usize, Scalar)> = alg
        .unit_vec()
        .support()
        .map(|(i, c)| (0, i, 0, c.clone()))
        .collect();
    let comodule = Comodule::new(
        alg.clone(),
        Flavor::LL.comodule_side(),
        vec!["v".into()],
        &coaction,
    )?;
    let actions: Vec<(usize, usize, usize, Scalar)> = (0..alg.dim())
        .map(|h| (h, 0, 0, alg.eps_basis(h).clone()))
        .collect();
    YetterDrinfeldModule::from_triples(comodule, Flavor::LL, &actions)
}

/// Resolve a pool module by name (`h_yd_<algebra>` is the regular module
/// of the named algebra).
pub fn builtin_module(name: &str) -> Result<YetterDrinfeldModule> {
    if let Some(alg_name) = name.strip_prefix("h_yd_") {
        return h_as_yd(&builtin_algebra(alg_name)?);
    }
    match name {
        "m_theta" => m_theta(),
        "m_theta_rl" => m_theta_rl(),
        "trivial_ll_kw_z2" => trivial_ll(&kw_z2()?),
        other => Err(DqhaError::ParseError(format!(
            "unknown builtin module: {other}"
        ))),
    }
}

/// Left comodules of dimension at most 2 over the given algebra, used as
/// the ambient objects in center-condition sweeps: the unit object and
/// (when the unit is a basis element) the regular-coaction comodule in
/// low dimension.
pub fn small_comodules(alg: &Arc<DualQuasiHopfAlgebra>, side: ComoduleSide) -> Vec<Comodule> {
    let field = alg.field();
    let mut out = vec![Comodule::trivial(alg.clone(), side)];
    // one-dimensional comodules on each grouplike basis element
    for i in 0..alg.dim() {
        let grouplike = alg
            .delta_k(i, 2)
            .ok()
            .map(|terms| {
                terms.len() == 1
                    && terms[0].idx == [i, i]
                    && terms[0].coeff.is_one()
                    && alg.eps_basis(i).is_one()
            })
            .unwrap_or(false);
        if grouplike && i != 0 {
            let c = Comodule::new(
                alg.clone(),
                side,
                vec![format!("w{i}")],
                &[(0, i, 0, field.one())],
            );
            if let Ok(c) = c {
                out.push(c);
            }
        }
    }
    // the full coalgebra as a comodule over itself, if small
    if alg.dim() <= 2 {
        let mut triples = Vec::new();
        for i in 0..alg.dim() {
            if let Ok(terms) = alg.delta_k(i, 2) {
                for t in terms.iter() {
                    let (h, v) = match side {
                        ComoduleSide::Left => (t.idx[0], t.idx[1]),
                        ComoduleSide::Right => (t.idx[1], t.idx[0]),
                    };
                    triples.push((i, h, v, t.coeff.clone()));
                }
            }
        }
        if let Ok(c) = Comodule::new(
            alg.clone(),
            side,
            alg.coalgebra().basis_names().to_vec(),
            &triples,
        ) {
            out.push(c);
        }
    }
    out
}
