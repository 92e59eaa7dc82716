//! Multilinear forms on tensor powers of a based vector space, and the
//! convolution algebra they form over a coalgebra.
//!
//! A form of arity `k` on a `d`-dimensional space is stored as the dense
//! table of its `d^k` values on basis tuples; evaluation on general
//! vectors is the multilinear extension of that table.

use crate::coalgebra::Coalgebra;
use crate::error::{DqhaError, Result};
use crate::exec::{decode_tuple, tuple_count};
use crate::linalg::{solve_linear, LinearMap, Vector};
use crate::scalar::{Scalar, ScalarField};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultilinearForm {
    pub field: ScalarField,
    pub arity: usize,
    pub dim: usize,
    values: Vec<Scalar>,
}

impl MultilinearForm {
    pub fn zero(field: ScalarField, arity: usize, dim: usize) -> MultilinearForm {
        MultilinearForm {
            field,
            arity,
            dim,
            values: vec![field.zero(); tuple_count(arity, dim)],
        }
    }

    pub fn from_fn<F>(field: ScalarField, arity: usize, dim: usize, f: F) -> MultilinearForm
    where
        F: Fn(&[usize]) -> Scalar,
    {
        let mut form = MultilinearForm::zero(field, arity, dim);
        for flat in 0..form.values.len() {
            form.values[flat] = f(&decode_tuple(flat, arity, dim));
        }
        form
    }

    fn index(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.arity);
        tuple.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    pub fn value(&self, tuple: &[usize]) -> &Scalar {
        &self.values[self.index(tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], v: Scalar) {
        let i = self.index(tuple);
        self.values[i] = v;
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Multilinear evaluation on general vectors (spec-facing, shape-checked).
    pub fn evaluate(&self, args: &[Vector]) -> Result<Scalar> {
        if args.len() != self.arity {
            return Err(DqhaError::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        for a in args {
            if a.dim() != self.dim {
                return Err(DqhaError::DimensionMismatch {
                    expected: self.dim,
                    got: a.dim(),
                });
            }
        }
        let refs: Vec<&Vector> = args.iter().collect();
        Ok(self.eval(&refs))
    }

    /// Multilinear evaluation; panics on shape mismatch (internal hot path).
    pub fn eval(&self, args: &[&Vector]) -> Scalar {
        assert_eq!(args.len(), self.arity, "form arity mismatch");
        let mut acc = self.field.zero();
        let mut tuple = vec![0usize; self.arity];
        self.eval_rec(args, 0, &self.field.one(), &mut tuple, &mut acc);
        acc
    }

    fn eval_rec(
        &self,
        args: &[&Vector],
        slot: usize,
        coeff: &Scalar,
        tuple: &mut [usize],
        acc: &mut Scalar,
    ) {
        if slot == self.arity {
            let v = self.value(tuple);
            if !v.is_zero() {
                *acc = &*acc + &(coeff * v);
            }
            return;
        }
        for (i, c) in args[slot].support() {
            tuple[slot] = i;
            let next = coeff * c;
            self.eval_rec(args, slot + 1, &next, tuple, acc);
        }
    }

    /// Arity-1 convenience: evaluate a functional on a vector.
    pub fn eval1(&self, v: &Vector) -> Scalar {
        self.eval(&[v])
    }

    /// Tensor power of an arity-1 functional (e.g. the convolution unit
    /// `eps^{(x)k}`).
    pub fn tensor_power(functional: &MultilinearForm, k: usize) -> MultilinearForm {
        assert_eq!(functional.arity, 1, "tensor_power expects an arity-1 form");
        MultilinearForm::from_fn(functional.field, k, functional.dim, |tuple| {
            let mut acc = functional.field.one();
            for &i in tuple {
                acc = &acc * functional.value(&[i]);
            }
            acc
        })
    }
}

/// Slotwise convolution product `(f * g)(x1,..,xk) = f(x1_1,..) g(x1_2,..)`
/// using the coproduct of `c` in each slot.
pub fn convolution_product(
    f: &MultilinearForm,
    g: &MultilinearForm,
    c: &Coalgebra,
) -> Result<MultilinearForm> {
    if f.arity != g.arity {
        return Err(DqhaError::ArityMismatch {
            expected: f.arity,
            got: g.arity,
        });
    }
    if f.dim != g.dim || f.dim != c.dim() {
        return Err(DqhaError::DimensionMismatch {
            expected: c.dim(),
            got: f.dim,
        });
    }
    let k = f.arity;
    let mut out = MultilinearForm::zero(f.field, k, f.dim);
    let mut firsts = vec![0usize; k];
    let mut seconds = vec![0usize; k];
    for flat in 0..tuple_count(k, f.dim) {
        let tuple = decode_tuple(flat, k, f.dim);
        let mut acc = f.field.zero();
        // product over slots of Delta(x_i); iterate the k-fold product of
        // per-slot term lists
        conv_rec(
            f,
            g,
            c,
            &tuple,
            0,
            &f.field.one(),
            &mut firsts,
            &mut seconds,
            &mut acc,
        );
        out.set(&tuple, acc);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn conv_rec(
    f: &MultilinearForm,
    g: &MultilinearForm,
    c: &Coalgebra,
    tuple: &[usize],
    slot: usize,
    coeff: &Scalar,
    firsts: &mut [usize],
    seconds: &mut [usize],
    acc: &mut Scalar,
) {
    if slot == tuple.len() {
        let v = &(f.value(firsts) * g.value(seconds)) * coeff;
        if !v.is_zero() {
            *acc = &*acc + &v;
        }
        return;
    }
    for term in c.delta_k(tuple[slot], 2).expect("arity 2 within cap").iter() {
        firsts[slot] = term.idx[0];
        seconds[slot] = term.idx[1];
        let next = coeff * &term.coeff;
        conv_rec(f, g, c, tuple, slot + 1, &next, firsts, seconds, acc);
    }
}

/// The unit of the arity-`k` convolution algebra over `c`.
pub fn convolution_unit(c: &Coalgebra, k: usize) -> MultilinearForm {
    MultilinearForm::tensor_power(c.epsilon(), k)
}

/// Two-sided convolution inverse, computed by solving the linear system
/// `f * x = unit` in the `d^k`-dimensional dual algebra and verifying
/// `x * f = unit` as well.
pub fn convolution_inverse(f: &MultilinearForm, c: &Coalgebra) -> Result<MultilinearForm> {
    if f.dim != c.dim() {
        return Err(DqhaError::DimensionMismatch {
            expected: c.dim(),
            got: f.dim,
        });
    }
    let k = f.arity;
    let n = tuple_count(k, f.dim);
    // Row t, column u: coefficient of x(u) in (f * x)(t).
    let mut a = LinearMap::zero(f.field, n, n);
    let mut rhs = Vector::zero(f.field, n);
    let unit = convolution_unit(c, k);
    let mut firsts = vec![0usize; k];
    let mut seconds = vec![0usize; k];
    for t in 0..n {
        let tuple = decode_tuple(t, k, f.dim);
        rhs.coords[t] = unit.value(&tuple).clone();
        accumulate_rows(f, c, &tuple, 0, &f.field.one(), &mut firsts, &mut seconds, &mut |u, v| {
            *a.at_mut(t, u) = a.at(t, u) + &v;
        });
    }
    let x = solve_linear(&a, &rhs).map_err(|_| DqhaError::NonInvertible)?;
    let mut inv = MultilinearForm::zero(f.field, k, f.dim);
    inv.values = x.coords;
    // one-sided inverses are two-sided in a finite-dimensional associative
    // algebra, but verify anyway
    let left = convolution_product(&inv, f, c)?;
    if left != unit {
        return Err(DqhaError::NonInvertible);
    }
    Ok(inv)
}

#[allow(clippy::too_many_arguments)]
fn accumulate_rows(
    f: &MultilinearForm,
    c: &Coalgebra,
    tuple: &[usize],
    slot: usize,
    coeff: &Scalar,
    firsts: &mut [usize],
    seconds: &mut [usize],
    emit: &mut dyn FnMut(usize, Scalar),
) {
    if slot == tuple.len() {
        let v = coeff * f.value(firsts);
        if !v.is_zero() {
            let u = seconds.iter().fold(0, |acc, &i| acc * f.dim + i);
            emit(u, v);
        }
        return;
    }
    for term in c.delta_k(tuple[slot], 2).expect("arity 2 within cap").iter() {
        firsts[slot] = term.idx[0];
        seconds[slot] = term.idx[1];
        let next = coeff * &term.coeff;
        accumulate_rows(f, c, tuple, slot + 1, &next, firsts, seconds, emit);
    }
}
