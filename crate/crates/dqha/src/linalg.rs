//! Dense exact vectors and matrices with Gaussian elimination.

use std::fmt;

use crate::error::{DqhaError, Result};
use crate::scalar::{Scalar, ScalarField};

/// A coordinate vector in a fixed basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vector {
    pub field: ScalarField,
    pub coords: Vec<Scalar>,
}

impl Vector {
    pub fn zero(field: ScalarField, dim: usize) -> Vector {
        Vector {
            field,
            coords: vec![field.zero(); dim],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(field: ScalarField, dim: usize, i: usize) -> Vector {
        let mut v = Vector::zero(field, dim);
        v.coords[i] = field.one();
        v
    }

    pub fn from_coords(field: ScalarField, coords: Vec<Scalar>) -> Vector {
        Vector { field, coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add_scaled(&mut self, other: &Vector, c: &Scalar) {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a = &*a + &(b * c);
        }
    }

    pub fn scale(&mut self, c: &Scalar) {
        for a in self.coords.iter_mut() {
            *a = &*a * c;
        }
    }

    /// Iterate over nonzero coordinates as `(index, value)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// A dense matrix acting on coordinate vectors (`rows x cols`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    pub field: ScalarField,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn zero(field: ScalarField, rows: usize, cols: usize) -> LinearMap {
        LinearMap {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: ScalarField, n: usize) -> LinearMap {
        let mut m = LinearMap::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(field: ScalarField, rows: Vec<Vec<Scalar>>) -> Result<LinearMap> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(DqhaError::ShapeMismatch("ragged matrix rows".into()));
        }
        Ok(LinearMap {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Build column by column from images of basis vectors.
    pub fn from_columns(field: ScalarField, rows: usize, columns: &[Vector]) -> LinearMap {
        let mut m = LinearMap::zero(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), rows, "column dimension mismatch");
            for (i, v) in col.support() {
                *m.at_mut(i, j) = v.clone();
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn scale(&mut self, c: &Scalar) {
        for e in &mut self.entries {
            *e = &*e * c;
        }
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::from_coords(
            self.field,
            (0..self.rows).map(|i| self.at(i, j).clone()).collect(),
        )
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.cols, "matrix-vector shape mismatch");
        let mut out = Vector::zero(self.field, self.rows);
        for (j, c) in v.support() {
            for i in 0..self.rows {
                out.coords[i] = &out.coords[i] + &(self.at(i, j) * c);
            }
        }
        out
    }

    pub fn compose(&self, rhs: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, rhs.rows, "matrix composition shape mismatch");
        let mut out = LinearMap::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    *out.at_mut(i, j) = out.at(i, j) + &(a * b);
                }
            }
        }
        out
    }

    /// Kronecker product; index convention `(i1*r2 + i2, j1*c2 + j2)`.
    pub fn kronecker(&self, rhs: &LinearMap) -> LinearMap {
        let mut out = LinearMap::zero(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.at(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let b = rhs.at(i2, j2);
                        if !b.is_zero() {
                            *out.at_mut(i1 * rhs.rows + i2, j1 * rhs.cols + j2) = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    /// Exact inverse by Gauss-Jordan; `NoSolution` when singular.
    pub fn inverse(&self) -> Result<LinearMap> {
        if self.rows != self.cols {
            return Err(DqhaError::ShapeMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = LinearMap::identity(self.field, n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.at(r, col).is_zero())
                .ok_or(DqhaError::NoSolution)?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a.at(pivot, j).clone();
                    *a.at_mut(pivot, j) = a.at(col, j).clone();
                    *a.at_mut(col, j) = tmp;
                    let tmp = inv.at(pivot, j).clone();
                    *inv.at_mut(pivot, j) = inv.at(col, j).clone();
                    *inv.at_mut(col, j) = tmp;
                }
            }
            let piv_inv = a.at(col, col).inv().expect("nonzero pivot");
            for j in 0..n {
                *a.at_mut(col, j) = a.at(col, j) * &piv_inv;
                *inv.at_mut(col, j) = inv.at(col, j) * &piv_inv;
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    *a.at_mut(r, j) = a.at(r, j) - &(a.at(col, j) * &factor);
                    *inv.at_mut(r, j) = inv.at(r, j) - &(inv.at(col, j) * &factor);
                }
            }
        }
        Ok(inv)
    }
}

/// Solve `A x = b` exactly; `NoSolution` when the system is inconsistent,
/// a particular solution when it is underdetermined.
pub fn solve_linear(a: &LinearMap, b: &Vector) -> Result<Vector> {
    if b.dim() != a.rows {
        return Err(DqhaError::ShapeMismatch(format!(
            "rhs has dimension {}, matrix has {} rows",
            b.dim(),
            a.rows
        )));
    }
    let (rows, cols) = (a.rows, a.cols);
    let mut m = a.clone();
    let mut rhs = b.coords.clone();
    let mut pivot_cols: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(piv) = (row..rows).find(|&r| !m.at(r, col).is_zero()) else {
            continue;
        };
        if piv != row {
            for j in 0..cols {
                let tmp = m.at(piv, j).clone();
                *m.at_mut(piv, j) = m.at(row, j).clone();
                *m.at_mut(row, j) = tmp;
            }
            rhs.swap(piv, row);
        }
        let inv = m.at(row, col).inv().expect("nonzero pivot");
        for j in 0..cols {
            *m.at_mut(row, j) = m.at(row, j) * &inv;
        }
        rhs[row] = &rhs[row] * &inv;
        for r in 0..rows {
            if r == row || m.at(r, col).is_zero() {
                continue;
            }
            let factor = m.at(r, col).clone();
            for j in 0..cols {
                *m.at_mut(r, j) = m.at(r, j) - &(m.at(row, j) * &factor);
            }
            rhs[r] = &rhs[r] - &(&rhs[row] * &factor);
        }
        pivot_cols.push((row, col));
        row += 1;
        if row == rows {
            break;
        }
    }
    // rows below the pivot rank must have zero rhs
    for r in row..rows {
        if !rhs[r].is_zero() {
            return Err(DqhaError::NoSolution);
        }
    }
    let mut x = Vector::zero(a.field, cols);
    for (r, c) in pivot_cols {
        x.coords[c] = rhs[r].clone();
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ScalarField {
        ScalarField::Rationals
    }

    fn s(n: i64) -> Scalar {
        q().from_i64(n)
    }

    #[test]
    fn solve_identity() {
        let a = LinearMap::identity(q(), 3);
        let b = Vector::from_coords(q(), vec![s(4), s(-1), s(7)]);
        assert_eq!(solve_linear(&a, &b).unwrap(), b);
    }

    #[test]
    fn solve_back_substitution() {
        let a = LinearMap::from_rows(q(), vec![vec![s(1), s(1)], vec![s(0), s(1)]]).unwrap();
        let b = Vector::from_coords(q(), vec![s(2), s(1)]);
        let x = solve_linear(&a, &b).unwrap();
        assert_eq!(x.coords, vec![s(1), s(1)]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = LinearMap::from_rows(q(), vec![vec![s(1), s(1)], vec![s(2), s(2)]]).unwrap();
        let b = Vector::from_coords(q(), vec![s(1), s(3)]);
        assert_eq!(solve_linear(&a, &b), Err(DqhaError::NoSolution));
    }

    #[test]
    fn inverse_round_trip() {
        let a = LinearMap::from_rows(q(), vec![vec![s(2), s(1)], vec![s(1), s(1)]]).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.compose(&inv).is_identity());
        assert!(inv.compose(&a).is_identity());
    }

    #[test]
    fn singular_inverse_fails() {
        let a = LinearMap::from_rows(q(), vec![vec![s(1), s(2)], vec![s(2), s(4)]]).unwrap();
        assert!(a.inverse().is_err());
    }

    #[test]
    fn kronecker_identity() {
        let a = LinearMap::identity(q(), 2);
        let b = LinearMap::identity(q(), 3);
        assert!(a.kronecker(&b).is_identity());
    }
}
