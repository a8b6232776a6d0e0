//! Dense quaternion matrices and the small amount of linear algebra the
//! crate needs: products, adjoints, Frobenius norms, Gaussian elimination,
//! and Gram-Schmidt orthonormalisation.
//!
//! Matrices act on column vectors from the left; scalars multiply vectors on
//! the right. Nothing here ever takes an eigendecomposition.

use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quat::Quat;

/// Tolerance context threaded through every approximate comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Tolerance> {
        if eps > 0.0 && eps.is_finite() {
            Ok(Tolerance { eps })
        } else {
            Err(Error::InvalidTolerance(eps))
        }
    }

    pub fn eps(self) -> f64 {
        self.eps
    }
}

impl Default for Tolerance {
    fn default() -> Tolerance {
        Tolerance { eps: Tolerance::DEFAULT_EPS }
    }
}

/// A dense quaternion matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quat>,
}

impl QMatrix {
    /// Builds a matrix from row-major entries. Panics when the entry count
    /// does not equal `rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<Quat>) -> QMatrix {
        assert_eq!(
            data.len(),
            rows * cols,
            "entry count {} does not match {rows}x{cols}",
            data.len()
        );
        QMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> QMatrix {
        QMatrix::new(rows, cols, vec![Quat::ZERO; rows * cols])
    }

    pub fn identity(dim: usize) -> QMatrix {
        let mut m = QMatrix::zeros(dim, dim);
        for r in 0..dim {
            m[(r, r)] = Quat::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quat) -> QMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix::new(rows, cols, data)
    }

    /// Builds a matrix from rows of equal length. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Quat>>) -> QMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged row in matrix literal");
            data.extend(row);
        }
        QMatrix::new(nrows, ncols, data)
    }

    /// A `d x 1` column vector.
    pub fn column(entries: Vec<Quat>) -> QMatrix {
        let d = entries.len();
        QMatrix::new(d, 1, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Quat] {
        &self.data
    }

    pub fn col_vec(&self, c: usize) -> Vec<Quat> {
        assert!(c < self.cols, "column {c} out of range");
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn col(&self, c: usize) -> QMatrix {
        QMatrix::column(self.col_vec(c))
    }

    pub fn set_col(&mut self, c: usize, v: &[Quat]) {
        assert_eq!(v.len(), self.rows, "column length mismatch");
        for r in 0..self.rows {
            self[(r, c)] = v[r];
        }
    }

    /// The submatrix formed by the listed columns, in the listed order.
    pub fn take_cols(&self, cols: &[usize]) -> QMatrix {
        QMatrix::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])])
    }

    pub fn map(&self, f: impl Fn(Quat) -> Quat) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&q| f(q)).collect(),
        }
    }

    /// Matrix product. Panics when the inner dimensions disagree.
    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for t in 0..self.cols {
                let a = self[(r, t)];
                if a == Quat::ZERO {
                    continue;
                }
                for c in 0..rhs.cols {
                    out[(r, c)] += a * rhs[(t, c)];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &QMatrix) -> QMatrix {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &QMatrix) -> QMatrix {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &QMatrix, f: impl Fn(Quat, Quat) -> Quat) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> QMatrix {
        self.map(|q| q * s)
    }

    /// Entrywise left multiplication `q * A`, the action of the scalar matrix `qI`.
    pub fn scale_left(&self, q: Quat) -> QMatrix {
        self.map(|a| q * a)
    }

    /// Entrywise right multiplication `A * q`.
    pub fn scale_right(&self, q: Quat) -> QMatrix {
        self.map(|a| a * q)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    /// Plain transpose, without conjugation.
    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn conj_entries(&self) -> QMatrix {
        self.map(Quat::conj)
    }

    /// Frobenius inner product `<A, B> = trace(B* A) = sum conj(b) a`.
    pub fn frobenius_inner(&self, rhs: &QMatrix) -> Quat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let mut s = Quat::ZERO;
        for (a, b) in self.data.iter().zip(&rhs.data) {
            s += b.conj() * *a;
        }
        s
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|q| q.abs_sq()).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm_sq().sqrt()
    }

    pub fn frobenius_dist(&self, rhs: &QMatrix) -> f64 {
        self.sub(rhs).frobenius_norm()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|q| q.abs()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Quat {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(Quat::ZERO, |s, r| s + self[(r, r)])
    }

    /// Real part of the trace. The real trace is cyclic even over the
    /// quaternions, unlike the full trace.
    pub fn re_trace(&self) -> f64 {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|r| self[(r, r)].re()).sum()
    }

    pub fn approx_eq(&self, rhs: &QMatrix, eps: f64) -> bool {
        (self.rows, self.cols) == (rhs.rows, rhs.cols) && self.frobenius_dist(rhs) < eps
    }

    pub fn is_hermitian(&self, eps: f64) -> bool {
        self.is_square() && self.frobenius_dist(&self.adjoint()) < eps
    }

    /// Stacks `self` above `bottom`.
    pub fn vstack(&self, bottom: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, bottom.cols, "column count mismatch in vstack");
        QMatrix::from_fn(self.rows + bottom.rows, self.cols, |r, c| {
            if r < self.rows {
                self[(r, c)]
            } else {
                bottom[(r - self.rows, c)]
            }
        })
    }

    /// Places `right` to the right of `self`.
    pub fn hstack(&self, right: &QMatrix) -> QMatrix {
        assert_eq!(self.rows, right.rows, "row count mismatch in hstack");
        QMatrix::from_fn(self.rows, self.cols + right.cols, |r, c| {
            if c < self.cols {
                self[(r, c)]
            } else {
                right[(r, c - self.cols)]
            }
        })
    }

    /// `|| U* U - I ||_F`, zero exactly when the columns are orthonormal.
    pub fn unitary_defect(&self) -> f64 {
        let gram = self.adjoint().mul(self);
        gram.frobenius_dist(&QMatrix::identity(self.cols))
    }

    /// Inverse of a square matrix by Gaussian elimination on `[A | I]` with
    /// partial pivoting on entry modulus. Row operations multiply on the
    /// left, so the result is a two-sided inverse.
    pub fn solve_inverse(&self, tol: Tolerance) -> Result<QMatrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMatrix::identity(n);
        for p in 0..n {
            let (pivot_row, pivot_abs) = (p..n)
                .map(|r| (r, a[(r, p)].abs()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .expect("pivot search over a nonempty range");
            if pivot_abs < tol.eps() {
                return Err(Error::Singular { eps: tol.eps() });
            }
            if pivot_row != p {
                for c in 0..n {
                    a.data.swap(p * n + c, pivot_row * n + c);
                    inv.data.swap(p * n + c, pivot_row * n + c);
                }
            }
            let pivot_inv = a[(p, p)].inverse().expect("pivot passed the modulus check");
            for c in 0..n {
                a[(p, c)] = pivot_inv * a[(p, c)];
                inv[(p, c)] = pivot_inv * inv[(p, c)];
            }
            for r in 0..n {
                if r == p {
                    continue;
                }
                let factor = a[(r, p)];
                if factor == Quat::ZERO {
                    continue;
                }
                for c in 0..n {
                    let ap = a[(p, c)];
                    let ip = inv[(p, c)];
                    a[(r, c)] -= factor * ap;
                    inv[(r, c)] -= factor * ip;
                }
            }
        }
        Ok(inv)
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quat;
    fn index(&self, (r, c): (usize, usize)) -> &Quat {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quat {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        &mut self.data[r * self.cols + c]
    }
}

/// Inner product `<u, v> = sum_m conj(v_m) u_m` of two column vectors,
/// linear in `u` with right scalars passing through: `<u a, v> = <u, v> a`.
pub fn inner_product(u: &QMatrix, v: &QMatrix) -> Quat {
    assert_eq!(u.cols(), 1, "inner product expects column vectors");
    assert_eq!(v.cols(), 1, "inner product expects column vectors");
    u.frobenius_inner(v)
}

/// Inner product on plain slices, same convention as [`inner_product`].
pub fn inner_product_slices(u: &[Quat], v: &[Quat]) -> Quat {
    assert_eq!(u.len(), v.len(), "vector length mismatch");
    let mut s = Quat::ZERO;
    for (a, b) in u.iter().zip(v) {
        s += b.conj() * *a;
    }
    s
}

/// Orthonormalises the columns of `basis` in order and extends the result to
/// `target_cols` orthonormal columns by adjoining the coordinate vector with
/// the largest residual at each step (ties broken by lowest index).
///
/// The projection of `v` onto a unit vector `u` is `u * <v, u>`, the scalar
/// coefficient acting on the right. Fails with [`Error::DependentColumn`]
/// when a supplied column lies in the span of its predecessors to within
/// `eps * (1 + |column|)`.
pub fn gram_schmidt_extend(basis: &QMatrix, target_cols: usize, tol: Tolerance) -> Result<QMatrix> {
    let d = basis.rows();
    let m = basis.cols();
    if target_cols > d || target_cols < m {
        return Err(Error::ExtensionOverflow { want: target_cols, dim: d });
    }
    let mut out: Vec<Vec<Quat>> = Vec::with_capacity(target_cols);
    let project_off = |u: &mut Vec<Quat>, found: &[Vec<Quat>]| {
        // Two projection passes keep the result orthonormal to machine
        // precision even for nearly dependent inputs.
        for _ in 0..2 {
            for prev in found {
                let coeff = inner_product_slices(u, prev);
                for (ue, pe) in u.iter_mut().zip(prev) {
                    *ue -= *pe * coeff;
                }
            }
        }
    };
    for c in 0..m {
        let mut u = basis.col_vec(c);
        let scale = inner_product_slices(&u, &u).re().sqrt();
        project_off(&mut u, &out);
        let norm = inner_product_slices(&u, &u).re().sqrt();
        if norm < tol.eps() * (1.0 + scale) {
            return Err(Error::DependentColumn { index: c });
        }
        for e in &mut u {
            *e = *e / norm;
        }
        out.push(u);
    }
    while out.len() < target_cols {
        let mut best: Option<(usize, f64, Vec<Quat>)> = None;
        for i in 0..d {
            let mut u = vec![Quat::ZERO; d];
            u[i] = Quat::ONE;
            project_off(&mut u, &out);
            let norm = inner_product_slices(&u, &u).re().sqrt();
            if best.as_ref().is_none_or(|(_, n, _)| norm > *n) {
                best = Some((i, norm, u));
            }
        }
        let (_, norm, mut u) = best.expect("dimension is positive");
        if norm < tol.eps() {
            return Err(Error::ExtensionOverflow { want: target_cols, dim: d });
        }
        for e in &mut u {
            *e = *e / norm;
        }
        out.push(u);
    }
    let mut result = QMatrix::zeros(d, target_cols);
    for (c, u) in out.iter().enumerate() {
        result.set_col(c, u);
    }
    Ok(result)
}
