//! Small dense linear algebra: row-major matrices, cyclic Jacobi for
//! symmetric eigenproblems, and LU with partial pivoting.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense row-major square-or-rectangular matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.iter().flatten().copied().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    /// First `(row, col)` where `|a_ij - a_ji|` exceeds `tol`.
    pub fn asymmetry(&self, tol: T) -> Option<(usize, usize)> {
        if self.rows != self.cols {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if (self[(i, j)] - self[(j, i)]).abs() > tol {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(x).map(|(&a, &b)| a * b).sum()).collect()
    }

    pub fn matmul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    /// `self - shift * diag`, where `diag` holds the diagonal to subtract.
    pub fn shifted(&self, shift: T, diag: &[T]) -> Matrix<T> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(diag.len(), self.rows);
        let mut out = self.clone();
        for (i, &d) in diag.iter().enumerate() {
            out[(i, i)] = out[(i, i)] - shift * d;
        }
        out
    }

    /// Evaluates `sum_j coeffs[j] * self^j` by Horner's rule.
    pub fn polynomial(&self, coeffs: &[T]) -> Matrix<T> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for &c in coeffs.iter().rev() {
            acc = acc.matmul(self);
            for i in 0..n {
                acc[(i, i)] = acc[(i, i)] + c;
            }
        }
        acc
    }

    /// Determinant by LU factorization with partial pivoting.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&x, &y| a[(x, col)].abs().partial_cmp(&a[(y, col)].abs()).unwrap())
                .expect("non-empty range");
            if a[(pivot, col)] == T::zero() {
                return T::zero();
            }
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a[(col, col)];
            det = det * p;
            for r in col + 1..n {
                let f = a[(r, col)] / p;
                if f == T::zero() {
                    continue;
                }
                for c in col..n {
                    a[(r, c)] = a[(r, c)] - f * a[(col, c)];
                }
            }
        }
        det
    }

    /// Solves `self * x = b` by Gaussian elimination with partial pivoting.
    /// Returns `None` for a numerically singular system.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let mut a = self.clone();
        let mut x = b.to_vec();
        let scale = self.data.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        let tiny = scale * T::epsilon() * T::of_usize(n.max(1));
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&p, &q| a[(p, col)].abs().partial_cmp(&a[(q, col)].abs()).unwrap())
                .expect("non-empty range");
            if a[(pivot, col)].abs() <= tiny {
                return None;
            }
            if pivot != col {
                a.swap_rows(pivot, col);
                x.swap(pivot, col);
            }
            let p = a[(col, col)];
            for r in col + 1..n {
                let f = a[(r, col)] / p;
                for c in col..n {
                    a[(r, c)] = a[(r, c)] - f * a[(col, c)];
                }
                x[r] = x[r] - f * x[col];
            }
        }
        for r in (0..n).rev() {
            let mut s = x[r];
            for c in r + 1..n {
                s = s - a[(r, c)] * x[c];
            }
            x[r] = s / a[(r, r)];
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

pub fn norm<T: Real>(a: &[T]) -> T {
    dot(a, a).sqrt()
}

/// Eigenvalues with matching unit eigenvectors (columns of `vectors`).
#[derive(Debug, Clone)]
pub struct SymmetricEigen<T> {
    pub values: Vec<T>,
    pub vectors: Matrix<T>,
}

impl<T: Real> SymmetricEigen<T> {
    pub fn vector(&self, k: usize) -> Vec<T> {
        (0..self.vectors.rows()).map(|i| self.vectors[(i, k)]).collect()
    }
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigensolver for symmetric matrices.
///
/// Sweeps the upper triangle in row order, annihilating each off-diagonal
/// entry with a plane rotation, until the off-diagonal Frobenius norm falls
/// below `T::JACOBI_TOL * ||A||_F`. Eigenpairs come back sorted by
/// descending eigenvalue.
pub fn symmetric_eigen<T: Real>(a: &Matrix<T>) -> Result<SymmetricEigen<T>> {
    let n = a.rows();
    let scale = a.frobenius_norm();
    let sym_tol = T::of(T::JACOBI_TOL) * scale.max(T::one());
    if let Some((row, col)) = a.asymmetry(sym_tol) {
        return Err(Error::NotSymmetric { row, col });
    }
    let mut m = a.clone();
    let mut v = Matrix::identity(n);
    let target = T::of(T::JACOBI_TOL) * scale;

    let off_norm = |m: &Matrix<T>| {
        let mut s = T::zero();
        for i in 0..n {
            for j in i + 1..n {
                s = s + m[(i, j)] * m[(i, j)];
            }
        }
        (s + s).sqrt()
    };

    let mut converged = off_norm(&m) <= target;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let app = m[(p, p)];
                let aqq = m[(q, q)];
                let theta = (aqq - app) / (apq + apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                m[(p, q)] = T::zero();
                m[(q, p)] = T::zero();
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
        converged = off_norm(&m) <= target;
    }
    if !converged {
        return Err(Error::Internal(format!("Jacobi did not converge in {MAX_SWEEPS} sweeps")));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(j, j)].partial_cmp(&m[(i, i)]).unwrap());
    let values = order.iter().map(|&i| m[(i, i)]).collect();
    let mut vectors = Matrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for k in 0..n {
            vectors[(k, dst)] = v[(k, src)];
        }
    }
    Ok(SymmetricEigen { values, vectors })
}
