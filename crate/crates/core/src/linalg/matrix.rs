use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows of equal length. An empty row list gives a
    /// `0 × 0` matrix; use [`Matrix::empty_rows`] for `0 × n`.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!(
                "row {i} has {} entries, expected {cols}",
                r.len()
            )));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn empty_rows(cols: usize) -> Self {
        Matrix { rows: 0, cols, data: Vec::new() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows_iter().map(<[T]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::ShapeMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols, data })
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn diag(values: &[T]) -> Self {
        let n = values.len();
        Matrix::from_fn(n, n, |i, j| if i == j { values[i].clone() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Zero above the diagonal.
    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }
}

impl<T: Clone + Zero + One + PartialEq> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j { x.is_one() } else { x.is_zero() }
                })
            })
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a.clone() * b.clone();
                        let slot = &mut out[(i, j)];
                        *slot = slot.clone() + prod;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplies on the left by `diag(d)`, scaling row `i` by `d[i]`.
    pub fn scale_rows(&self, d: &[T]) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| d[i].clone() * self[(i, j)].clone())
    }

    /// Multiplies on the right by `diag(d)`, scaling column `j` by `d[j]`.
    pub fn scale_cols(&self, d: &[T]) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() * d[j].clone())
    }

    /// Kronecker product; the row index of `self` varies slowest.
    pub fn kronecker(&self, other: &Self) -> Self {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self[(i / other.rows, j / other.cols)].clone() * other[(i % other.rows, j % other.cols)].clone()
        })
    }
}

impl<T: Field> Matrix<T> {
    /// Row-reduces a copy; returns the reduced matrix, pivot columns and the
    /// determinant factor accumulated along the way (sign and pivots).
    fn eliminate(&self) -> (Self, Vec<usize>, T) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det = T::one();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                det = T::zero();
                continue;
            };
            if pr != row {
                m.swap_rows(pr, row);
                det = -det;
            }
            let pivot = m[(row, col)].clone();
            det = det * pivot.clone();
            for i in row + 1..m.rows {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let factor = m[(i, col)].clone() / pivot.clone();
                for j in col..m.cols {
                    let v = m[(row, j)].clone() * factor.clone();
                    m[(i, j)] = m[(i, j)].clone() - v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots, det)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1.len()
    }

    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!("determinant of {}x{}", self.rows, self.cols)));
        }
        let (_, pivots, det) = self.eliminate();
        Ok(if pivots.len() == self.rows { det } else { T::zero() })
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv: Matrix<T> = Matrix::identity(n);
        for col in 0..n {
            let pr = (col..n).find(|&i| !a[(i, col)].is_zero()).ok_or(Error::Singular)?;
            a.swap_rows(pr, col);
            inv.swap_rows(pr, col);
            let pivot = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = a[(col, j)].clone() / pivot.clone();
                inv[(col, j)] = inv[(col, j)].clone() / pivot.clone();
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let factor = a[(i, col)].clone();
                for j in 0..n {
                    let va = a[(col, j)].clone() * factor.clone();
                    a[(i, j)] = a[(i, j)].clone() - va;
                    let vi = inv[(col, j)].clone() * factor.clone();
                    inv[(i, j)] = inv[(i, j)].clone() - vi;
                }
            }
        }
        Ok(inv)
    }
}

impl<T> Matrix<T> {
    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Clone + Integer> Matrix<T> {
    pub fn to_rational(&self) -> Matrix<Ratio<T>> {
        self.map(|x| Ratio::from_integer(x.clone()))
    }
}

impl<T: Clone + Integer + Signed> Matrix<Ratio<T>> {
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Ratio::is_integer)
    }

    pub fn to_integer(&self) -> Result<Matrix<T>> {
        if !self.is_integral() {
            return Err(Error::NonIntegral);
        }
        Ok(self.map(Ratio::to_integer))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    /// Panics on a shape mismatch; use [`Matrix::try_mul`] for a `Result`.
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix shapes do not match")
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
