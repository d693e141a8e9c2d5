
use super::Matrix;
use crate::scalar::EuclideanRing;

/// Row echelon form by unimodular row operations, tracking the transform.
/// Returns `(H, U, pivots)` with `U·A = H`; pivots are positive and the
/// entries above each pivot lie in `[0, pivot)`.
pub fn hnf_with_transform<T: EuclideanRing>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>, Vec<usize>) {
    let mut h = a.clone();
    let mut u = Matrix::identity(a.nrows());
    let nr = h.nrows();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..h.ncols() {
        if row == nr {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in row..nr {
                let x = &h[(i, col)];
                if !x.is_zero() && best.is_none_or(|b| x.abs() < h[(b, col)].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(row, b);
            u.swap_rows(row, b);
            let pivot = h[(row, col)].clone();
            let mut done = true;
            for i in row + 1..nr {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = h[(i, col)].div_floor(&pivot);
                sub_row(&mut h, i, row, &q);
                sub_row(&mut u, i, row, &q);
                done &= h[(i, col)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            negate_row(&mut h, row);
            negate_row(&mut u, row);
        }
        let pivot = h[(row, col)].clone();
        for i in 0..row {
            let q = h[(i, col)].div_floor(&pivot);
            if !q.is_zero() {
                sub_row(&mut h, i, row, &q);
                sub_row(&mut u, i, row, &q);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (h, u, pivots)
}

fn sub_row<T: EuclideanRing>(m: &mut Matrix<T>, target: usize, src: usize, q: &T) {
    for j in 0..m.ncols() {
        let s = m[(src, j)].clone();
        if !s.is_zero() {
            m[(target, j)] = m[(target, j)].clone() - q.clone() * s;
        }
    }
}

fn negate_row<T: EuclideanRing>(m: &mut Matrix<T>, i: usize) {
    for j in 0..m.ncols() {
        m[(i, j)] = -m[(i, j)].clone();
    }
}

/// Row-style Hermite normal form with zero rows dropped.
pub fn hnf_row<T: EuclideanRing>(a: &Matrix<T>) -> Matrix<T> {
    let (h, _, pivots) = hnf_with_transform(a);
    let keep: Vec<usize> = (0..pivots.len()).collect();
    let cols: Vec<usize> = (0..a.ncols()).collect();
    if keep.is_empty() {
        return Matrix::empty_rows(a.ncols());
    }
    h.submatrix(&keep, &cols)
}

/// Basis of the left kernel `{x ∈ T^m : x·A = 0}` as the rows of a matrix,
/// in Hermite normal form. The basis spans the whole integer kernel.
pub fn integer_kernel<T: EuclideanRing>(a: &Matrix<T>) -> Matrix<T> {
    let (_, u, pivots) = hnf_with_transform(a);
    let rows: Vec<usize> = (pivots.len()..a.nrows()).collect();
    if rows.is_empty() {
        return Matrix::empty_rows(a.nrows());
    }
    let cols: Vec<usize> = (0..a.nrows()).collect();
    hnf_row(&u.submatrix(&rows, &cols))
}
