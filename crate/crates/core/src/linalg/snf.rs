use num_traits::Signed;

use super::Matrix;
use crate::scalar::EuclideanRing;

/// Invariant factors `d_1 | d_2 | …`, nonnegative, padded with zeros to
/// `min(rows, cols)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult<T> {
    pub factors: Vec<T>,
    pub rank: usize,
}

impl<T: EuclideanRing> SnfResult<T> {
    pub fn nonzero(&self) -> &[T] {
        &self.factors[..self.rank]
    }
}

fn row_axpy<T: EuclideanRing>(m: &mut Matrix<T>, target: usize, src: usize, q: &T, from: usize) {
    for j in from..m.ncols() {
        let s = m[(src, j)].clone();
        if !s.is_zero() {
            m[(target, j)] = m[(target, j)].clone() - q.clone() * s;
        }
    }
}

fn col_axpy<T: EuclideanRing>(m: &mut Matrix<T>, target: usize, src: usize, q: &T, from: usize) {
    for i in from..m.nrows() {
        let s = m[(i, src)].clone();
        if !s.is_zero() {
            m[(i, target)] = m[(i, target)].clone() - q.clone() * s;
        }
    }
}

/// Smith normal form over a Euclidean ring, using smallest-magnitude pivots.
pub fn snf<T: EuclideanRing>(a: &Matrix<T>) -> SnfResult<T> {
    let mut m = a.clone();
    let (nr, nc) = m.shape();
    let size = nr.min(nc);
    let mut t = 0;
    while t < size {
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                let x = &m[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < m[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);

        loop {
            let pivot = m[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..nr {
                if !m[(i, t)].is_zero() {
                    let q = m[(i, t)].div_floor(&pivot);
                    row_axpy(&mut m, i, t, &q, t);
                    clean &= m[(i, t)].is_zero();
                }
            }
            for j in t + 1..nc {
                if !m[(t, j)].is_zero() {
                    let q = m[(t, j)].div_floor(&pivot);
                    col_axpy(&mut m, j, t, &q, t);
                    clean &= m[(t, j)].is_zero();
                }
            }
            if !clean {
                // a remainder smaller than the pivot survived: move it in
                let mut best = (t, t);
                for i in t + 1..nr {
                    if !m[(i, t)].is_zero() && m[(i, t)].abs() < m[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..nc {
                    if !m[(t, j)].is_zero() && m[(t, j)].abs() < m[best].abs() {
                        best = (t, j);
                    }
                }
                m.swap_rows(t, best.0);
                m.swap_cols(t, best.1);
                continue;
            }
            let bad = (t + 1..nr)
                .find(|&i| (t + 1..nc).any(|j| !m[(i, j)].is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let minus_one = -T::one();
                    row_axpy(&mut m, t, i, &minus_one, t);
                }
                None => break,
            }
        }
        t += 1;
    }
    let mut factors: Vec<T> = (0..t).map(|i| m[(i, i)].abs()).collect();
    factors.resize(size, T::zero());
    SnfResult { factors, rank: t }
}

/// Invariant factors of `diag(values)`, computed by repeated `(gcd, lcm)`
/// replacement. The output is a divisibility chain with zeros last.
pub fn diagonal_invariant_factors<T: EuclideanRing>(values: &[T]) -> Vec<T> {
    let mut d: Vec<T> = values.iter().map(Signed::abs).collect();
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            if d[j].is_zero() {
                continue;
            }
            if d[i].is_zero() {
                d.swap(i, j);
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}
