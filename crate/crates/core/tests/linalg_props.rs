use gencartan::linalg::{
    diagonal_invariant_factors, format_matrix, hnf_row, hnf_with_transform, integer_kernel, parse_matrix, snf,
};
use gencartan::{Int, IntMatrix, Matrix};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn from_i64(rows: usize, cols: usize, v: &[i64]) -> IntMatrix {
    Matrix::from_fn(rows, cols, |i, j| Int::from(v[i * cols + j]))
}

/// Unimodular matrix from a word in elementary row operations.
fn unimodular(n: usize, ops: &[(usize, usize, i64, bool)]) -> IntMatrix {
    let mut m: IntMatrix = Matrix::identity(n);
    for &(a, b, k, swap) in ops {
        let (a, b) = (a % n, b % n);
        if swap {
            let p = Matrix::from_fn(n, n, |i, j| {
                let src = if i == a { b } else if i == b { a } else { i };
                if j == src { Int::one() } else { Int::zero() }
            });
            m = &p * &m;
        } else if a != b {
            let e = Matrix::from_fn(n, n, |i, j| {
                if i == j {
                    Int::one()
                } else if i == a && j == b {
                    Int::from(k)
                } else {
                    Int::zero()
                }
            });
            m = &e * &m;
        }
    }
    m
}

fn ops() -> impl Strategy<Value = Vec<(usize, usize, i64, bool)>> {
    prop::collection::vec((0usize..12, 0usize..12, -3i64..=3, any::<bool>()), 0..30)
}

fn chain_ok(f: &[Int]) -> bool {
    f.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_invariant_under_unimodular(
        diag in prop::collection::vec(-40i64..=40, 1..=12),
        left in ops(),
        right in ops(),
    ) {
        let n = diag.len();
        let d: Vec<Int> = diag.iter().map(|&x| Int::from(x)).collect();
        let a = &(&unimodular(n, &left) * &Matrix::diag(&d)) * &unimodular(n, &right).transpose();
        let s = snf(&a);
        prop_assert_eq!(s.factors, diagonal_invariant_factors(&d));
    }

    #[test]
    fn snf_product_is_abs_det(rows in 1usize..=6, v in prop::collection::vec(-9i64..=9, 36)) {
        let a = from_i64(rows, rows, &v);
        let s = snf(&a);
        prop_assert!(chain_ok(&s.factors));
        prop_assert!(s.factors.iter().all(|x| !x.is_negative()));
        let det = a.to_rational().det().unwrap();
        let prod: Int = s.factors.iter().product();
        prop_assert_eq!(gencartan::Rat::from_integer(prod), det.abs());
        prop_assert_eq!(s.rank, a.to_rational().rank());
    }

    #[test]
    fn snf_rectangular(rows in 1usize..=5, cols in 1usize..=5, v in prop::collection::vec(-6i64..=6, 25)) {
        let a = from_i64(rows, cols, &v);
        let s = snf(&a);
        prop_assert_eq!(s.factors.len(), rows.min(cols));
        prop_assert!(chain_ok(&s.factors));
        prop_assert_eq!(snf(&a.transpose()).factors, s.factors);
    }

    #[test]
    fn hnf_is_canonical(rows in 1usize..=5, cols in 1usize..=5, v in prop::collection::vec(-6i64..=6, 25), w in ops()) {
        let a = from_i64(rows, cols, &v);
        let (h, u, pivots) = hnf_with_transform(&a);
        prop_assert_eq!(&(&u * &a), &h);
        prop_assert!(u.to_rational().det().unwrap().abs().is_one());
        for (r, &c) in pivots.iter().enumerate() {
            prop_assert!(h[(r, c)].is_positive());
            for above in 0..r {
                prop_assert!(!h[(above, c)].is_negative() && h[(above, c)] < h[(r, c)]);
            }
            for below in r + 1..rows {
                prop_assert!(h[(below, c)].is_zero());
            }
        }
        prop_assert_eq!(hnf_row(&(&unimodular(rows, &w) * &a)), hnf_row(&a));
    }

    #[test]
    fn kernel_is_saturated_and_complete(rows in 1usize..=5, cols in 1usize..=4, v in prop::collection::vec(-3i64..=3, 20)) {
        let a = from_i64(rows, cols, &v);
        let k = integer_kernel(&a);
        let rank = a.to_rational().rank();
        prop_assert_eq!(k.nrows(), rows - rank);
        prop_assert!((&k * &a).is_zero());
        prop_assert!(snf(&k).factors.iter().all(|x| x.is_one()));
        // every small kernel vector lies in the row lattice of k
        let total = 5usize.pow(rows as u32);
        for code in 0..total {
            let mut c = code;
            let x: Vec<Int> = (0..rows).map(|_| { let d = (c % 5) as i64 - 2; c /= 5; Int::from(d) }).collect();
            let xm = Matrix::from_fn(1, rows, |_, j| x[j].clone());
            if (&xm * &a).is_zero() && !xm.is_zero() {
                prop_assert_eq!(hnf_row(&k.vstack(&xm).unwrap()), hnf_row(&k));
            }
        }
    }

    #[test]
    fn matrix_text_round_trip(rows in 1usize..=4, cols in 1usize..=4, v in prop::collection::vec(-50i64..=50, 16)) {
        let a = from_i64(rows, cols, &v).to_rational();
        prop_assert_eq!(parse_matrix(&format_matrix(&a)).unwrap(), a);
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let err = parse_matrix("1, 2\n3, x\n").unwrap_err().to_string();
    assert!(err.contains('2'), "{err}");
    assert!(parse_matrix("1, 2\n3\n").is_err());
    assert!(parse_matrix("1/0\n").is_err());
}
