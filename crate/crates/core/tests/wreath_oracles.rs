use std::collections::HashMap;

use gencartan::partitions::{enumerate_partition_maps, sum_partitions, z_value, Partition, PartitionMap};
use gencartan::symfun::character_table;
use gencartan::wreath::{exponent_vectors, sym_power, wreath_pp, wreath_ss, x_matrix_conjugated, x_matrix_direct};
use gencartan::{Int, Matrix, Rat, RatMatrix};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(rng: &mut ChaCha8Rng, t: usize, q: usize) -> RatMatrix {
    Matrix::from_fn(t, q, |_, _| Rat::from_integer(Int::from(rng.gen_range(-2i64..=2))))
}

fn z(l: &Partition) -> Rat {
    Rat::from_integer(z_value(l).into())
}

fn chi(lambda: &Partition, mu: &Partition) -> Rat {
    Rat::from_integer(character_table(lambda.size()).value(lambda, mu).unwrap().clone())
}

fn pow(a: &Rat, e: usize) -> Rat {
    (0..e).fold(Rat::one(), |acc, _| acc * a)
}

fn index(maps: &[PartitionMap]) -> HashMap<PartitionMap, usize> {
    maps.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect()
}

/// Row and column unions of a `T × Q` array of partitions stored row-major.
fn margins(nu: &PartitionMap, nt: usize, nq: usize) -> (PartitionMap, PartitionMap) {
    let c = nu.components();
    let rows = (0..nt).map(|t| sum_partitions((0..nq).map(|q| &c[t * nq + q]))).collect();
    let cols = (0..nq).map(|q| sum_partitions((0..nt).map(|t| &c[t * nq + q]))).collect();
    (PartitionMap(rows), PartitionMap(cols))
}

fn weight(a: &RatMatrix, nu: &PartitionMap, nq: usize) -> Rat {
    nu.components().iter().enumerate().fold(Rat::one(), |acc, (k, l)| acc * pow(&a[(k / nq, k % nq)], l.len()))
}

fn oracle_pp(a: &RatMatrix, w: usize) -> RatMatrix {
    let (nt, nq) = a.shape();
    let (rows, cols) = (enumerate_partition_maps(nt, w), enumerate_partition_maps(nq, w));
    let (ri, ci) = (index(&rows), index(&cols));
    let mut out = Matrix::zeros(rows.len(), cols.len());
    for nu in enumerate_partition_maps(nt * nq, w) {
        let (r, c) = margins(&nu, nt, nq);
        let mut term = weight(a, &nu, nq);
        for l in r.components() {
            term *= z(l);
        }
        for l in nu.components() {
            term /= z(l);
        }
        out[(ri[&r], ci[&c])] += term;
    }
    out
}

fn oracle_ss(a: &RatMatrix, w: usize) -> RatMatrix {
    let (nt, nq) = a.shape();
    let (rows, cols) = (enumerate_partition_maps(nt, w), enumerate_partition_maps(nq, w));
    let mut out = Matrix::zeros(rows.len(), cols.len());
    for nu in enumerate_partition_maps(nt * nq, w) {
        let (r, c) = margins(&nu, nt, nq);
        let mut base = weight(a, &nu, nq);
        if base.is_zero() {
            continue;
        }
        for l in nu.components() {
            base /= z(l);
        }
        for (i, lam) in rows.iter().enumerate() {
            if lam.components().iter().zip(r.components()).any(|(x, y)| x.size() != y.size()) {
                continue;
            }
            let left: Rat = lam.components().iter().zip(r.components()).map(|(x, y)| chi(x, y)).product();
            if left.is_zero() {
                continue;
            }
            for (j, mu) in cols.iter().enumerate() {
                if mu.components().iter().zip(c.components()).any(|(x, y)| x.size() != y.size()) {
                    continue;
                }
                let right: Rat = mu.components().iter().zip(c.components()).map(|(x, y)| chi(x, y)).product();
                out[(i, j)] += &base * &left * right;
            }
        }
    }
    out
}

/// `Sym^n(A)` entry by entry: sum over contingency tables with the given
/// margins of multinomial row coefficients times monomials in `A`.
fn oracle_sym(a: &RatMatrix, n: usize) -> RatMatrix {
    fn tables(rows: &[usize], cols: &[usize]) -> Vec<Vec<Vec<usize>>> {
        let Some((&first, rest)) = rows.split_first() else {
            return if cols.iter().all(|&c| c == 0) { vec![Vec::new()] } else { Vec::new() };
        };
        let mut out = Vec::new();
        for row in exponent_vectors(cols.len(), first) {
            if row.iter().zip(cols).any(|(x, c)| x > c) {
                continue;
            }
            let left: Vec<usize> = cols.iter().zip(&row).map(|(c, x)| c - x).collect();
            for mut t in tables(rest, &left) {
                t.insert(0, row.clone());
                out.push(t);
            }
        }
        out
    }
    let fact = |k: usize| Rat::from_integer((1..=k).map(Int::from).product());
    let (nt, nq) = a.shape();
    let (rows, cols) = (exponent_vectors(nt, n), exponent_vectors(nq, n));
    Matrix::from_fn(rows.len(), cols.len(), |i, j| {
        tables(&rows[i], &cols[j])
            .iter()
            .map(|k| {
                let mut term = Rat::one();
                for (t, row) in k.iter().enumerate() {
                    term *= fact(rows[i][t]);
                    for (q, &e) in row.iter().enumerate() {
                        term = term / fact(e) * pow(&a[(t, q)], e);
                    }
                }
                term
            })
            .sum()
    })
}

#[test]
fn sym_power_matches_multinomial_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let (t, q) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let a = random_matrix(&mut rng, t, q);
        for n in 0..=4 {
            assert_eq!(sym_power(&a, n), oracle_sym(&a, n), "A={a} n={n}");
        }
    }
}

#[test]
fn sym_power_is_a_functor() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let a = random_matrix(&mut rng, 2, 3);
        let b = random_matrix(&mut rng, 3, 2);
        for n in 0..=4 {
            let ab = sym_power(&a.try_mul(&b).unwrap(), n);
            assert_eq!(ab, sym_power(&a, n).try_mul(&sym_power(&b, n)).unwrap());
        }
    }
}

#[test]
fn wreath_pp_matches_centraliser_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..12 {
        let (t, q) = (rng.gen_range(1..=2), rng.gen_range(1..=3));
        let a = random_matrix(&mut rng, t, q);
        for w in 0..=4 {
            assert_eq!(wreath_pp(&a, w), oracle_pp(&a, w), "A={a} w={w}");
        }
    }
}

#[test]
fn wreath_ss_matches_defining_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..8 {
        let (t, q) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let a = random_matrix(&mut rng, t, q);
        for w in 0..=4 {
            assert_eq!(wreath_ss(&a, w), oracle_ss(&a, w), "A={a} w={w}");
        }
    }
}

#[test]
fn x_matrix_paths_agree() {
    for ell in [0u64, 1, 2, 3, 4, 6, 12] {
        for w in 0..=8 {
            assert_eq!(x_matrix_direct(ell, w).unwrap(), x_matrix_conjugated(ell, w).unwrap(), "ell={ell} w={w}");
        }
    }
}

#[test]
fn x_matrix_is_one_by_one_wreath() {
    for ell in [0i64, 2, 5] {
        let a = Matrix::from_fn(1, 1, |_, _| Rat::from_integer(Int::from(ell)));
        for w in 0..=5 {
            assert_eq!(wreath_ss(&a, w), x_matrix_direct(ell as u64, w).unwrap().to_rational());
        }
    }
}
