//! The wreath operator `A ↦ A^{≀w}(u, v)`, symmetric powers, the matrices
//! `X_{ℓ,w}` and checks of their algebraic laws.
//!
//! Rows of a `T×Q` matrix `A` are indexed by `T`; as a linear map it sends
//! `t ↦ Σ_q A_{tq} q`. `PMap_w(T)` is ordered as in
//! [`enumerate_partition_maps`].

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::theta;
use crate::error::{Error, Result};
use crate::linalg::{diagonal_invariant_factors, p_part_of_snf, snf};
use crate::partitions::{enumerate_partition_maps, enumerate_partitions, z_value, Partition, PartitionMap};
use crate::report::{multiset, params, Conditions, VerificationReport};
use crate::symfun::{character_table, schur_power_inverse, transition, Basis};
use crate::{arith, IntMatrix, Matrix, Rat, RatMatrix};

/// `I_n([0, t))`: vectors of `t` nonnegative integers summing to `n`, in
/// descending lexicographic order (so `t_1^2, t_1 t_2, t_2^2` for `t = 2`).
pub fn exponent_vectors(t: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(t: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == t {
            cur.push(remaining);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=remaining).rev() {
            cur.push(first);
            rec(t, remaining - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if t == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(t, n, &mut Vec::new(), &mut out);
    out
}

fn positions(vectors: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    vectors.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect()
}

/// `Sym^n(A)` on monomial bases: row `i` holds the expansion of
/// `∏_t (Σ_q A_{tq} q)^{i(t)}`.
pub fn sym_power(a: &RatMatrix, n: usize) -> RatMatrix {
    let (nt, nq) = a.shape();
    let rows = exponent_vectors(nt, n);
    let cols = exponent_vectors(nq, n);
    let col_pos = positions(&cols);
    let mut out = Matrix::zeros(rows.len(), cols.len());
    for (ri, i) in rows.iter().enumerate() {
        let mut poly: HashMap<Vec<usize>, Rat> = HashMap::from([(vec![0; nq], Rat::one())]);
        for (t, &it) in i.iter().enumerate() {
            for _ in 0..it {
                let mut next: HashMap<Vec<usize>, Rat> = HashMap::new();
                for (mono, c) in &poly {
                    for q in 0..nq {
                        let x = &a[(t, q)];
                        if x.is_zero() {
                            continue;
                        }
                        let mut m = mono.clone();
                        m[q] += 1;
                        *next.entry(m).or_insert_with(Rat::zero) += c * x;
                    }
                }
                poly = next;
            }
        }
        for (mono, c) in poly {
            out[(ri, col_pos[&mono])] = c;
        }
    }
    out
}

/// `d ↦ (t ↦ m_d(λ̲(t)))` for `d = 1..=w`.
fn hat(lambda: &PartitionMap, w: usize) -> Vec<Vec<usize>> {
    (1..=w).map(|d| lambda.components().iter().map(|l| l.multiplicity(d)).collect()).collect()
}

/// `A^{≀w}(p, p̃)`. The entry at `(λ̲, μ̲)` vanishes unless both sides have
/// the same multiplicity totals `j(d)`; otherwise it is
/// `∏_d Sym^{j(d)}(A)[λ̂^d, μ̂^d]`.
pub fn wreath_pp(a: &RatMatrix, w: usize) -> RatMatrix {
    let (nt, nq) = a.shape();
    let rows = enumerate_partition_maps(nt, w);
    let cols = enumerate_partition_maps(nq, w);
    let syms: Vec<RatMatrix> = (0..=w).map(|n| sym_power(a, n)).collect();
    let row_pos: Vec<_> = (0..=w).map(|n| positions(&exponent_vectors(nt, n))).collect();
    let col_pos: Vec<_> = (0..=w).map(|n| positions(&exponent_vectors(nq, n))).collect();
    let row_hats: Vec<_> = rows.iter().map(|l| hat(l, w)).collect();
    let col_hats: Vec<_> = cols.iter().map(|m| hat(m, w)).collect();
    Matrix::from_fn(rows.len(), cols.len(), |i, j| {
        let mut entry = Rat::one();
        for (ld, md) in row_hats[i].iter().zip(&col_hats[j]) {
            let n: usize = ld.iter().sum();
            if n != md.iter().sum::<usize>() {
                return Rat::zero();
            }
            entry *= &syms[n][(row_pos[n][ld], col_pos[n][md])];
            if entry.is_zero() {
                break;
            }
        }
        entry
    })
}

/// `M^{⊗T}` over `PMap_w(T)`, given `M` degree by degree.
fn tensor_power(t: usize, w: usize, graded: &[RatMatrix]) -> RatMatrix {
    let maps = enumerate_partition_maps(t, w);
    let idx: Vec<Vec<(usize, usize)>> = maps
        .iter()
        .map(|m| {
            m.components()
                .iter()
                .map(|l| (l.size(), enumerate_partitions(l.size()).binary_search(l).unwrap()))
                .collect()
        })
        .collect();
    Matrix::from_fn(maps.len(), maps.len(), |i, j| {
        let mut entry = Rat::one();
        for (&(si, pi), &(sj, pj)) in idx[i].iter().zip(&idx[j]) {
            if si != sj {
                return Rat::zero();
            }
            entry *= &graded[si][(pi, pj)];
        }
        entry
    })
}

/// `A^{≀w}(s, s) = M^{⊗T} · A^{≀w}(p, p̃) · (M⁻¹)^{⊗Q}` with `M = M(s, p)`.
pub fn wreath_ss(a: &RatMatrix, w: usize) -> RatMatrix {
    let (nt, nq) = a.shape();
    let msp: Vec<RatMatrix> = (0..=w).map(|n| (*transition(Basis::S, Basis::P, n)).clone()).collect();
    let mps: Vec<RatMatrix> = (0..=w).map(|n| schur_power_inverse(n).to_rational()).collect();
    let left = tensor_power(nt, w, &msp);
    let right = tensor_power(nq, w, &mps);
    &(&left * &wreath_pp(a, w)) * &right
}

/// [`wreath_ss`] for an integer matrix; the result is integral.
pub fn wreath_ss_int(a: &IntMatrix, w: usize) -> Result<IntMatrix> {
    wreath_ss(&a.to_rational(), w).to_integer()
}

/// `X^{(s,s)}_{ℓ,w}` together with its index set `Par(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XMatrix {
    pub ell: u64,
    pub w: usize,
    pub index: Vec<Partition>,
    pub matrix: IntMatrix,
}

fn ell_power(ell: u64, k: usize) -> BigInt {
    BigInt::from(ell).pow(k as u32)
}

/// Entry `(λ, μ)` is `Σ_ν χ^λ(ν) χ^μ(ν) ℓ^{l(ν)} / z_ν`, with `0^0 = 1`.
pub fn x_matrix_direct(ell: u64, w: usize) -> Result<IntMatrix> {
    let chi = character_table(w);
    let n = chi.index.len();
    let order: BigInt = (1..=w).map(BigInt::from).product();
    // w!/z_ν is an integer, so the sum is formed over the common denominator w!
    let weights: Vec<BigInt> = chi
        .index
        .iter()
        .map(|nu| ell_power(ell, nu.len()) * (&order / BigInt::from(z_value(nu))))
        .collect();
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let mut s = BigInt::zero();
            for (k, wk) in weights.iter().enumerate() {
                s += &chi.values[(i, k)] * &chi.values[(j, k)] * wk;
            }
            let (q, r) = num_integer::Integer::div_rem(&s, &order);
            if !r.is_zero() {
                return Err(Error::NonIntegral);
            }
            out[(j, i)] = q.clone();
            out[(i, j)] = q;
        }
    }
    Ok(out)
}

/// `M(s,p;w) · diag(ℓ^{l(λ)}) · M(s,p;w)⁻¹`, inverting numerically.
pub fn x_matrix_conjugated(ell: u64, w: usize) -> Result<IntMatrix> {
    let m = transition(Basis::S, Basis::P, w);
    let d: Vec<Rat> = enumerate_partitions(w).iter().map(|l| Rat::from_integer(ell_power(ell, l.len()))).collect();
    let inv = m.inverse()?;
    m.scale_cols(&d).try_mul(&inv)?.to_integer()
}

/// `X^{(s,s)}_{ℓ,w}`, computed along both paths; they must agree.
pub fn x_matrix(ell: u64, w: usize) -> Result<XMatrix> {
    let direct = x_matrix_direct(ell, w)?;
    let conj = x_matrix_conjugated(ell, w)?;
    if direct != conj {
        return Err(Error::Internal(format!("X_{{{ell},{w}}} differs between direct sum and conjugation")));
    }
    Ok(XMatrix { ell, w, index: enumerate_partitions(w), matrix: direct })
}

/// The `(ℓ-1)×(ℓ-1)` tridiagonal Gram matrix with `2` on the diagonal and
/// `1` beside it.
pub fn cartan_a_matrix(ell: u64) -> Result<IntMatrix> {
    if ell < 2 {
        return Err(Error::EllTooSmall(ell));
    }
    let n = ell as usize - 1;
    Ok(Matrix::from_fn(n, n, |i, j| match i.abs_diff(j) {
        0 => BigInt::from(2),
        1 => BigInt::one(),
        _ => BigInt::zero(),
    }))
}

/// p-parts of the invariant factors of `X_{p^r,w}` against
/// `{c_{p,r}(λ) : λ ⊢ w}`.
pub fn verify_x_prime_power(p: u64, r: u32, w: usize) -> VerificationReport {
    let prm = params([("p", p.to_string()), ("r", r.to_string()), ("w", w.to_string())]);
    VerificationReport::run("x-prime-power", prm, || {
        let ell = p.checked_pow(r).ok_or_else(|| Error::Internal("p^r overflows".into()))?;
        let x = x_matrix(ell, w)?;
        let expected = x.index.iter().map(|l| arith::c_pr(l, p, r)).collect();
        Ok((multiset(expected), multiset(p_part_of_snf(&x.matrix, p))))
    })
}

/// Invariant factors of `X_{ℓ,w}` against those of `diag(ϑ_λ(ℓ))`.
pub fn verify_x_general(ell: u64, w: usize) -> VerificationReport {
    let prm = params([("ell", ell.to_string()), ("w", w.to_string())]);
    VerificationReport::run("x-general", prm, || {
        let x = x_matrix(ell, w)?;
        let thetas: Vec<BigInt> = x.index.iter().map(|l| BigInt::from(theta(l, ell))).collect();
        let expected = diagonal_invariant_factors(&thetas);
        Ok((multiset(expected), multiset(snf(&x.matrix).factors)))
    })
}

/// Invariant factors of `diag(∏_t ϑ_{λ̲(t)}(a_t))` over `λ̲ ∈ PMap_w(T)`.
pub fn expected_diagonal_wreath(a: &[u64], w: usize) -> Vec<BigInt> {
    let values: Vec<BigInt> = enumerate_partition_maps(a.len(), w)
        .iter()
        .map(|m| {
            let prod: BigUint = m.components().iter().zip(a).map(|(l, &at)| theta(l, at)).product();
            BigInt::from(prod)
        })
        .collect();
    diagonal_invariant_factors(&values)
}

fn random_int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> IntMatrix {
    Matrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-2i64..=2)))
}

/// Product of up to 20 elementary integer row operations.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut u: IntMatrix = Matrix::identity(n);
    for _ in 0..rng.gen_range(0..=20) {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        match rng.gen_range(0..3) {
            0 if i != j => u.swap_rows(i, j),
            1 => {
                for c in 0..n {
                    u[(i, c)] = -u[(i, c)].clone();
                }
            }
            _ if i != j => {
                let k = BigInt::from(rng.gen_range(-2i64..=2));
                for c in 0..n {
                    let add = &k * &u[(j, c)];
                    u[(i, c)] += add;
                }
            }
            _ => {}
        }
    }
    u
}

/// Randomised checks of the wreath operator laws at `|T|, |Q|, |Z| ≤ 3` and
/// `w ≤ 4`: multiplicativity, identity, integrality, equivalence transport
/// and the tensor-block form for diagonal matrices. One report per law.
pub fn verify_wreath_laws(trials: usize, seed: u64) -> Vec<VerificationReport> {
    let prm = || params([("trials", trials.to_string()), ("seed", seed.to_string())]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::with_capacity(trials);
    for _ in 0..trials {
        let dims = [rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3)];
        let w = rng.gen_range(0..=4usize);
        let a = random_int_matrix(&mut rng, dims[0], dims[1]);
        let b = random_int_matrix(&mut rng, dims[1], dims[2]);
        let u = random_unimodular(&mut rng, dims[0]);
        let v = random_unimodular(&mut rng, dims[1]);
        let diag: Vec<u64> = (0..dims[0]).map(|_| rng.gen_range(0..=4)).collect();
        cases.push((w, a, b, u, v, diag));
    }
    let at = |k: usize, w: usize| format!("trial {k} w={w}");

    let multiplicative = VerificationReport::run("wreath-multiplicative", prm(), || {
        let mut c = Conditions::new(&["(AB)^wr = A^wr B^wr"]);
        for (k, (w, a, b, ..)) in cases.iter().enumerate() {
            let ab = a.try_mul(b)?;
            let lhs = wreath_ss(&ab.to_rational(), *w);
            let rhs = wreath_ss(&a.to_rational(), *w).try_mul(&wreath_ss(&b.to_rational(), *w))?;
            c.check(0, lhs == rhs, || at(k, *w));
        }
        Ok(c.into_lists())
    });

    let identity = VerificationReport::run("wreath-identity", prm(), || {
        let mut c = Conditions::new(&["I^wr = I"]);
        for (k, (w, a, ..)) in cases.iter().enumerate() {
            let id: RatMatrix = Matrix::identity(a.nrows());
            c.check(0, wreath_ss(&id, *w).is_identity(), || at(k, *w));
        }
        Ok(c.into_lists())
    });

    let integral = VerificationReport::run("wreath-integral", prm(), || {
        let mut c = Conditions::new(&["A^wr(s,s) integral"]);
        for (k, (w, a, ..)) in cases.iter().enumerate() {
            c.check(0, wreath_ss(&a.to_rational(), *w).is_integral(), || at(k, *w));
        }
        Ok(c.into_lists())
    });

    let equivalence = VerificationReport::run("wreath-equivalence", prm(), || {
        let mut c = Conditions::new(&["SNF(A^wr) = SNF((UAV)^wr)"]);
        for (k, (w, a, _, u, v, _)) in cases.iter().enumerate() {
            let b = u.try_mul(a)?.try_mul(v)?;
            let sa = snf(&wreath_ss_int(a, *w)?);
            let sb = snf(&wreath_ss_int(&b, *w)?);
            c.check(0, sa == sb, || at(k, *w));
        }
        Ok(c.into_lists())
    });

    let diagonal = VerificationReport::run("wreath-diagonal", prm(), || {
        let mut c = Conditions::new(&["blocks are tensor products of X", "SNF matches theta products"]);
        for (k, (w, .., diag)) in cases.iter().enumerate() {
            let d: Vec<BigInt> = diag.iter().map(|&x| BigInt::from(x)).collect();
            let wr = wreath_ss_int(&Matrix::diag(&d), *w)?;
            c.check(0, diagonal_blocks_match(&wr, diag, *w)?, || at(k, *w));
            let expected = expected_diagonal_wreath(diag, *w);
            c.check(1, snf(&wr).factors == expected, || at(k, *w));
        }
        Ok(c.into_lists())
    });

    vec![multiplicative, identity, integral, equivalence, diagonal]
}

/// For `A = diag(a_t)`: the block of `A^{≀w}(s,s)` at sizes `j` equals
/// `⊗_t X_{a_t, j(t)}` and entries outside such blocks vanish.
fn diagonal_blocks_match(wr: &IntMatrix, a: &[u64], w: usize) -> Result<bool> {
    let maps = enumerate_partition_maps(a.len(), w);
    let sizes: Vec<Vec<usize>> = maps.iter().map(|m| m.components().iter().map(Partition::size).collect()).collect();
    for j in exponent_vectors(a.len(), w) {
        let block: Vec<usize> = (0..maps.len()).filter(|&i| sizes[i] == j).collect();
        let mut expected: IntMatrix = Matrix::identity(1);
        for (t, &jt) in j.iter().enumerate() {
            expected = expected.kronecker(&x_matrix(a[t], jt)?.matrix);
        }
        if wr.submatrix(&block, &block) != expected {
            return Ok(false);
        }
    }
    for i in 0..maps.len() {
        for k in 0..maps.len() {
            if sizes[i] != sizes[k] && !wr[(i, k)].is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
