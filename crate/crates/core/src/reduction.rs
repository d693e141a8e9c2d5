//! Reduction of `X_{p^r,w}` to p-power partitions: the block-diagonal
//! models `M̃` and `L` of `M = M(h, p̃; w)`, the matrices `N`, `Y`, and the
//! factorisation chain `N = AC`, `A = x^{<r} U`, `S`, `V`, `Y'`, `Y''`.
//!
//! All matrices over `Pow(w)` use canonical partition order; blocks are the
//! classes of `λ ↦ λ̄`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{c_pr, exponents, is_prime, v_p_nonzero, v_p_rational};
use crate::error::{Error, Result};
use crate::linalg::{is_p_integral, p_local_unimodular, p_part_of_snf, p_part_of_snf_rational, p_row_equivalent};
use crate::partitions::{
    bar, block_class, class_regular_partitions, enumerate_partitions, iota_split, power_multiplicities,
    power_partitions, truncate_at_least_r, truncate_below_r, z_value, Partition,
};
use crate::report::{multiset, params, Conditions, Params, VerificationReport};
use crate::symfun::complete_table;
use crate::wreath::x_matrix;
use crate::{IntMatrix, Matrix, Rat, RatMatrix};

fn rat(x: &BigInt) -> Rat {
    Rat::from_integer(x.clone())
}

fn pow(p: u64, e: usize) -> BigInt {
    BigInt::from(p).pow(e as u32)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn position(list: &[Partition], lambda: &Partition) -> usize {
    list.binary_search(lambda).expect("partition belongs to the index set")
}

/// `N^{(w)}`: `M(h, p̃; w)` on p-power rows and columns.
pub fn n_matrix(w: usize, p: u64) -> IntMatrix {
    let all = enumerate_partitions(w);
    let pow_idx: Vec<usize> = power_partitions(w, p as usize).iter().map(|l| position(&all, l)).collect();
    complete_table(w).submatrix(&pow_idx, &pow_idx)
}

/// `M̃`: entries of `M(h, p̃; w)` kept when row and column share a block class.
pub fn truncated_m(w: usize, p: u64) -> IntMatrix {
    let all = enumerate_partitions(w);
    let class: Vec<Partition> = all.iter().map(|l| block_class(l, p as usize)).collect();
    let m = complete_table(w);
    Matrix::from_fn(all.len(), all.len(), |i, j| {
        if class[i] == class[j] { m[(i, j)].clone() } else { BigInt::zero() }
    })
}

/// `L`: block-diagonal over block classes `ν`, the `ν`-block being
/// `⊗_j N^{(m_j(ν))}` relabelled through `ι`.
pub fn tensor_l(w: usize, p: u64) -> IntMatrix {
    let pu = p as usize;
    let all = enumerate_partitions(w);
    let class: Vec<Partition> = all.iter().map(|l| block_class(l, pu)).collect();
    let split: Vec<BTreeMap<usize, Partition>> = all.iter().map(|l| iota_split(l, pu)).collect();
    let mut ns: BTreeMap<usize, (Vec<Partition>, IntMatrix)> = BTreeMap::new();
    for m in 0..=w {
        ns.insert(m, (power_partitions(m, pu), n_matrix(m, p)));
    }
    Matrix::from_fn(all.len(), all.len(), |i, j| {
        if class[i] != class[j] {
            return BigInt::zero();
        }
        let mut entry = BigInt::one();
        for (jj, li) in &split[i] {
            let mi = &split[j][jj];
            let (idx, n) = &ns[&li.size()];
            entry *= &n[(position(idx, li), position(idx, mi))];
        }
        entry
    })
}

/// `Y^{(w)} = N b N⁻¹` with `b = diag(p^{r l(λ)})`.
pub fn y_matrix(w: usize, p: u64, r: u32) -> Result<RatMatrix> {
    let n = n_matrix(w, p).to_rational();
    let b: Vec<Rat> = power_partitions(w, p as usize).iter().map(|l| rat(&pow(p, r as usize * l.len()))).collect();
    n.scale_cols(&b).try_mul(&n.inverse()?)
}

/// Fixed data for one `(p, r, w)`: the index set `Pow(w)`, its blocks and the
/// diagonal matrices, stored as their diagonals.
#[derive(Clone, Debug)]
pub struct ReductionContext {
    pub p: u64,
    pub r: u32,
    pub w: usize,
    pub index: Vec<Partition>,
    /// `λ̄` for each `λ`.
    pub kappa: Vec<Partition>,
    pub b: Vec<BigInt>,
    pub z: Vec<BigInt>,
    pub x: Vec<BigInt>,
    pub y: Vec<BigInt>,
    pub x_lt: Vec<BigInt>,
    pub x_ge: Vec<BigInt>,
    pub y_lt: Vec<BigInt>,
    pub y_ge: Vec<BigInt>,
    pub y_tilde: Vec<BigInt>,
    pub b_lt: Vec<BigInt>,
    pub k: Vec<i64>,
    pub rho: Vec<u64>,
}

impl ReductionContext {
    pub fn new(p: u64, r: u32, w: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let pu = p as usize;
        let index = power_partitions(w, pu);
        let mut ctx = ReductionContext {
            p,
            r,
            w,
            index: index.clone(),
            kappa: Vec::new(),
            b: Vec::new(),
            z: Vec::new(),
            x: Vec::new(),
            y: Vec::new(),
            x_lt: Vec::new(),
            x_ge: Vec::new(),
            y_lt: Vec::new(),
            y_ge: Vec::new(),
            y_tilde: Vec::new(),
            b_lt: Vec::new(),
            k: Vec::new(),
            rho: Vec::new(),
        };
        let r_us = r as usize;
        for lambda in &index {
            let n = power_multiplicities(lambda, pu)?;
            let ni = |i: usize| n.get(i).copied().unwrap_or(0);
            let top = n.len();
            ctx.kappa.push(bar(lambda, pu, r)?);
            ctx.b.push(pow(p, r_us * lambda.len()));
            ctx.z.push(BigInt::from(z_value(lambda)));
            ctx.x.push((0..top).map(|i| factorial(ni(i))).product());
            ctx.y.push((0..top).map(|i| pow(p, i * ni(i))).product());
            ctx.x_lt.push((0..top.min(r_us)).map(|i| factorial(ni(i))).product());
            ctx.x_ge.push((r_us..top).map(|i| factorial(ni(i))).product());
            ctx.y_lt.push((0..top.min(r_us)).map(|i| pow(p, i * ni(i))).product());
            ctx.y_ge.push((r_us..top).map(|i| pow(p, (i - r_us) * ni(i))).product());
            ctx.y_tilde.push((r_us..top).map(|i| pow(p, r_us * ni(i))).product());
            ctx.b_lt.push(pow(p, r_us * truncate_below_r(lambda, pu, r)?.len()));
            ctx.k.push(exponents(lambda, p, r)?.k);
            ctx.rho.push(c_pr(lambda, p, r));
        }
        Ok(ctx)
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    fn same_block(&self, i: usize, j: usize) -> bool {
        self.kappa[i] == self.kappa[j]
    }

    fn params(&self) -> Params {
        params([("p", self.p.to_string()), ("r", self.r.to_string()), ("w", self.w.to_string())])
    }

    fn label(&self, i: usize, j: usize) -> String {
        format!("({},{})", self.index[i], self.index[j])
    }
}

fn diag_rat(d: &[BigInt]) -> RatMatrix {
    Matrix::diag(&d.iter().map(rat).collect::<Vec<_>>())
}

fn inv_diag(d: &[BigInt]) -> RatMatrix {
    Matrix::diag(&d.iter().map(|x| Rat::new(BigInt::one(), x.clone())).collect::<Vec<_>>())
}

/// The named matrices of the chain.
#[derive(Clone, Debug)]
pub struct Chain {
    pub n: RatMatrix,
    pub c: RatMatrix,
    pub a: RatMatrix,
    pub u: RatMatrix,
    pub s: RatMatrix,
    pub v: RatMatrix,
    pub y: RatMatrix,
    pub y_dash: RatMatrix,
    pub y_ddash: RatMatrix,
}

/// `C_{λμ} = N^{(|λ^{≥r}|)}_{λ^{≥r}, μ^{≥r}}` inside blocks, zero elsewhere.
fn c_matrix(ctx: &ReductionContext) -> Result<RatMatrix> {
    let pu = ctx.p as usize;
    let upper: Vec<Partition> =
        ctx.index.iter().map(|l| truncate_at_least_r(l, pu, ctx.r)).collect::<Result<_>>()?;
    let mut ns: BTreeMap<usize, (Vec<Partition>, IntMatrix)> = BTreeMap::new();
    for l in &upper {
        ns.entry(l.size()).or_insert_with(|| (power_partitions(l.size(), pu), n_matrix(l.size(), ctx.p)));
    }
    Ok(Matrix::from_fn(ctx.len(), ctx.len(), |i, j| {
        if !ctx.same_block(i, j) {
            return Rat::zero();
        }
        let (idx, n) = &ns[&upper[i].size()];
        rat(&n[(position(idx, &upper[i]), position(idx, &upper[j]))])
    }))
}

pub fn chain(ctx: &ReductionContext) -> Result<Chain> {
    let n = n_matrix(ctx.w, ctx.p).to_rational();
    let c = c_matrix(ctx)?;
    let c_inv = c.inverse()?;
    let a = n.try_mul(&c_inv)?;
    let u = inv_diag(&ctx.x_lt).try_mul(&a)?;
    let xy_ge: Vec<BigInt> = ctx.x_ge.iter().zip(&ctx.y_ge).map(|(a, b)| a * b).collect();
    let s = c.transpose().inverse()?.try_mul(&diag_rat(&xy_ge))?.try_mul(&c_inv)?;
    let s_inv = s.inverse()?;
    let v = s_inv.try_mul(&u.transpose())?.try_mul(&s)?;
    let b = diag_rat(&ctx.b);
    let y = n.try_mul(&b)?.try_mul(&n.inverse()?)?;
    let y_dash = n.try_mul(&b)?.try_mul(&inv_diag(&ctx.z))?.try_mul(&n.transpose())?;
    let x_lt = diag_rat(&ctx.x_lt);
    let y_ddash = x_lt
        .try_mul(&u)?
        .try_mul(&diag_rat(&ctx.b_lt))?
        .try_mul(&inv_diag(&ctx.x_lt))?
        .try_mul(&inv_diag(&ctx.y_lt))?
        .try_mul(&v)?
        .try_mul(&x_lt)?;
    Ok(Chain { n, c, a, u, s, v, y, y_dash, y_ddash })
}

/// Exact identities of the chain and of the diagonal matrices.
pub fn check_chain(ctx: &ReductionContext) -> VerificationReport {
    VerificationReport::run("reduction-chain", ctx.params(), || {
        let ch = chain(ctx)?;
        let mut c = Conditions::new(&[
            "diagonal factorisations",
            "block-scalars commute with C",
            "N = AC",
            "A = x<r U",
            "S p-unimodular",
            "Y' S = Y''",
        ]);
        for i in 0..ctx.len() {
            let ok = ctx.x[i] == &ctx.x_lt[i] * &ctx.x_ge[i]
                && ctx.y[i] == &ctx.y_lt[i] * &ctx.y_ge[i] * &ctx.y_tilde[i]
                && ctx.z[i] == &ctx.x[i] * &ctx.y[i]
                && ctx.b_lt[i] == &ctx.b[i] / &ctx.y_tilde[i]
                && (&ctx.b[i] % &ctx.y_tilde[i]).is_zero();
            c.check(0, ok, || ctx.index[i].to_string());
        }
        for d in [&ctx.b_lt, &ctx.x_lt, &ctx.y_lt] {
            let dm = diag_rat(d);
            c.check(1, dm.try_mul(&ch.c)? == ch.c.try_mul(&dm)?, || "C".into());
        }
        c.check(2, ch.a.try_mul(&ch.c)? == ch.n, || "N".into());
        c.check(3, diag_rat(&ctx.x_lt).try_mul(&ch.u)? == ch.a, || "A".into());
        c.check(4, p_local_unimodular(&ch.s, ctx.p), || "S".into());
        c.check(5, ch.y_dash.try_mul(&ch.s)? == ch.y_ddash, || "Y''".into());
        Ok(c.into_lists())
    })
}

/// `U` is p-integral, equals `δ` within blocks and has
/// `v_p(U_{λμ}) > k_λ - k_μ` across blocks.
pub fn check_lemma_u(ctx: &ReductionContext) -> VerificationReport {
    VerificationReport::run("u-valuations", ctx.params(), || {
        let u = chain(ctx)?.u;
        let mut c = Conditions::new(&["(i)", "(ii)", "(iii)"]);
        for i in 0..ctx.len() {
            for j in 0..ctx.len() {
                let x = &u[(i, j)];
                let at = || ctx.label(i, j);
                c.check(0, v_p_nonzero(x.denom(), ctx.p) == 0, at);
                if ctx.same_block(i, j) {
                    let delta = if i == j { Rat::one() } else { Rat::zero() };
                    c.check(1, *x == delta, at);
                } else if let Some(v) = v_p_rational(x, ctx.p) {
                    c.check(2, v > ctx.k[i] - ctx.k[j], at);
                }
            }
        }
        Ok(c.into_lists())
    })
}

/// Conditions (i)-(v) under which `sPtQu` has the same p-parts of invariant
/// factors as `stu`, for
/// `s = x^{<r}`, `P = U`, `t = b^{<r}(x^{<r})⁻¹(y^{<r})⁻¹`, `Q = V`,
/// `u = x^{<r}`, `α = k/2`, `β = -k/2`, all compared after doubling.
pub fn check_invfac_hypotheses(ctx: &ReductionContext) -> VerificationReport {
    VerificationReport::run("invfac-hypotheses", ctx.params(), || {
        let ch = chain(ctx)?;
        let p = ctx.p;
        let mut c = Conditions::new(&["(i)", "(ii)", "(iii)", "(iv)", "(v)", "rho = v(s) + v(t) + v(u)"]);
        let vs: Vec<i64> = ctx.x_lt.iter().map(|x| v_p_nonzero(x, p) as i64).collect();
        let rho: Vec<i64> = ctx.rho.iter().map(|&x| x as i64).collect();
        for i in 0..ctx.len() {
            let t = Rat::new(ctx.b_lt[i].clone(), &ctx.x_lt[i] * &ctx.y_lt[i]);
            let vt = v_p_rational(&t, p);
            c.check(0, vt == Some(ctx.k[i]), || ctx.index[i].to_string());
            c.check(5, vt.map(|v| 2 * vs[i] + v) == Some(rho[i]), || ctx.index[i].to_string());
        }
        for i in 0..ctx.len() {
            for j in 0..ctx.len() {
                let at = || ctx.label(i, j);
                let delta = if i == j { Rat::one() } else { Rat::zero() };
                let dk = ctx.k[i] - ctx.k[j];
                if let Some(v) = v_p_rational(&(&ch.u[(i, j)] - &delta), p) {
                    c.check(1, 2 * v > dk, at);
                }
                if let Some(v) = v_p_rational(&(&ch.v[(i, j)] - &delta), p) {
                    c.check(2, 2 * v > -dk, at);
                }
                if rho[i] >= rho[j] {
                    // s = u = x^{<r}
                    c.check(3, dk >= 2 * (vs[j] - vs[i]), at);
                    c.check(4, dk >= 2 * (vs[j] - vs[i]), at);
                }
            }
        }
        Ok(c.into_lists())
    })
}

/// The four `Z_(p)` row-equivalence statements relating `M`, `M̃`, `L`, `M̄`
/// and `N`.
pub fn verify_row_equivalences(ctx: &ReductionContext) -> VerificationReport {
    VerificationReport::run("row-equivalences", ctx.params(), || {
        let (p, w) = (ctx.p, ctx.w);
        let m = complete_table(w).to_rational();
        let n = n_matrix(w, p).to_rational();
        let mut c = Conditions::new(&["M ~ M-tilde", "M-bar ~ N", "M ~ L", "N ~ (N^T)^-1 z"]);
        c.check(0, p_row_equivalent(&m, &truncated_m(w, p).to_rational(), p)?, || "M-tilde".into());

        let all = enumerate_partitions(w);
        let pow_idx: Vec<usize> = ctx.index.iter().map(|l| position(&all, l)).collect();
        let rows: Vec<usize> = (0..all.len()).collect();
        let m_bar = m.submatrix(&rows, &pow_idx);
        let wmat = m_bar.try_mul(&n.inverse()?)?;
        c.check(1, is_p_integral(&wmat, p) && m_bar.rank() == ctx.len(), || "W = M-bar N^-1".into());

        c.check(2, p_row_equivalent(&m, &tensor_l(w, p).to_rational(), p)?, || "L".into());
        let nz = n.transpose().inverse()?.try_mul(&diag_rat(&ctx.z))?;
        c.check(3, p_row_equivalent(&n, &nz, p)?, || "N".into());
        Ok(c.into_lists())
    })
}

/// `Y` is p-integral (its denominators may contain other primes) and the
/// p-parts of its invariant factors are `{c_{p,r}(λ) : λ ∈ Pow(w)}`.
pub fn verify_thm_pow(p: u64, r: u32, w: usize) -> VerificationReport {
    let prm = params([("p", p.to_string()), ("r", r.to_string()), ("w", w.to_string())]);
    VerificationReport::run("pow-y", prm, || {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let y = y_matrix(w, p, r)?;
        let expected = power_partitions(w, p as usize).iter().map(|l| c_pr(l, p, r)).collect();
        Ok((multiset(expected), multiset(p_part_of_snf_rational(&y, p)?)))
    })
}

/// `⊗_j Y^{(m_j(ν))}`, factors in increasing `j`.
fn y_tensor(nu: &Partition, p: u64, r: u32) -> Result<RatMatrix> {
    let mut out: RatMatrix = Matrix::identity(1);
    for (_, m) in nu.multiplicities().into_iter().rev() {
        out = out.kronecker(&y_matrix(m, p, r)?);
    }
    Ok(out)
}

/// Assembles `X' = M a M⁻¹` from the p-power pieces: its p-parts, those of
/// the tensor blocks `⊗_j Y^{(m_j(ν))}`, those of `X_{p^r,w}` and
/// `{c_{p,r}(λ) : λ ⊢ w}` all agree, and each block of `L a L⁻¹` is the
/// corresponding tensor product.
pub fn verify_glue(p: u64, r: u32, w: usize) -> VerificationReport {
    let prm = params([("p", p.to_string()), ("r", r.to_string()), ("w", w.to_string())]);
    VerificationReport::run("reduction-glue", prm, || {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let pu = p as usize;
        let all = enumerate_partitions(w);
        let a: Vec<Rat> = all.iter().map(|l| rat(&pow(p, r as usize * l.len()))).collect();
        let expected = multiset(all.iter().map(|l| c_pr(l, p, r)).collect());
        let mut c = Conditions::new(&["X' p-parts", "tensor Y p-parts", "X p-parts", "L a L^-1 blocks"]);

        let m = complete_table(w).to_rational();
        let x_dash = m.scale_cols(&a).try_mul(&m.inverse()?)?.to_integer()?;
        c.check(0, multiset(p_part_of_snf(&x_dash, p)) == expected, || "X'".into());

        let l = tensor_l(w, p).to_rational();
        let x_ddash = l.scale_cols(&a).try_mul(&l.inverse()?)?;
        let mut union = Vec::new();
        for nu in class_regular_partitions(w, pu) {
            let yt = y_tensor(&nu, p, r)?;
            union.extend(p_part_of_snf_rational(&yt, p)?);
            // rows of the ν-block in the order of ι(λ), first j slowest
            let mut members: Vec<(Vec<usize>, usize)> = Vec::new();
            for (i, lambda) in all.iter().enumerate() {
                if block_class(lambda, pu) != nu {
                    continue;
                }
                let key = iota_split(lambda, pu).into_values().map(|lj| position(&power_partitions(lj.size(), pu), &lj))
                    .collect();
                members.push((key, i));
            }
            members.sort();
            let idx: Vec<usize> = members.into_iter().map(|(_, i)| i).collect();
            c.check(3, x_ddash.submatrix(&idx, &idx) == yt, || nu.to_string());
        }
        c.check(1, multiset(union) == expected, || "union".into());
        let x = x_matrix(p.pow(r), w)?;
        c.check(2, multiset(p_part_of_snf(&x.matrix, p)) == expected, || "X".into());
        Ok(c.into_lists())
    })
}

/// Every reduction check at one `(p, r, w)`.
pub fn reduction_suite(p: u64, r: u32, w: usize) -> Result<Vec<VerificationReport>> {
    let ctx = ReductionContext::new(p, r, w)?;
    Ok(vec![
        verify_thm_pow(p, r, w),
        check_chain(&ctx),
        check_lemma_u(&ctx),
        check_invfac_hypotheses(&ctx),
        verify_row_equivalences(&ctx),
        verify_glue(p, r, w),
    ])
}
