//! Class functions of symmetric groups in coordinates: character tables,
//! transition matrices between the bases `p`, `p̃`, `s`, `h` and the
//! standard scalar product.
//!
//! Rows and columns are indexed by [`enumerate_partitions`] order. The
//! convention is `u_λ = Σ_μ M(u, v)_{λμ} v_μ`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::cache::Memo;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, z_value, Partition};
use crate::{IntMatrix, Matrix, Rat, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Power sums `p_λ`.
    P,
    /// Normalised power sums `p̃_λ = p_λ / z_λ`.
    PTilde,
    /// Irreducible characters `s_λ`.
    S,
    /// Complete homogeneous functions `h_λ`.
    H,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::P, Basis::PTilde, Basis::S, Basis::H];

    /// The basis `v` with `⟨u_λ, v_μ⟩ = δ_{λμ}`.
    pub fn dual(self) -> Option<Basis> {
        match self {
            Basis::P => Some(Basis::PTilde),
            Basis::PTilde => Some(Basis::P),
            Basis::S => Some(Basis::S),
            Basis::H => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::P => "p",
            Basis::PTilde => "pt",
            Basis::S => "s",
            Basis::H => "h",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(Basis::P),
            "pt" | "ptilde" | "p~" | "p̃" => Ok(Basis::PTilde),
            "s" => Ok(Basis::S),
            "h" => Ok(Basis::H),
            other => Err(Error::UnknownBasis(other.to_string())),
        }
    }
}

/// Irreducible characters of `S_w`: entry `(λ, μ)` is `χ^λ` at cycle type `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub w: usize,
    pub index: Vec<Partition>,
    pub values: IntMatrix,
}

impl CharTable {
    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.index.binary_search(lambda).ok()
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        Some(&self.values[(self.position(lambda)?, self.position(mu)?)])
    }
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule on beta-sets: removing a rim
/// hook of length `k` moves a bead from `b` to the free position `b - k`,
/// with sign `(-1)^{beads strictly between}`.
fn mn_value(
    lambda: &Partition,
    mu: &[usize],
    memo: &mut HashMap<(Partition, Vec<usize>), BigInt>,
) -> BigInt {
    let Some((&k, rest)) = mu.split_first() else {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let key = (lambda.clone(), mu.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let beads = lambda.beta_set(lambda.len());
    let mut total = BigInt::zero();
    for &b in &beads {
        if b < k || beads.contains(&(b - k)) {
            continue;
        }
        let between = beads.iter().filter(|&&c| b - k < c && c < b).count();
        let moved: Vec<usize> = beads.iter().map(|&c| if c == b { b - k } else { c }).collect();
        let v = mn_value(&Partition::from_beta_set(&moved), rest, memo);
        if between % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

fn build_character_table(w: usize) -> CharTable {
    let index = enumerate_partitions(w);
    let mut memo = HashMap::new();
    let values =
        Matrix::from_fn(index.len(), index.len(), |i, j| mn_value(&index[i], index[j].parts(), &mut memo));
    CharTable { w, index, values }
}

static CHARACTER_TABLES: LazyLock<Memo<usize, CharTable>> = LazyLock::new(Memo::new);

/// Character table of `S_w`, built once per `w` and shared.
pub fn character_table(w: usize) -> Arc<CharTable> {
    CHARACTER_TABLES.get_or_init(&w, || build_character_table(w))
}

/// Number of maps `f` from the parts of `μ` to the parts of `λ` with
/// `Σ_{j ∈ f⁻¹(i)} μ_j = λ_i` for every `i`.
pub fn count_part_maps(lambda: &Partition, mu: &Partition) -> BigUint {
    if lambda.size() != mu.size() {
        return BigUint::zero();
    }
    fn go(mu: &[usize], caps: Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), BigUint>) -> BigUint {
        let Some((&m, rest)) = mu.split_first() else {
            return BigUint::one();
        };
        let key = (mu.len(), caps.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..caps.len() {
            if caps[i] >= m {
                let mut next = caps.clone();
                next[i] -= m;
                // completions depend only on the multiset of capacities
                next.sort_unstable();
                total += go(rest, next, memo);
            }
        }
        memo.insert(key, total.clone());
        total
    }
    let mut caps = lambda.parts().to_vec();
    caps.sort_unstable();
    go(mu.parts(), caps, &mut HashMap::new())
}

static COMPLETE_TABLES: LazyLock<Memo<usize, IntMatrix>> = LazyLock::new(Memo::new);

/// `M(h, p̃; w)`: the value of `h_λ` at cycle type `μ`.
pub fn complete_table(w: usize) -> Arc<IntMatrix> {
    COMPLETE_TABLES.get_or_init(&w, || {
        let index = enumerate_partitions(w);
        Matrix::from_fn(index.len(), index.len(), |i, j| {
            BigInt::from(count_part_maps(&index[i], &index[j]))
        })
    })
}

/// `M(u, p̃; w)`, i.e. the values of `u_λ` at the classes.
fn to_ptilde(u: Basis, w: usize) -> RatMatrix {
    let index = enumerate_partitions(w);
    match u {
        Basis::PTilde => Matrix::identity(index.len()),
        Basis::P => {
            let z: Vec<Rat> = index.iter().map(|l| Rat::from_integer(z_value(l).into())).collect();
            Matrix::diag(&z)
        }
        Basis::S => character_table(w).values.to_rational(),
        Basis::H => complete_table(w).to_rational(),
    }
}

static TRANSITIONS: LazyLock<Memo<(Basis, Basis, usize), RatMatrix>> = LazyLock::new(Memo::new);

/// `M(u, v; w) = M(u, p̃; w) · M(v, p̃; w)⁻¹`.
pub fn transition(u: Basis, v: Basis, w: usize) -> Arc<RatMatrix> {
    TRANSITIONS.get_or_init(&(u, v, w), || {
        if u == v {
            return Matrix::identity(enumerate_partitions(w).len());
        }
        let right = match v {
            Basis::PTilde => return to_ptilde(u, w),
            Basis::P => {
                let z: Vec<Rat> = enumerate_partitions(w)
                    .iter()
                    .map(|l| Rat::new(BigInt::one(), z_value(l).into()))
                    .collect();
                Matrix::diag(&z)
            }
            Basis::S => {
                // χ · diag(1/z) · χᵀ = I
                let chi = character_table(w);
                let inv_z: Vec<Rat> =
                    chi.index.iter().map(|l| Rat::new(BigInt::one(), z_value(l).into())).collect();
                chi.values.to_rational().transpose().scale_rows(&inv_z)
            }
            Basis::H => to_ptilde(Basis::H, w).inverse().expect("M(h, p̃) is triangular with nonzero diagonal"),
        };
        to_ptilde(u, w).try_mul(&right).expect("square matrices of equal size")
    })
}

/// `M(s, p; w)⁻¹`, whose entry `(ν, μ)` is `χ^μ(ν)`.
pub fn schur_power_inverse(w: usize) -> IntMatrix {
    character_table(w).values.transpose()
}

/// A class function of degree `w` in coordinates with respect to a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub basis: Basis,
    pub w: usize,
    pub coeffs: Vec<Rat>,
}

impl ClassFunction {
    pub fn new(basis: Basis, w: usize, coeffs: Vec<Rat>) -> Result<Self> {
        let n = enumerate_partitions(w).len();
        if coeffs.len() != n {
            return Err(Error::ShapeMismatch(format!("{} coefficients for {n} partitions", coeffs.len())));
        }
        Ok(ClassFunction { basis, w, coeffs })
    }

    /// The basis element `u_λ`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let index = enumerate_partitions(lambda.size());
        let coeffs =
            index.iter().map(|m| if m == lambda { Rat::one() } else { Rat::zero() }).collect();
        ClassFunction { basis, w: lambda.size(), coeffs }
    }

    /// Values at the cycle types, in canonical order.
    pub fn values(&self) -> Vec<Rat> {
        let m = transition(self.basis, Basis::PTilde, self.w);
        (0..m.ncols())
            .map(|j| self.coeffs.iter().enumerate().fold(Rat::zero(), |acc, (i, c)| acc + c * &m[(i, j)]))
            .collect()
    }

    pub fn in_basis(&self, target: Basis) -> Self {
        let m = transition(self.basis, target, self.w);
        let coeffs = (0..m.ncols())
            .map(|j| self.coeffs.iter().enumerate().fold(Rat::zero(), |acc, (i, c)| acc + c * &m[(i, j)]))
            .collect();
        ClassFunction { basis: target, w: self.w, coeffs }
    }
}

/// `⟨f, g⟩ = Σ_μ f(μ) g(μ) / z_μ`.
pub fn scalar_product(f: &ClassFunction, g: &ClassFunction) -> Result<Rat> {
    if f.w != g.w {
        return Err(Error::ShapeMismatch(format!("degrees {} and {}", f.w, g.w)));
    }
    let index = enumerate_partitions(f.w);
    let (fv, gv) = (f.values(), g.values());
    Ok(index
        .iter()
        .zip(fv.iter().zip(&gv))
        .fold(Rat::zero(), |acc, (mu, (a, b))| acc + a * b / Rat::from_integer(z_value(mu).into())))
}
