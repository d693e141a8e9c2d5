//! Integer partitions and the maps between partition sets used everywhere
//! else in the crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Partitions are ordered first by size and then lexicographically on their
/// parts. Restricted to partitions of a fixed size this is the ascending
/// (zero-padded) lexicographic order, which is the index order of every
/// `Par(w)`-indexed matrix in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the given parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(k^m)`, the partition with `m` parts equal to `k`.
    pub fn rectangle(k: usize, m: usize) -> Self {
        if k == 0 {
            return Partition::empty();
        }
        Partition(vec![k; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `l(λ)`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `m_j(λ)`, the number of parts equal to `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.0.iter().filter(|&&x| x == j).count()
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &x in &self.0 {
            match out.last_mut() {
                Some((part, m)) if *part == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&x| x >= j).count()).collect())
    }

    /// First-column hook lengths with `k` beads: `λ_i + k - i` for
    /// `i = 1..=k`, padding with zero parts. Strictly decreasing.
    pub fn beta_set(&self, k: usize) -> Vec<usize> {
        debug_assert!(k >= self.len());
        (0..k).map(|i| self.0.get(i).copied().unwrap_or(0) + k - 1 - i).collect()
    }

    /// Inverse of [`Partition::beta_set`]; accepts the beads in any order.
    pub fn from_beta_set(beads: &[usize]) -> Partition {
        let mut b = beads.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        let k = b.len();
        Partition::from_unsorted(b.iter().enumerate().map(|(i, &x)| x - (k - 1 - i)).collect())
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the bracketed form `"[4,2,1]"`; `"[]"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPartition(format!("{s:?} is not of the form [a,b,...]")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A map from an ordered finite index set `[0, t)` to partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionMap(pub Vec<Partition>);

impl PartitionMap {
    /// Total size `Σ_t |λ(t)|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn get(&self, t: usize) -> &Partition {
        &self.0[t]
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }
}

impl fmt::Display for PartitionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `w` in ascending lexicographic order.
pub fn enumerate_partitions(w: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            cur.push(part);
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, &mut Vec::new(), &mut out);
    out.reverse();
    out
}

/// `PMap_w([0, t))` in the order that compares components left to right,
/// each by the partition order.
pub fn enumerate_partition_maps(t: usize, w: usize) -> Vec<PartitionMap> {
    fn rec(t: usize, remaining: usize, cur: &mut Vec<Partition>, out: &mut Vec<PartitionMap>) {
        if cur.len() + 1 == t {
            for lambda in enumerate_partitions(remaining) {
                cur.push(lambda);
                out.push(PartitionMap(cur.clone()));
                cur.pop();
            }
            return;
        }
        for s in 0..=remaining {
            for lambda in enumerate_partitions(s) {
                cur.push(lambda);
                rec(t, remaining - s, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if t == 0 {
        if w == 0 {
            out.push(PartitionMap(Vec::new()));
        }
        return out;
    }
    rec(t, w, &mut Vec::new(), &mut out);
    out
}

/// `m_j(λ)`.
pub fn multiplicity(lambda: &Partition, j: usize) -> usize {
    lambda.multiplicity(j)
}

/// `z_λ = ∏ i^{m_i} m_i!`, the order of the centraliser of a permutation of
/// cycle type `λ`.
pub fn z_value(lambda: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (part, m) in lambda.multiplicities() {
        for k in 1..=m {
            z *= BigUint::from(part) * BigUint::from(k);
        }
    }
    z
}

/// Multiset union of the parts of all given partitions.
pub fn sum_partitions<'a, I>(lambdas: I) -> Partition
where
    I: IntoIterator<Item = &'a Partition>,
{
    Partition::from_unsorted(lambdas.into_iter().flat_map(|l| l.parts().iter().copied()).collect())
}

/// The ℓ-core of `λ`, obtained by sliding every bead of the ℓ-abacus as far
/// up its runner as it goes.
pub fn ell_core(lambda: &Partition, ell: usize) -> Partition {
    assert!(ell >= 2, "ell-core needs ell >= 2");
    // A multiple of ell beads keeps runner labels aligned with residues.
    let k = lambda.len().div_ceil(ell) * ell;
    let mut counts = vec![0usize; ell];
    for b in lambda.beta_set(k) {
        counts[b % ell] += 1;
    }
    let beads: Vec<usize> = counts
        .iter()
        .enumerate()
        .flat_map(|(runner, &c)| (0..c).map(move |i| runner + i * ell))
        .collect();
    Partition::from_beta_set(&beads)
}

pub fn is_ell_core(lambda: &Partition, ell: usize) -> bool {
    ell_core(lambda, ell) == *lambda
}

/// True iff some part of `λ` is divisible by `ℓ`.
pub fn is_ell_singular(lambda: &Partition, ell: usize) -> bool {
    lambda.parts().iter().any(|&x| x % ell == 0)
}

/// `k(b, a)`: the number of `b`-tuples of partitions of total size `a`,
/// read off the power series `∏_{i≥1} (1 - x^i)^{-b}`.
pub fn count_tuples(b: usize, a: usize) -> BigUint {
    let mut coeffs = vec![BigUint::from(0u32); a + 1];
    coeffs[0] = BigUint::one();
    for i in 1..=a {
        for _ in 0..b {
            for k in i..=a {
                let prev = coeffs[k - i].clone();
                coeffs[k] += prev;
            }
        }
    }
    coeffs.swap_remove(a)
}

/// True iff `n = p^k` for some `k ≥ 0`.
pub fn is_power_of(mut n: usize, p: usize) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// `log_p n` for a power `n` of `p`.
fn power_exponent(mut n: usize, p: usize) -> usize {
    let mut e = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0);
        n /= p;
        e += 1;
    }
    e
}

pub fn is_p_power_partition(lambda: &Partition, p: usize) -> bool {
    lambda.parts().iter().all(|&x| is_power_of(x, p))
}

/// `Pow(w)`: partitions of `w` all of whose parts are powers of `p`.
pub fn power_partitions(w: usize, p: usize) -> Vec<Partition> {
    enumerate_partitions(w)
        .into_iter()
        .filter(|l| is_p_power_partition(l, p))
        .collect()
}

/// `Par'(w)`: partitions of `w` with every part prime to `p`.
pub fn class_regular_partitions(w: usize, p: usize) -> Vec<Partition> {
    enumerate_partitions(w)
        .into_iter()
        .filter(|l| l.parts().iter().all(|&x| x % p != 0))
        .collect()
}

/// Splits a part `n` as `(j, k)` with `n = j p^k` and `p ∤ j`.
fn split_p_part(mut n: usize, p: usize) -> (usize, usize) {
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    (n, k)
}

/// The p-class-regular `ν` with `λ ∈ Par(w, ν)`: each part `j p^n` of `λ`
/// with `p ∤ j` contributes `p^n` parts equal to `j`.
pub fn block_class(lambda: &Partition, p: usize) -> Partition {
    let mut parts = Vec::with_capacity(lambda.size());
    for &x in lambda.parts() {
        let (j, k) = split_p_part(x, p);
        parts.extend(std::iter::repeat_n(j, p.pow(k as u32)));
    }
    Partition::from_unsorted(parts)
}

/// The splitting `λ ↦ (λ^j)_j` over `j` prime to `p`, with
/// `m_{p^n}(λ^j) = m_{j p^n}(λ)`. Only nonempty components are returned.
pub fn iota_split(lambda: &Partition, p: usize) -> BTreeMap<usize, Partition> {
    let mut parts: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &x in lambda.parts() {
        let (j, k) = split_p_part(x, p);
        parts.entry(j).or_default().push(p.pow(k as u32));
    }
    parts
        .into_iter()
        .map(|(j, v)| (j, Partition::from_unsorted(v)))
        .collect()
}

/// Inverse of [`iota_split`]: multiplies every part of `λ^j` by `j`.
pub fn iota_join(components: &BTreeMap<usize, Partition>) -> Partition {
    Partition::from_unsorted(
        components
            .iter()
            .flat_map(|(&j, l)| l.parts().iter().map(move |&x| x * j))
            .collect(),
    )
}

fn require_p_power(lambda: &Partition, p: usize) -> Result<()> {
    if is_p_power_partition(lambda, p) {
        Ok(())
    } else {
        Err(Error::NotPrimePower { partition: lambda.to_string(), p: p as u64 })
    }
}

/// `n_i(λ) = m_{p^i}(λ)` for a p-power partition, indexed by `i`.
pub fn power_multiplicities(lambda: &Partition, p: usize) -> Result<Vec<usize>> {
    require_p_power(lambda, p)?;
    let mut n = Vec::new();
    for &x in lambda.parts() {
        let i = power_exponent(x, p);
        if n.len() <= i {
            n.resize(i + 1, 0);
        }
        n[i] += 1;
    }
    Ok(n)
}

/// `λ^{<r}`: the parts of `λ` smaller than `p^r`.
pub fn truncate_below_r(lambda: &Partition, p: usize, r: u32) -> Result<Partition> {
    require_p_power(lambda, p)?;
    let bound = p.pow(r);
    Ok(Partition(lambda.parts().iter().copied().filter(|&x| x < bound).collect()))
}

/// `λ^{≥r}`: the parts of `λ` of size at least `p^r`, divided by `p^r`.
pub fn truncate_at_least_r(lambda: &Partition, p: usize, r: u32) -> Result<Partition> {
    require_p_power(lambda, p)?;
    let bound = p.pow(r);
    Ok(Partition(
        lambda.parts().iter().filter(|&&x| x >= bound).map(|&x| x / bound).collect(),
    ))
}

/// `λ̄`: every part of size at least `p^r` split into parts equal to `p^r`.
pub fn bar(lambda: &Partition, p: usize, r: u32) -> Result<Partition> {
    require_p_power(lambda, p)?;
    let bound = p.pow(r);
    let mut parts = Vec::with_capacity(lambda.len());
    for &x in lambda.parts() {
        if x < bound {
            parts.push(x);
        } else {
            parts.extend(std::iter::repeat_n(bound, x / bound));
        }
    }
    Ok(Partition::from_unsorted(parts))
}
