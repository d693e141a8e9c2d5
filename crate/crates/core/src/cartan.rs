//! Generalised Cartan matrices of symmetric groups, built from the lattice
//! of virtual characters vanishing on ℓ-singular classes.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};

use crate::arith::{r_ell, theta};
use crate::error::{Error, Result};
use crate::linalg::{diagonal_invariant_factors, integer_kernel, snf};
use crate::partitions::{count_tuples, ell_core, enumerate_partitions, is_ell_core, is_ell_singular, Partition};
use crate::report::{multiset, params, VerificationReport};
use crate::symfun::character_table;
use crate::wreath::{cartan_a_matrix, wreath_ss_int};
use crate::IntMatrix;

/// A combinatorial ℓ-block of `S_n`: core `ρ` and weight `w` with
/// `n = |ρ| + ℓw`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockId {
    pub ell: u64,
    pub core: Partition,
    pub w: usize,
    pub n: usize,
}

impl BlockId {
    pub fn new(ell: u64, core: Partition, n: usize) -> Result<Self> {
        check_ell(ell)?;
        let l = ell as usize;
        if core.size() > n || !(n - core.size()).is_multiple_of(l) || !is_ell_core(&core, l) {
            return Err(Error::InvalidCore { core: core.to_string(), ell, n });
        }
        let w = (n - core.size()) / l;
        Ok(BlockId { ell, core, w, n })
    }
}

fn check_ell(ell: u64) -> Result<()> {
    if ell < 2 {
        return Err(Error::EllTooSmall(ell));
    }
    Ok(())
}

/// `Par(n)` grouped by ℓ-core; each group keeps the canonical order.
pub fn block_partition_of_irr(n: usize, ell: u64) -> Result<BTreeMap<Partition, Vec<Partition>>> {
    check_ell(ell)?;
    let mut blocks: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lambda in enumerate_partitions(n) {
        blocks.entry(ell_core(&lambda, ell as usize)).or_default().push(lambda);
    }
    Ok(blocks)
}

/// All blocks of `S_n`, ordered by core.
pub fn blocks(n: usize, ell: u64) -> Result<Vec<BlockId>> {
    block_partition_of_irr(n, ell)?.into_keys().map(|core| BlockId::new(ell, core, n)).collect()
}

/// Rows of `basis` are a Z-basis of the projective lattice, written in
/// coordinates over the irreducible characters `irr`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveLattice {
    pub ell: u64,
    pub n: usize,
    pub block: Option<BlockId>,
    pub irr: Vec<Partition>,
    pub basis: IntMatrix,
}

impl ProjectiveLattice {
    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }
}

/// Left integer kernel of the character values on ℓ-singular classes,
/// restricted to the block of `core` when given.
pub fn projective_lattice(n: usize, ell: u64, core: Option<&Partition>) -> Result<ProjectiveLattice> {
    check_ell(ell)?;
    let chi = character_table(n);
    let (block, irr) = match core {
        Some(rho) => {
            let id = BlockId::new(ell, rho.clone(), n)?;
            let members: Vec<Partition> =
                chi.index.iter().filter(|l| ell_core(l, ell as usize) == *rho).cloned().collect();
            (Some(id), members)
        }
        None => (None, chi.index.clone()),
    };
    let rows: Vec<usize> = irr.iter().map(|l| chi.position(l).expect("partition of n")).collect();
    let cols: Vec<usize> = (0..chi.index.len()).filter(|&j| is_ell_singular(&chi.index[j], ell as usize)).collect();
    let basis = integer_kernel(&chi.values.submatrix(&rows, &cols));
    Ok(ProjectiveLattice { ell, n, block, irr, basis })
}

/// Gram matrix `B·Bᵀ`; the irreducible characters are orthonormal.
pub fn cartan_matrix(lattice: &ProjectiveLattice) -> IntMatrix {
    &lattice.basis * &lattice.basis.transpose()
}

/// `ϑ_λ(ℓ)` with multiplicity `k(ℓ-2, w-|λ|)` over `|λ| ≤ w`, sorted.
pub fn expected_block_diagonal(ell: u64, w: usize) -> Result<Vec<BigUint>> {
    check_ell(ell)?;
    let mut out = Vec::new();
    for s in 0..=w {
        let mult = count_tuples(ell as usize - 2, w - s);
        let mult: usize = mult.try_into().map_err(|_| Error::Internal("multiplicity too large".into()))?;
        for lambda in enumerate_partitions(s) {
            out.extend(std::iter::repeat_n(theta(&lambda, ell), mult));
        }
    }
    out.sort();
    Ok(out)
}

/// `r_ℓ(λ)` over partitions of `n` with no part divisible by `ℓ`, sorted.
pub fn expected_global_diagonal(ell: u64, n: usize) -> Result<Vec<BigUint>> {
    if ell == 0 {
        return Err(Error::EllTooSmall(0));
    }
    let mut out: Vec<BigUint> = enumerate_partitions(n)
        .iter()
        .filter(|l| !is_ell_singular(l, ell as usize))
        .map(|l| r_ell(l, ell))
        .collect();
    out.sort();
    Ok(out)
}

fn invariant_factors_of(values: Vec<BigUint>) -> Vec<BigInt> {
    diagonal_invariant_factors(&values.into_iter().map(BigInt::from).collect::<Vec<_>>())
}

/// Cartan matrix of one block against the block diagonal. Both sides are
/// compared as invariant factors, since the diagonal need not be a
/// divisibility chain when `ℓ` is composite.
pub fn verify_block(ell: u64, n: usize, core: &Partition) -> VerificationReport {
    let prm = params([("ell", ell.to_string()), ("n", n.to_string()), ("core", core.to_string())]);
    VerificationReport::run("cartan-block", prm, || {
        let lattice = projective_lattice(n, ell, Some(core))?;
        let w = lattice.block.as_ref().map_or(0, |b| b.w);
        let diag = expected_block_diagonal(ell, w)?;
        let size = count_tuples(ell as usize - 1, w);
        if BigUint::from(diag.len()) != size {
            return Err(Error::Internal(format!("diagonal has {} entries, k(ℓ-1, w) = {size}", diag.len())));
        }
        let actual = snf(&cartan_matrix(&lattice)).factors;
        Ok((multiset(invariant_factors_of(diag)), multiset(actual)))
    })
}

/// Cartan matrix of the whole group against `r_ℓ(λ)`.
pub fn verify_global(ell: u64, n: usize) -> VerificationReport {
    let prm = params([("ell", ell.to_string()), ("n", n.to_string())]);
    VerificationReport::run("cartan-global", prm, || {
        let lattice = projective_lattice(n, ell, None)?;
        let expected = invariant_factors_of(expected_global_diagonal(ell, n)?);
        let actual = snf(&cartan_matrix(&lattice)).factors;
        Ok((multiset(expected), multiset(actual)))
    })
}

/// Block Cartan matrix against the wreath power of the type-A Gram matrix.
pub fn verify_block_wreath(ell: u64, n: usize, core: &Partition) -> VerificationReport {
    let prm = params([("ell", ell.to_string()), ("n", n.to_string()), ("core", core.to_string())]);
    VerificationReport::run("cartan-wreath", prm, || {
        let lattice = projective_lattice(n, ell, Some(core))?;
        let w = lattice.block.as_ref().map_or(0, |b| b.w);
        let wr = wreath_ss_int(&cartan_a_matrix(ell)?, w)?;
        Ok((multiset(snf(&wr).factors), multiset(snf(&cartan_matrix(&lattice)).factors)))
    })
}

/// The global check for `n`, followed by per-block checks when `blockwise`.
pub fn cartan_suite(ell: u64, n: usize, blockwise: bool) -> Result<Vec<VerificationReport>> {
    let mut out = vec![verify_global(ell, n)];
    if blockwise {
        for block in blocks(n, ell)? {
            out.push(verify_block(ell, n, &block.core));
            out.push(verify_block_wreath(ell, n, &block.core));
        }
    }
    Ok(out)
}
