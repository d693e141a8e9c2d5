//! Localisation at a prime `p`: integrality, unimodularity and the p-parts of
//! invariant factors.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{snf, Matrix};
use crate::arith::{v_p_nonzero, v_p_rational};
use crate::error::{Error, Result};
use crate::{IntMatrix, Rat, RatMatrix};

pub fn is_p_integral_scalar(x: &Rat, p: u64) -> bool {
    v_p_nonzero(x.denom(), p) == 0
}

/// Every entry has denominator prime to `p`.
pub fn is_p_integral(a: &RatMatrix, p: u64) -> bool {
    a.entries().iter().all(|x| is_p_integral_scalar(x, p))
}

/// Square, p-integral, with determinant a p-adic unit.
pub fn p_local_unimodular(a: &RatMatrix, p: u64) -> bool {
    if !a.is_square() || !is_p_integral(a, p) {
        return false;
    }
    match a.det() {
        Ok(d) => v_p_rational(&d, p) == Some(0),
        Err(_) => false,
    }
}

/// `A = U·B` for some `U ∈ GL_n(Z_(p))`, tested as `A·B⁻¹` being p-locally
/// unimodular.
pub fn p_row_equivalent(a: &RatMatrix, b: &RatMatrix, p: u64) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{:?} vs {:?}",
            a.shape(),
            b.shape()
        )));
    }
    let binv = b.inverse()?;
    Ok(p_local_unimodular(&a.try_mul(&binv)?, p))
}

/// Exponents `v_p(d_i)` of the nonzero invariant factors, ascending.
pub fn p_part_of_snf(a: &IntMatrix, p: u64) -> Vec<u64> {
    snf(a).nonzero().iter().map(|d| v_p_nonzero(d, p)).collect()
}

/// Exponents of the p-parts of the invariant factors of a nonsingular
/// rational matrix after clearing denominators that are prime to `p`.
pub fn p_part_of_snf_rational(a: &RatMatrix, p: u64) -> Result<Vec<u64>> {
    if !is_p_integral(a, p) {
        return Err(Error::NonIntegral);
    }
    let mut lcm = BigInt::from(1);
    for x in a.entries() {
        lcm = num_integer::Integer::lcm(&lcm, x.denom());
    }
    let scaled = a.map(|x| (x * Rat::from_integer(lcm.clone())).to_integer());
    debug_assert!(!lcm.is_zero());
    Ok(p_part_of_snf(&scaled, p))
}

/// p-adic valuation of every entry; `None` marks zero.
pub fn valuation_matrix(a: &RatMatrix, p: u64) -> Matrix<Option<i64>> {
    a.map(|x| v_p_rational(x, p))
}
