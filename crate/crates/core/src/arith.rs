//! Closed-form invariant-factor formulas: valuations, `c_{p,r}`, `ϑ_λ(ℓ)`,
//! `r_ℓ(λ)` and the exponent triple `(e, f, k)` of a p-power partition.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{power_multiplicities, Partition};

/// A prime power `p^r`, `r ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub p: u64,
    pub r: u32,
}

impl PrimePower {
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimePower { p, r })
    }

    pub fn value(&self) -> BigUint {
        BigUint::from(self.p).pow(self.r)
    }
}

/// `(e_λ, f_λ, k_λ)` with `k = f - e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExponentTriple {
    pub e: u64,
    pub f: u64,
    pub k: i64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<PrimePower> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut r = 0;
            while n.is_multiple_of(d) {
                n /= d;
                r += 1;
            }
            out.push(PrimePower { p: d, r });
        }
        d += 1;
    }
    if n > 1 {
        out.push(PrimePower { p: n, r: 1 });
    }
    out
}

/// `v_p(k)` for a nonzero integer `k`.
pub fn v_p<T: Into<BigInt>>(k: T, p: u64) -> Result<u64> {
    let k: BigInt = k.into();
    if k.is_zero() {
        return Err(Error::ZeroValuation);
    }
    Ok(v_p_nonzero(&k.abs(), p))
}

pub(crate) fn v_p_nonzero(k: &BigInt, p: u64) -> u64 {
    let p = BigInt::from(p);
    let mut k = k.clone();
    let mut e = 0;
    loop {
        let (q, r) = k.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        k = q;
        e += 1;
    }
}

/// `v_p(q)` of a rational; `None` for zero.
pub fn v_p_rational(q: &crate::Rat, p: u64) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    Some(v_p_nonzero(q.numer(), p) as i64 - v_p_nonzero(q.denom(), p) as i64)
}

/// `d_p(k) = v_p(k!) = Σ_{i≥1} ⌊k / p^i⌋`.
pub fn d_p(k: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = k;
    while q > 0 {
        q /= p;
        total += q;
    }
    total
}

fn v_p_small(mut j: u64, p: u64) -> u64 {
    let mut e = 0;
    while j.is_multiple_of(p) {
        j /= p;
        e += 1;
    }
    e
}

/// `c_{p,r}(λ) = Σ_{j : v_p(j) < r} (r - v_p(j)) m_j(λ) + d_p(m_j(λ))`.
pub fn c_pr(lambda: &Partition, p: u64, r: u32) -> u64 {
    lambda
        .multiplicities()
        .into_iter()
        .filter_map(|(j, m)| {
            let v = v_p_small(j as u64, p);
            (v < r as u64).then(|| (r as u64 - v) * m as u64 + d_p(m as u64, p))
        })
        .sum()
}

/// `ϑ_λ(ℓ) = ∏ p_i^{c_{p_i, r_i}(λ)}` over the factorisation `ℓ = ∏ p_i^{r_i}`.
///
/// For `ℓ = 0` the value is `0`, except that `ϑ_∅(0) = 1`, matching
/// `0^{l(∅)} = 1` in the degree-zero matrix `X_{0,0} = (1)`.
pub fn theta(lambda: &Partition, ell: u64) -> BigUint {
    if ell == 0 {
        return if lambda.is_empty() { BigUint::one() } else { BigUint::zero() };
    }
    factorize(ell)
        .into_iter()
        .map(|pp| BigUint::from(pp.p).pow(c_pr(lambda, pp.p, pp.r) as u32))
        .product()
}

/// Largest divisor of `k` supported on the given primes.
fn pi_part(k: &BigUint, primes: &[u64]) -> BigUint {
    let mut out = BigUint::one();
    let mut rest = k.clone();
    for &p in primes {
        let p = BigUint::from(p);
        while !rest.is_zero() && (&rest % &p).is_zero() {
            rest /= &p;
            out *= &p;
        }
    }
    out
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `r_ℓ(λ) = ∏_k (ℓ/(ℓ,k))^{⌊m_k/ℓ⌋} · (⌊m_k/ℓ⌋!)_{π(ℓ,k)}`, where `π(ℓ,k)`
/// is the set of primes dividing `ℓ/(ℓ,k)`.
pub fn r_ell(lambda: &Partition, ell: u64) -> BigUint {
    assert!(ell >= 1, "r_ell needs ell >= 1");
    let mut out = BigUint::one();
    for (k, m) in lambda.multiplicities() {
        let q = m as u64 / ell;
        if q == 0 {
            continue;
        }
        let ratio = ell / ell.gcd(&(k as u64));
        let primes: Vec<u64> = factorize(ratio).into_iter().map(|pp| pp.p).collect();
        out *= BigUint::from(ratio).pow(q as u32) * pi_part(&factorial(q), &primes);
    }
    out
}

/// `e = Σ_{i<r} d_p(n_i)`, `f = Σ_{i<r} (r-i) n_i`, `k = f - e` for a p-power
/// partition with `n_i = m_{p^i}(λ)`.
pub fn exponents(lambda: &Partition, p: u64, r: u32) -> Result<ExponentTriple> {
    let n = power_multiplicities(lambda, p as usize)?;
    let (mut e, mut f) = (0u64, 0u64);
    for (i, &ni) in n.iter().enumerate().take(r as usize) {
        e += d_p(ni as u64, p);
        f += (r as u64 - i as u64) * ni as u64;
    }
    Ok(ExponentTriple { e, f, k: f as i64 - e as i64 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn valuations() {
        assert_eq!(v_p(12, 2).unwrap(), 2);
        assert_eq!(v_p(12, 5).unwrap(), 0);
        assert_eq!(v_p(1i64 << 30, 2).unwrap(), 30);
        assert_eq!(v_p(-18, 3).unwrap(), 2);
        assert_eq!(v_p(0, 2), Err(Error::ZeroValuation));
    }

    #[test]
    fn factorial_valuations() {
        assert_eq!(d_p(0, 7), 0);
        assert_eq!(d_p(5, 2), 3);
        assert_eq!(d_p(9, 3), 4);
        // against v_p(k!) directly
        for p in [2, 3, 5] {
            for k in 0..30u64 {
                let fact: BigInt = factorial(k).into();
                assert_eq!(d_p(k, p), v_p(fact, p).unwrap());
            }
        }
    }

    #[test]
    fn cpr_values() {
        assert_eq!(c_pr(&Partition::empty(), 2, 3), 0);
        assert_eq!(c_pr(&part("[1,1]"), 2, 1), 3);
        assert_eq!(c_pr(&part("[2]"), 2, 1), 0);
        assert_eq!(c_pr(&part("[1,1]"), 2, 2), 5);
        assert_eq!(c_pr(&part("[3,1]"), 3, 0), 0);
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(&part("[1]"), 4), BigUint::from(4u32));
        assert_eq!(theta(&part("[1]"), 6), BigUint::from(6u32));
        assert_eq!(theta(&part("[2,1]"), 1), BigUint::one());
        assert_eq!(theta(&part("[2,1]"), 0), BigUint::zero());
        assert_eq!(theta(&Partition::empty(), 0), BigUint::one());
        assert_eq!(theta(&Partition::empty(), 12), BigUint::one());
    }

    #[test]
    fn r_ell_values() {
        assert_eq!(r_ell(&Partition::empty(), 3), BigUint::one());
        assert_eq!(r_ell(&part("[1,1]"), 2), BigUint::from(2u32));
        assert_eq!(r_ell(&part("[1,1,1,1]"), 2), BigUint::from(8u32));
        // k = 2 shares the factor 2 with ell = 4: ratio 2, floor(4/4) = 1
        assert_eq!(r_ell(&part("[2,2,2,2]"), 4), BigUint::from(2u32));
        // k = 1 with ell = 6, m = 12: 6^2 · (2!)_{2,3} = 72
        assert_eq!(r_ell(&Partition::rectangle(1, 12), 6), BigUint::from(72u32));
    }

    #[test]
    fn exponent_triples() {
        assert_eq!(exponents(&part("[2]"), 2, 1).unwrap(), ExponentTriple { e: 0, f: 0, k: 0 });
        assert_eq!(exponents(&part("[1,1]"), 2, 1).unwrap(), ExponentTriple { e: 1, f: 2, k: 1 });
        assert_eq!(exponents(&Partition::empty(), 3, 2).unwrap(), ExponentTriple { e: 0, f: 0, k: 0 });
        assert!(exponents(&part("[3]"), 2, 1).is_err());
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(97));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(4) && !is_prime(91));
        assert_eq!(factorize(12), vec![PrimePower { p: 2, r: 2 }, PrimePower { p: 3, r: 1 }]);
        assert!(factorize(1).is_empty());
        assert_eq!(PrimePower::new(4, 1), Err(Error::NotPrime(4)));
    }
}
