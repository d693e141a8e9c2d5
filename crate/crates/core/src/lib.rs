//! Exact computation of generalised (ℓ-modular, ℓ arbitrary) Cartan
//! invariants of symmetric groups.
//!
//! The crate builds the objects the invariant-factor results are about and
//! checks them by independent Smith normal form computation:
//!
//! * [`partitions`]: partitions, ℓ-cores, p-power and p-class-regular sets;
//! * [`arith`]: closed-form invariants (`c_{p,r}`, `ϑ_λ(ℓ)`, `r_ℓ(λ)`, ...);
//! * [`linalg`]: dense exact matrices, Smith/Hermite normal forms, kernels and
//!   equivalence over the localisation `Z_(p)`;
//! * [`symfun`]: character tables and transition matrices between the power
//!   sum, normalised power sum, Schur and complete homogeneous bases;
//! * [`wreath`]: the wreath operator `A^≀(u, v)` and the matrices `X_{ℓ,w}`;
//! * [`cartan`]: projective lattices, blockwise Cartan matrices and their
//!   expected diagonal forms;
//! * [`reduction`]: the p-power reduction chain and checks on each of its steps.
//!
//! All arithmetic is on arbitrary precision integers and rationals.

pub mod arith;
mod cache;
pub mod cartan;
pub mod error;
pub mod linalg;
pub mod partitions;
pub mod reduction;
pub mod report;
pub mod scalar;
pub mod symfun;
pub mod wreath;

pub use error::{Error, Result};
pub use linalg::{Matrix, SnfResult};
pub use partitions::{Partition, PartitionMap};
pub use report::{Status, VerificationReport};

/// Arbitrary precision integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary precision non-negative integer.
pub type Nat = num_bigint::BigUint;
/// Arbitrary precision rational.
pub type Rat = num_rational::BigRational;

/// Dense matrix over `Z`.
pub type IntMatrix = Matrix<Int>;
/// Dense matrix over `Q`.
pub type RatMatrix = Matrix<Rat>;
/// Invariant factors of an integer matrix.
pub type IntSnf = SnfResult<Int>;
