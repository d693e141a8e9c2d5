//! Scalar traits the linear algebra is generic over.
//!
//! Everything in this crate is exact. [`Scalar`] is any commutative ring the
//! dense [`Matrix`](crate::linalg::Matrix) can hold, [`Field`] restricts to
//! exact fractions, and [`EuclideanRing`] to the signed integer types the
//! normal-form algorithms run on. Floating-point types do not
//! implement `Field`.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

pub trait Scalar: Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + Debug + Display + PartialEq + Num + Neg<Output = T> {}

/// Exact field: division never rounds.
pub trait Field: Scalar {}

impl<T> Field for Ratio<T> where T: Clone + Debug + Display + Integer + Signed {}

/// Integers with floor division and a sign, enough for Smith and Hermite
/// normal forms.
pub trait EuclideanRing: Scalar + Integer + Signed {}

impl<T> EuclideanRing for T where T: Scalar + Integer + Signed {}
