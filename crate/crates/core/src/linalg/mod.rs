//! Exact dense linear algebra over `Z` and `Q`.

mod hnf;
mod local;
mod matrix;
mod parse;
mod snf;

pub use hnf::{hnf_row, hnf_with_transform, integer_kernel};
pub use local::{
    is_p_integral, is_p_integral_scalar, p_local_unimodular, p_part_of_snf, p_part_of_snf_rational,
    p_row_equivalent, valuation_matrix,
};
pub use matrix::Matrix;
pub use parse::{format_matrix, parse_matrix};
pub use snf::{diagonal_invariant_factors, snf, SnfResult};
