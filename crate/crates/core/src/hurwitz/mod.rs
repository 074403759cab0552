//! Exact real Hurwitz numbers of trees and gardens.
//!
//! Every value is a [`BigRational`](num_rational::BigRational); integrality is checked after the fact
//! wherever the result counts something. Each closed form has an independent
//! cross-check: pants numbers against transposition factorization counts,
//! tree and garden numbers against a direct count that distributes branch
//! points over pants and multiplies pants numbers.

mod complex;
mod exact;
mod formulas;
mod oracle;
mod table;

pub use complex::{complex_hurwitz_g0, complex_hurwitz_g1};
pub use exact::{as_positive_integer, multiset_symmetry, to_decimal_string, ExactScalar};
pub use formulas::{
    direct_count_garden, direct_count_tree, hurwitz_garden, hurwitz_pants, hurwitz_tree,
    NodeStats, TreeStats,
};
pub use oracle::{
    complex_g0_oracle, factorization_count, factorization_oracle, factorization_oracle_bounded,
    transposition_orbits, OrbitCount, DEFAULT_ORACLE_BOUND,
};
pub use table::{real_hurwitz_table, RealHurwitzRow, RealHurwitzTable};

use thiserror::Error;

use crate::enumerate::EnumerationError;
use crate::garden::GardenError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HurwitzError {
    #[error("empty boundary weight list")]
    EmptyBoundary,
    #[error("boundary weights must be positive")]
    ZeroWeight,
    #[error("degree {degree} exceeds the oracle bound {bound}")]
    BoundExceeded { degree: u64, bound: u64 },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("degree {0} is outside the formula's domain")]
    Domain(u64),
    #[error(transparent)]
    Garden(#[from] GardenError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    /// Two computations that must agree did not, or a count was not a
    /// positive integer. Indicates a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
