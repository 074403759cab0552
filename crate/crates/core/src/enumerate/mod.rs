//! Exhaustive enumeration of gardens up to equivalence.
//!
//! Candidates are generated per skeleton, direction and labeling (with the
//! vertex at position 0 labeled 1), then every nonnegative distribution of the
//! remaining weight over arcs, chords and inner tree nodes. Rotations still
//! produce equivalent candidates; a set of canonical keys collapses them.

mod gardens;
mod skeleton;
mod trees;

pub use gardens::{
    count_components, count_hyperbolic, enumerate_gardens, ComponentCounts, EnumerationResult,
};
pub use skeleton::enumerate_skeletons;
pub use trees::{count_elliptic, enumerate_trees};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::garden::Weight;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("search budget exceeded: more than {limit} {what}")]
    BudgetExceeded { limit: u64, what: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Restriction {
    #[default]
    All,
    /// No real critical values: order 0.
    Elliptic,
    /// All critical values real: order `2(n - 1)`, bare roots, zero weights.
    Hyperbolic,
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Restriction::All => "all",
            Restriction::Elliptic => "elliptic",
            Restriction::Hyperbolic => "hyperbolic",
        })
    }
}

impl FromStr for Restriction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Restriction::All),
            "elliptic" => Ok(Restriction::Elliptic),
            "hyperbolic" => Ok(Restriction::Hyperbolic),
            other => Err(format!("unknown restriction {other:?}")),
        }
    }
}

/// Limits on the search. Exceeding either is an error, never a truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_gardens: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 10_000_000,
            max_gardens: u64::MAX,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub total_weight: Weight,
    /// Diagram order `2l`, if fixed.
    pub order: Option<usize>,
    pub restriction: Restriction,
}

impl EnumerationQuery {
    pub fn new(total_weight: Weight) -> Self {
        EnumerationQuery {
            total_weight,
            order: None,
            restriction: Restriction::All,
        }
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }

    pub fn with_restriction(mut self, restriction: Restriction) -> Self {
        self.restriction = restriction;
        self
    }

    /// Chord counts `l` the query ranges over.
    pub fn chord_counts(&self) -> Result<Vec<usize>, EnumerationError> {
        let n = self.total_weight;
        if n == 0 {
            return Err(EnumerationError::InvalidQuery("total weight must be at least 1".into()));
        }
        let max_l = (n - 1) as usize;
        let by_restriction = match self.restriction {
            Restriction::All => None,
            Restriction::Elliptic => Some(0),
            Restriction::Hyperbolic => Some(max_l),
        };
        match (self.order, by_restriction) {
            (Some(o), _) if o % 2 == 1 => Err(EnumerationError::InvalidQuery(format!("order {o} is odd"))),
            (Some(o), _) if o / 2 > max_l => Err(EnumerationError::InvalidQuery(format!(
                "order {o} exceeds 2n-2 = {}",
                2 * max_l
            ))),
            (Some(o), Some(l)) if o / 2 != l => Err(EnumerationError::InvalidQuery(format!(
                "order {o} contradicts restriction {}",
                self.restriction
            ))),
            (Some(o), _) => Ok(vec![o / 2]),
            (None, Some(l)) => Ok(vec![l]),
            (None, None) => Ok((0..=max_l).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn query_orders() {
        assert_eq!(EnumerationQuery::new(4).chord_counts().unwrap(), vec![0, 1, 2, 3]);
        let hyp = EnumerationQuery::new(4).with_restriction(Restriction::Hyperbolic);
        assert_eq!(hyp.chord_counts().unwrap(), vec![3]);
        assert!(hyp.with_order(2).chord_counts().is_err());
        assert!(EnumerationQuery::new(3).with_order(3).chord_counts().is_err());
        assert!(EnumerationQuery::new(3).with_order(6).chord_counts().is_err());
        assert!(EnumerationQuery::new(0).chord_counts().is_err());
        assert_eq!("hyperbolic".parse::<Restriction>().unwrap(), Restriction::Hyperbolic);
        assert!("both".parse::<Restriction>().is_err());
    }
}
