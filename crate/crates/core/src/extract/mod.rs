//! Garden of a given generic real rational function.
//!
//! Critical points are found exactly up to root isolation: multiple critical
//! points and shared critical values are detected with exact polynomial
//! arithmetic or an explicit tolerance, and rejected. The preimage of the
//! real circle in the upper half-plane is then traced numerically and its
//! combinatorics read off. Every count is cross-checked against the garden
//! invariants before a result is returned.

mod build;
mod critical;
mod function;
mod poly;
mod trace;

use serde::Serialize;
use thiserror::Error;

use crate::garden::Garden;

pub use build::{build_garden, weights};
pub use critical::{critical_data, CriticalData, CriticalPoint, SpherePoint};
pub use function::{parse_coefficient, RationalFunction};
pub use poly::{roots, square_free_decomposition, Poly};
pub use trace::{trace_s, Boundary, BoundaryKind, Chart, CurveKind, TraceConfig, TracedCurve, Tracing};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ExtractError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("non-generic function: {reason} (margin {margin:e})")]
    NonGeneric { reason: String, margin: f64 },
    #[error("tracing failed: {0}")]
    TracingFailure(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("cannot parse function: {0}")]
    Parse(String),
}

/// Critical value in diagnostics: `{"re": .., "im": ..}` or `"inf"`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ValueJson {
    Finite { re: f64, im: f64 },
    Infinite(&'static str),
}

impl From<SpherePoint> for ValueJson {
    fn from(p: SpherePoint) -> Self {
        match p {
            SpherePoint::Finite(z) => ValueJson::Finite { re: z.re, im: z.im },
            SpherePoint::Infinity => ValueJson::Infinite("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics {
    pub l: usize,
    /// Values of the simple critical points: real ones by increasing value,
    /// then nonreal ones.
    pub critical_values: Vec<ValueJson>,
    /// Values of real poles of odd order at least 3, which are not vertices.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub degenerate_pole_values: Vec<ValueJson>,
    /// Smallest chordal distance between critical values; `null` with fewer
    /// than two critical points.
    pub min_separation: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct Extraction {
    pub garden: Garden,
    pub critical: CriticalData,
    pub tracing: Tracing,
    pub diagnostics: Diagnostics,
}

fn diagnostics(cd: &CriticalData) -> Diagnostics {
    let value = |&i: &usize| ValueJson::from(cd.points[i].value);
    Diagnostics {
        l: cd.l(),
        critical_values: cd.real.iter().chain(&cd.complex).map(value).collect(),
        degenerate_pole_values: cd.degenerate_poles.iter().map(value).collect(),
        min_separation: cd.min_separation.is_finite().then_some(cd.min_separation),
    }
}

/// Full extraction with intermediate data. Tracing failures are retried
/// on a doubled grid up to `cfg.max_samples`.
pub fn extract(f: &RationalFunction, cfg: &TraceConfig) -> Result<Extraction, ExtractError> {
    let critical = critical_data(f, cfg.tol)?;
    let mut grid = *cfg;
    let mut tracing = loop {
        match trace_s(f, &critical, &grid) {
            Err(ExtractError::TracingFailure(_)) if grid.samples * 2 <= cfg.max_samples => grid.samples *= 2,
            other => break other?,
        }
    };
    weights(&critical, &mut tracing)?;
    let garden = build_garden(f, &critical, &tracing)?;
    Ok(Extraction {
        garden,
        diagnostics: diagnostics(&critical),
        critical,
        tracing,
    })
}

/// The garden of `f` with default settings.
pub fn extract_garden(f: &RationalFunction) -> Result<Garden, ExtractError> {
    extract(f, &TraceConfig::default()).map(|e| e.garden)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garden::{canonical_key, Direction, WeightedTree};

    fn garden(num: &[i64], den: &[i64]) -> Garden {
        extract_garden(&RationalFunction::from_i64(num, den)).unwrap()
    }

    #[test]
    fn square_minus_one() {
        let g = garden(&[-1, 0, 1], &[1]);
        assert_eq!(g.diagram.order, 2);
        assert_eq!(g.diagram.labels, vec![1, 2]);
        assert_eq!(g.diagram.direction, Some(Direction::Forward));
        assert_eq!(g.total_weight().unwrap(), 2);
    }

    #[test]
    fn identity_and_cubic() {
        let g = garden(&[0, 1], &[1]);
        assert_eq!(g.order(), 0);
        assert_eq!(g.trees, vec![WeightedTree::bare(1)]);
        let c = garden(&[0, 3, 0, 1], &[1]);
        assert_eq!(c.order(), 0);
        assert_eq!(c.trees[0].len(), 2);
        assert_eq!(c.total_weight().unwrap(), 3);
    }

    #[test]
    fn negated_square_is_in_the_same_class() {
        // There is a single class of degree 2 with a real critical value.
        let a = garden(&[-1, 0, 1], &[1]);
        let b = garden(&[1, 0, -1], &[1]);
        assert_eq!(b.total_weight().unwrap(), 2);
        assert_eq!(canonical_key(&a).unwrap(), canonical_key(&b).unwrap());
    }

    #[test]
    fn diagnostics_serialize() {
        let e = extract(&RationalFunction::from_i64(&[-1, 0, 1], &[1]), &TraceConfig::default()).unwrap();
        let j = serde_json::to_value(&e.diagnostics).unwrap();
        assert_eq!(j["l"], 1);
        assert_eq!(j["critical_values"][1], "inf");
        assert!(j["critical_values"][0]["re"].as_f64().unwrap() + 1.0 < 1e-9);
    }
}
