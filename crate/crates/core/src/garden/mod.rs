//! Gardens: weighted, labeled, directed noncrossing chord diagrams with one
//! weighted rooted tree per face.
//!
//! Vertices of a diagram of order `2l` are the positions `0..2l` in
//! counterclockwise order on the circle. Arc `i` joins position `i` to
//! position `(i + 1) % 2l`. A diagram of order 0 has no vertices and a single
//! circular edge whose weight is stored as `arc_weights[0]`.

pub(crate) mod canon;
pub(crate) mod diagram;
mod json;
mod pants;
mod tree;
mod validate;

pub use canon::{are_equivalent, canonical_form, canonical_key, CanonicalKey};
pub use diagram::{faces, Edge, Face};
pub use json::{GardenJson, NodeJson, TreeJson};
pub use pants::{pants_collection, Pants, PantsCollection};
pub use tree::{TreeNode, WeightedTree};
pub use validate::{validate_garden, ValidationReport, Violation};

use thiserror::Error;

/// Nonnegative integer weight carried by edges and tree nodes.
pub type Weight = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GardenError {
    #[error("invalid chord diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid garden: {0}")]
    InvalidGarden(ValidationReport),
    #[error("weight overflow")]
    Overflow,
    #[error("malformed interchange document: {0}")]
    Malformed(String),
}

/// One of the two consistent edge orientations of a directed chord diagram.
///
/// `Forward` means arc 0 runs from position 0 to position 1. Arcs alternate
/// orientation around the circle, so this single bit fixes every edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    /// Whether arc `i` runs counterclockwise, i.e. from position `i` to `i + 1`.
    pub fn arc_is_ccw(self, arc: usize) -> bool {
        (self == Direction::Forward) == arc.is_multiple_of(2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// A weighted labeled directed planar chord diagram.
///
/// Fields are public so that unvalidated input can be represented and
/// reported on; [`validate_garden`] and [`ChordDiagram::violations`] check
/// every structural invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    pub order: usize,
    /// Unordered vertex pairs; `chord_weights[k]` belongs to `matching[k]`.
    pub matching: Vec<[usize; 2]>,
    /// `None` exactly when `order == 0`.
    pub direction: Option<Direction>,
    /// `labels[p]` is the label (in `1..=order`) of the vertex at position `p`.
    pub labels: Vec<usize>,
    pub arc_weights: Vec<Weight>,
    pub chord_weights: Vec<Weight>,
}

impl ChordDiagram {
    /// The chordless diagram whose circular edge carries `weight`.
    pub fn circle(weight: Weight) -> Self {
        ChordDiagram {
            order: 0,
            matching: Vec::new(),
            direction: None,
            labels: Vec::new(),
            arc_weights: vec![weight],
            chord_weights: Vec::new(),
        }
    }

    /// A diagram with all edge weights zero.
    pub fn unweighted(matching: Vec<[usize; 2]>, direction: Direction, labels: Vec<usize>) -> Self {
        let order = labels.len();
        let l = matching.len();
        ChordDiagram {
            order,
            matching,
            direction: Some(direction),
            labels,
            arc_weights: vec![0; order],
            chord_weights: vec![0; l],
        }
    }

    /// Half the order.
    pub fn chord_count(&self) -> usize {
        self.order / 2
    }

    /// Partner of every position, assuming a valid perfect matching.
    pub(crate) fn partners(&self) -> Vec<usize> {
        let mut partner = vec![usize::MAX; self.order];
        for &[a, b] in &self.matching {
            partner[a] = b;
            partner[b] = a;
        }
        partner
    }

    /// Index into `matching` of the chord at each position.
    pub(crate) fn chord_at(&self) -> Vec<usize> {
        let mut at = vec![usize::MAX; self.order];
        for (k, &[a, b]) in self.matching.iter().enumerate() {
            at[a] = k;
            at[b] = k;
        }
        at
    }

    pub fn violations(&self) -> Vec<Violation> {
        validate::diagram_violations(self)
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }
}

/// A chord diagram with one weighted rooted tree per face, indexed by face id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Garden {
    pub diagram: ChordDiagram,
    pub trees: Vec<WeightedTree>,
}

impl Garden {
    pub fn new(diagram: ChordDiagram, trees: Vec<WeightedTree>) -> Self {
        Garden { diagram, trees }
    }

    /// The imaginary garden made of a single tree; the circle weight is the
    /// root weight.
    pub fn imaginary(tree: WeightedTree) -> Self {
        let root = tree.nodes.first().map_or(0, |n| n.weight);
        Garden {
            diagram: ChordDiagram::circle(root),
            trees: vec![tree],
        }
    }

    pub fn order(&self) -> usize {
        self.diagram.order
    }

    /// Twice the inner node weights plus the root weights.
    pub fn total_weight(&self) -> Result<Weight, GardenError> {
        self.trees
            .iter()
            .try_fold(0u64, |acc, t| acc.checked_add(t.garden_weight()?).ok_or(GardenError::Overflow))
    }

    pub fn validate(&self) -> ValidationReport {
        validate_garden(self)
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), GardenError> {
        let report = validate_garden(self);
        if report.is_ok() {
            Ok(())
        } else {
            Err(GardenError::InvalidGarden(report))
        }
    }
}

/// Free-function form of [`Garden::total_weight`].
pub fn total_weight(g: &Garden) -> Result<Weight, GardenError> {
    g.total_weight()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arcs_alternate() {
        let d = Direction::Forward;
        assert!(d.arc_is_ccw(0));
        assert!(!d.arc_is_ccw(1));
        assert!(d.arc_is_ccw(2));
        assert!(!d.reversed().arc_is_ccw(0));
    }

    #[test]
    fn total_weight_counts_inner_nodes_twice() {
        let t = WeightedTree::from_parents(&[(None, 1), (Some(0), 1)]);
        assert_eq!(Garden::imaginary(t).total_weight().unwrap(), 3);
    }
}
