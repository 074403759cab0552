use std::fmt;

use super::diagram::faces_unchecked;
use super::{ChordDiagram, Garden};

/// A violated garden invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OddOrder(usize),
    MatchingSize { expected: usize, found: usize },
    VertexOutOfRange { vertex: usize },
    LoopChord { vertex: usize },
    NotPerfectMatching { vertex: usize },
    Crossing { first: [usize; 2], second: [usize; 2] },
    LabelCount { expected: usize, found: usize },
    LabelsNotBijection,
    ArcWeightCount { expected: usize, found: usize },
    ChordWeightCount { expected: usize, found: usize },
    MissingDirection,
    UnexpectedDirection,
    TreeCount { faces: usize, trees: usize },
    MalformedTree { face: usize, reason: String },
    ZeroInnerWeight { face: usize, node: usize },
    ZeroRootWeight { face: usize },
    RootWeightMismatch { face: usize, expected: u64, found: u64 },
    Overflow,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            OddOrder(o) => write!(f, "order {o} is odd"),
            MatchingSize { expected, found } => {
                write!(f, "matching has {found} pairs, expected {expected}")
            }
            VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            LoopChord { vertex } => write!(f, "chord joins vertex {vertex} to itself"),
            NotPerfectMatching { vertex } => {
                write!(f, "vertex {vertex} is not matched exactly once")
            }
            Crossing { first, second } => write!(
                f,
                "chords {{{},{}}} and {{{},{}}} cross",
                first[0], first[1], second[0], second[1]
            ),
            LabelCount { expected, found } => {
                write!(f, "{found} labels, expected {expected}")
            }
            LabelsNotBijection => write!(f, "labels are not a bijection onto 1..=order"),
            ArcWeightCount { expected, found } => {
                write!(f, "{found} arc weights, expected {expected}")
            }
            ChordWeightCount { expected, found } => {
                write!(f, "{found} chord weights, expected {expected}")
            }
            MissingDirection => write!(f, "direction missing for a diagram with chords"),
            UnexpectedDirection => write!(f, "direction given for an order-0 diagram"),
            TreeCount { faces, trees } => write!(f, "{trees} trees for {faces} faces"),
            MalformedTree { face, reason } => write!(f, "tree of face {face}: {reason}"),
            ZeroInnerWeight { face, node } => {
                write!(f, "inner node {node} of face {face} has weight 0")
            }
            ZeroRootWeight { face } => write!(f, "root of face {face} has weight 0"),
            RootWeightMismatch {
                face,
                expected,
                found,
            } => write!(
                f,
                "root weight ≠ t_j on face {face}: root weight {found}, face total {expected}"
            ),
            Overflow => write!(f, "weight overflow"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub(crate) fn diagram_violations(d: &ChordDiagram) -> Vec<Violation> {
    let mut out = Vec::new();
    if d.order % 2 == 1 {
        out.push(Violation::OddOrder(d.order));
        return out;
    }
    let l = d.order / 2;
    if d.matching.len() != l {
        out.push(Violation::MatchingSize {
            expected: l,
            found: d.matching.len(),
        });
    }
    let mut seen = vec![0usize; d.order];
    let mut in_range = true;
    for &[a, b] in &d.matching {
        for v in [a, b] {
            if v >= d.order {
                out.push(Violation::VertexOutOfRange { vertex: v });
                in_range = false;
            } else {
                seen[v] += 1;
            }
        }
        if a == b {
            out.push(Violation::LoopChord { vertex: a });
        }
    }
    if in_range && d.matching.len() == l {
        if let Some(v) = seen.iter().position(|&c| c != 1) {
            out.push(Violation::NotPerfectMatching { vertex: v });
        } else {
            for (i, &p) in d.matching.iter().enumerate() {
                for &q in &d.matching[i + 1..] {
                    if crosses(p, q) {
                        out.push(Violation::Crossing { first: p, second: q });
                    }
                }
            }
        }
    }
    if d.labels.len() != d.order {
        out.push(Violation::LabelCount {
            expected: d.order,
            found: d.labels.len(),
        });
    } else {
        let mut hit = vec![false; d.order + 1];
        let bijective = d.labels.iter().all(|&x| {
            let fresh = (1..=d.order).contains(&x) && !hit[x];
            if fresh {
                hit[x] = true;
            }
            fresh
        });
        if !bijective {
            out.push(Violation::LabelsNotBijection);
        }
    }
    let arcs = if d.order == 0 { 1 } else { d.order };
    if d.arc_weights.len() != arcs {
        out.push(Violation::ArcWeightCount {
            expected: arcs,
            found: d.arc_weights.len(),
        });
    }
    if d.chord_weights.len() != d.matching.len() {
        out.push(Violation::ChordWeightCount {
            expected: d.matching.len(),
            found: d.chord_weights.len(),
        });
    }
    match (d.order, d.direction) {
        (0, Some(_)) => out.push(Violation::UnexpectedDirection),
        (o, None) if o > 0 => out.push(Violation::MissingDirection),
        _ => {}
    }
    out
}

fn crosses(p: [usize; 2], q: [usize; 2]) -> bool {
    let (a, b) = (p[0].min(p[1]), p[0].max(p[1]));
    let (c, d) = (q[0].min(q[1]), q[0].max(q[1]));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Checks every garden invariant and reports all violations found.
pub fn validate_garden(g: &Garden) -> ValidationReport {
    let mut violations = diagram_violations(&g.diagram);
    if !violations.is_empty() {
        return ValidationReport { violations };
    }
    let faces = match faces_unchecked(&g.diagram) {
        Ok(f) => f,
        Err(_) => {
            return ValidationReport {
                violations: vec![Violation::Overflow],
            }
        }
    };
    if faces.len() != g.trees.len() {
        violations.push(Violation::TreeCount {
            faces: faces.len(),
            trees: g.trees.len(),
        });
    }
    for (face, tree) in faces.iter().zip(&g.trees) {
        if let Some(reason) = tree.structure_problem() {
            violations.push(Violation::MalformedTree {
                face: face.id,
                reason,
            });
            continue;
        }
        for (i, node) in tree.nodes.iter().enumerate().skip(1) {
            if node.weight == 0 {
                violations.push(Violation::ZeroInnerWeight {
                    face: face.id,
                    node: i,
                });
            }
        }
        let root = tree.root_weight();
        if root == 0 {
            violations.push(Violation::ZeroRootWeight { face: face.id });
        }
        if root != face.total {
            violations.push(Violation::RootWeightMismatch {
                face: face.id,
                expected: face.total,
                found: root,
            });
        }
    }
    if violations.is_empty() && g.total_weight().is_err() {
        violations.push(Violation::Overflow);
    }
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garden::{Direction, WeightedTree};

    fn order_two() -> Garden {
        Garden::new(
            ChordDiagram::unweighted(vec![[0, 1]], Direction::Forward, vec![1, 2]),
            vec![WeightedTree::bare(1), WeightedTree::bare(1)],
        )
    }

    #[test]
    fn smallest_gardens_validate() {
        assert!(validate_garden(&Garden::imaginary(WeightedTree::bare(1))).is_ok());
        let g = order_two();
        assert!(validate_garden(&g).is_ok());
        assert_eq!(g.total_weight().unwrap(), 2);
    }

    #[test]
    fn root_weight_must_match_face_total() {
        let mut g = order_two();
        g.trees[1] = WeightedTree::bare(2);
        let report = validate_garden(&g);
        assert_eq!(
            report.violations,
            vec![Violation::RootWeightMismatch {
                face: 1,
                expected: 1,
                found: 2
            }]
        );
        assert!(report.to_string().contains("root weight ≠ t_j"));
    }

    #[test]
    fn order_zero_needs_positive_root() {
        let g = Garden::imaginary(WeightedTree::bare(0));
        assert!(validate_garden(&g)
            .violations
            .contains(&Violation::ZeroRootWeight { face: 0 }));
    }

    #[test]
    fn reports_structural_problems() {
        let mut g = order_two();
        g.diagram.labels = vec![1, 1];
        g.diagram.direction = None;
        let v = validate_garden(&g).violations;
        assert!(v.contains(&Violation::LabelsNotBijection));
        assert!(v.contains(&Violation::MissingDirection));

        let crossing = ChordDiagram::unweighted(vec![[0, 2], [1, 3]], Direction::Forward, vec![1, 2, 3, 4]);
        assert!(matches!(crossing.violations()[0], Violation::Crossing { .. }));

        let mut g = order_two();
        g.trees.pop();
        assert_eq!(
            validate_garden(&g).violations,
            vec![Violation::TreeCount { faces: 2, trees: 1 }]
        );

        let mut g = Garden::imaginary(WeightedTree::from_parents(&[(None, 1), (Some(0), 0)]));
        g.diagram.direction = Some(Direction::Forward);
        let v = validate_garden(&g).violations;
        assert_eq!(v, vec![Violation::UnexpectedDirection]);
        g.diagram.direction = None;
        assert_eq!(
            validate_garden(&g).violations,
            vec![Violation::ZeroInnerWeight { face: 0, node: 1 }]
        );
    }
}
