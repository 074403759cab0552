//! Garden interchange format.
//!
//! ```json
//! {"order": 2, "matching": [[0,1]], "direction_edge": [0,1], "labels": [1,2],
//!  "arc_weights": [0,0], "chord_weights": [0],
//!  "trees": [{"face": 0, "nodes": [{"id": 0, "parent": null, "weight": 1}]}, ...]}
//! ```
//!
//! `direction_edge` names one directed edge. When its endpoints are
//! cyclically adjacent it denotes the circle arc between them, otherwise the
//! chord joining them.

use serde::{Deserialize, Serialize};

use super::{ChordDiagram, Direction, Garden, GardenError, TreeNode, Weight, WeightedTree};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GardenJson {
    pub order: usize,
    pub matching: Vec<[usize; 2]>,
    pub direction_edge: Option<[usize; 2]>,
    pub labels: Vec<usize>,
    pub arc_weights: Vec<Weight>,
    pub chord_weights: Vec<Weight>,
    pub trees: Vec<TreeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub face: usize,
    pub nodes: Vec<NodeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub parent: Option<usize>,
    pub weight: Weight,
}

impl From<&Garden> for GardenJson {
    fn from(g: &Garden) -> Self {
        let d = &g.diagram;
        GardenJson {
            order: d.order,
            matching: d.matching.clone(),
            direction_edge: d.direction.map(|dir| match dir {
                Direction::Forward => [0, 1],
                Direction::Backward => [1, 0],
            }),
            labels: d.labels.clone(),
            arc_weights: d.arc_weights.clone(),
            chord_weights: d.chord_weights.clone(),
            trees: g
                .trees
                .iter()
                .enumerate()
                .map(|(face, t)| TreeJson {
                    face,
                    nodes: t
                        .nodes
                        .iter()
                        .enumerate()
                        .map(|(id, n)| NodeJson {
                            id,
                            parent: n.parent,
                            weight: n.weight,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<GardenJson> for Garden {
    type Error = GardenError;

    fn try_from(j: GardenJson) -> Result<Self, Self::Error> {
        let direction = match j.direction_edge {
            None => None,
            Some(edge) => Some(direction_from_edge(j.order, &j.matching, edge)?),
        };

        let mut trees: Vec<Option<WeightedTree>> = vec![None; j.trees.len()];
        for t in j.trees {
            let slot = trees
                .get_mut(t.face)
                .ok_or_else(|| GardenError::Malformed(format!("tree face id {} out of range", t.face)))?;
            if slot.is_some() {
                return Err(GardenError::Malformed(format!("duplicate tree for face {}", t.face)));
            }
            let mut nodes: Vec<Option<TreeNode>> = vec![None; t.nodes.len()];
            for n in t.nodes {
                let node = nodes.get_mut(n.id).ok_or_else(|| {
                    GardenError::Malformed(format!("node id {} out of range in face {}", n.id, t.face))
                })?;
                if node.is_some() {
                    return Err(GardenError::Malformed(format!(
                        "duplicate node id {} in face {}",
                        n.id, t.face
                    )));
                }
                *node = Some(TreeNode {
                    parent: n.parent,
                    weight: n.weight,
                });
            }
            *slot = Some(WeightedTree {
                nodes: nodes.into_iter().map(|n| n.expect("ids form 0..k")).collect(),
            });
        }

        Ok(Garden {
            diagram: ChordDiagram {
                order: j.order,
                matching: j.matching,
                direction,
                labels: j.labels,
                arc_weights: j.arc_weights,
                chord_weights: j.chord_weights,
            },
            trees: trees.into_iter().map(|t| t.expect("faces form 0..k")).collect(),
        })
    }
}

fn direction_from_edge(order: usize, matching: &[[usize; 2]], edge: [usize; 2]) -> Result<Direction, GardenError> {
    let [from, to] = edge;
    if order == 0 {
        return Err(GardenError::Malformed("direction_edge must be null for order 0".into()));
    }
    if from >= order || to >= order || from == to {
        return Err(GardenError::Malformed(format!("direction_edge [{from},{to}] is not an edge")));
    }
    // Arc `i` runs counterclockwise when it goes from `i` to `i + 1`.
    let (arc, ccw) = if to == (from + 1) % order {
        (from, true)
    } else if from == (to + 1) % order {
        (to, false)
    } else if matching.iter().any(|&[a, b]| (a, b) == (from, to) || (a, b) == (to, from)) {
        // Chord traversed from `from` to `to` on the counterclockwise boundary
        // of the face that contains the arc ending at `from`.
        ((from + order - 1) % order, true)
    } else {
        return Err(GardenError::Malformed(format!("direction_edge [{from},{to}] is not an edge")));
    };
    let forward_arc0 = ccw == (arc % 2 == 0);
    Ok(if forward_arc0 {
        Direction::Forward
    } else {
        Direction::Backward
    })
}

impl Garden {
    pub fn to_json(&self) -> GardenJson {
        GardenJson::from(self)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("garden serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self, GardenError> {
        let j: GardenJson = serde_json::from_str(s).map_err(|e| GardenError::Malformed(e.to_string()))?;
        Garden::try_from(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garden::faces;

    #[test]
    fn field_names_are_exact() {
        let g = Garden::new(
            ChordDiagram::unweighted(vec![[0, 1]], Direction::Forward, vec![1, 2]),
            vec![WeightedTree::bare(1), WeightedTree::bare(1)],
        );
        assert_eq!(
            g.to_json_string(),
            r#"{"order":2,"matching":[[0,1]],"direction_edge":[0,1],"labels":[1,2],"arc_weights":[0,0],"chord_weights":[0],"trees":[{"face":0,"nodes":[{"id":0,"parent":null,"weight":1}]},{"face":1,"nodes":[{"id":0,"parent":null,"weight":1}]}]}"#
        );
        assert_eq!(Garden::from_json_str(&g.to_json_string()).unwrap(), g);
    }

    #[test]
    fn order_zero_round_trip() {
        let g = Garden::imaginary(WeightedTree::from_parents(&[(None, 1), (Some(0), 1)]));
        let s = g.to_json_string();
        assert!(s.contains(r#""direction_edge":null"#));
        assert_eq!(Garden::from_json_str(&s).unwrap(), g);
    }

    #[test]
    fn direction_from_any_edge() {
        let matching = vec![[0, 5], [1, 2], [3, 4]];
        let d = ChordDiagram::unweighted(matching.clone(), Direction::Backward, vec![1, 2, 3, 4, 5, 6]);
        // Every directed boundary edge of every face yields the same direction.
        for f in faces(&d).unwrap() {
            let k = f.vertices.len();
            for i in 0..k {
                let edge = [f.vertices[i], f.vertices[(i + 1) % k]];
                let adjacent = edge[1] == (edge[0] + 1) % 6 || edge[0] == (edge[1] + 1) % 6;
                let is_chord = matches!(f.edges[i], crate::garden::Edge::Chord(_));
                if is_chord && adjacent {
                    continue; // adjacency makes the arc reading take precedence
                }
                assert_eq!(direction_from_edge(6, &matching, edge).unwrap(), Direction::Backward);
            }
        }
    }

    #[test]
    fn malformed_documents() {
        assert!(Garden::from_json_str("{").is_err());
        let dup = r#"{"order":0,"matching":[],"direction_edge":null,"labels":[],"arc_weights":[1],"chord_weights":[],
            "trees":[{"face":0,"nodes":[{"id":0,"parent":null,"weight":1},{"id":0,"parent":0,"weight":1}]}]}"#;
        assert!(matches!(Garden::from_json_str(dup), Err(GardenError::Malformed(_))));
        let neg = r#"{"order":0,"matching":[],"direction_edge":null,"labels":[],"arc_weights":[-1],"chord_weights":[],"trees":[]}"#;
        assert!(Garden::from_json_str(neg).is_err());
        let not_edge = r#"{"order":4,"matching":[[0,1],[2,3]],"direction_edge":[0,2],"labels":[1,2,3,4],"arc_weights":[0,0,0,0],"chord_weights":[0,0],"trees":[]}"#;
        assert!(Garden::from_json_str(not_edge).is_err());
    }
}
