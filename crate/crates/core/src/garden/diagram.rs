use super::{ChordDiagram, Direction, GardenError, Sign, Weight};

/// An edge of a chord diagram: arc `i` (from position `i` to `i + 1`) or the
/// chord with index `k` in `matching`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Edge {
    Arc(usize),
    Chord(usize),
}

/// A face of a directed chord diagram.
///
/// `vertices` lists boundary positions in the order of the directed boundary
/// cycle; `edges[i]` joins `vertices[i]` to `vertices[i + 1]` (cyclically).
/// The single face of an order-0 diagram has no vertices and the circular edge
/// `Arc(0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    pub sign: Sign,
    /// Descents in the cyclic label sequence along the directed boundary.
    pub descents: Weight,
    /// `descents` plus the weights of all boundary edges.
    pub total: Weight,
}

impl Face {
    pub fn arcs(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(|e| match e {
            Edge::Arc(i) => Some(*i),
            Edge::Chord(_) => None,
        })
    }

    pub fn chords(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(|e| match e {
            Edge::Chord(k) => Some(*k),
            Edge::Arc(_) => None,
        })
    }
}

/// Face structure of an undirected matching, independent of labels,
/// direction and weights.
#[derive(Debug, Clone)]
pub(crate) struct FaceCycles {
    /// Boundary positions of each face in counterclockwise order, starting at
    /// the face's smallest arc.
    pub ccw_vertices: Vec<Vec<usize>>,
    /// Boundary edges, `ccw_edges[f][i]` joining `ccw_vertices[f][i]` to the next.
    pub ccw_edges: Vec<Vec<Edge>>,
    pub face_of_arc: Vec<usize>,
}

impl FaceCycles {
    /// Faces ordered by their smallest arc index.
    pub fn new(order: usize, partner: &[usize], chord_at: &[usize]) -> Self {
        let mut face_of_arc = vec![usize::MAX; order];
        let mut ccw_vertices = Vec::new();
        let mut ccw_edges = Vec::new();
        for start in 0..order {
            if face_of_arc[start] != usize::MAX {
                continue;
            }
            let id = ccw_vertices.len();
            let mut verts = Vec::new();
            let mut edges = Vec::new();
            let mut v = start;
            loop {
                face_of_arc[v] = id;
                let w = (v + 1) % order;
                verts.push(v);
                edges.push(Edge::Arc(v));
                verts.push(w);
                edges.push(Edge::Chord(chord_at[w]));
                v = partner[w];
                if v == start {
                    break;
                }
            }
            ccw_vertices.push(verts);
            ccw_edges.push(edges);
        }
        FaceCycles {
            ccw_vertices,
            ccw_edges,
            face_of_arc,
        }
    }

    pub fn len(&self) -> usize {
        self.ccw_vertices.len()
    }

    /// Descents of face `f` under `labels`, traversed counterclockwise when
    /// `ccw` and clockwise otherwise.
    pub fn descents(&self, f: usize, labels: &[usize], ccw: bool) -> Weight {
        let verts = &self.ccw_vertices[f];
        let k = verts.len();
        let mut d = 0;
        for i in 0..k {
            let (a, b) = (labels[verts[i]], labels[verts[(i + 1) % k]]);
            // Reversing the cycle turns ascents into descents.
            if (ccw && a > b) || (!ccw && a < b) {
                d += 1;
            }
        }
        d
    }
}

/// Faces of a valid diagram, ordered by smallest arc index.
pub fn faces(d: &ChordDiagram) -> Result<Vec<Face>, GardenError> {
    if let Some(v) = d.violations().into_iter().next() {
        return Err(GardenError::InvalidDiagram(v.to_string()));
    }
    faces_unchecked(d)
}

pub(crate) fn faces_unchecked(d: &ChordDiagram) -> Result<Vec<Face>, GardenError> {
    if d.order == 0 {
        return Ok(vec![Face {
            id: 0,
            vertices: Vec::new(),
            edges: vec![Edge::Arc(0)],
            sign: Sign::Positive,
            descents: 0,
            total: d.arc_weights[0],
        }]);
    }
    let direction = d.direction.unwrap_or(Direction::Forward);
    let cycles = FaceCycles::new(d.order, &d.partners(), &d.chord_at());
    let mut out = Vec::with_capacity(cycles.len());
    for f in 0..cycles.len() {
        let first_arc = cycles.ccw_vertices[f][0];
        let ccw = direction.arc_is_ccw(first_arc);
        let descents = cycles.descents(f, &d.labels, ccw);
        let mut total = descents;
        for e in &cycles.ccw_edges[f] {
            let w = match *e {
                Edge::Arc(i) => d.arc_weights[i],
                Edge::Chord(k) => d.chord_weights[k],
            };
            total = total.checked_add(w).ok_or(GardenError::Overflow)?;
        }
        let (vertices, edges) = if ccw {
            (cycles.ccw_vertices[f].clone(), cycles.ccw_edges[f].clone())
        } else {
            reverse_cycle(&cycles.ccw_vertices[f], &cycles.ccw_edges[f])
        };
        out.push(Face {
            id: f,
            vertices,
            edges,
            sign: if ccw { Sign::Positive } else { Sign::Negative },
            descents,
            total,
        });
    }
    Ok(out)
}

/// Reverses a cyclic vertex/edge sequence, keeping the first vertex first.
fn reverse_cycle(verts: &[usize], edges: &[Edge]) -> (Vec<usize>, Vec<Edge>) {
    let k = verts.len();
    let rv: Vec<usize> = (0..k).map(|j| verts[(k - j) % k]).collect();
    // Edge from rv[j] back to rv[j + 1] is the forward edge leaving rv[j + 1].
    let re: Vec<Edge> = (0..k).map(|j| edges[(2 * k - j - 1) % k]).collect();
    (rv, re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_chord(direction: Direction) -> ChordDiagram {
        ChordDiagram::unweighted(vec![[0, 1]], direction, vec![1, 2])
    }

    #[test]
    fn order_zero_has_one_face() {
        let fs = faces(&ChordDiagram::circle(4)).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].descents, 0);
        assert_eq!(fs[0].total, 4);
    }

    #[test]
    fn single_chord_faces() {
        for dir in [Direction::Forward, Direction::Backward] {
            let fs = faces(&one_chord(dir)).unwrap();
            assert_eq!(fs.len(), 2);
            for f in &fs {
                assert_eq!(f.descents, 1);
                assert_eq!(f.total, 1);
            }
            assert_ne!(fs[0].sign, fs[1].sign);
        }
    }

    #[test]
    fn directed_boundaries_are_cycles() {
        let d = ChordDiagram::unweighted(
            vec![[0, 5], [1, 2], [3, 4]],
            Direction::Backward,
            vec![1, 2, 3, 4, 5, 6],
        );
        let fs = faces(&d).unwrap();
        assert_eq!(fs.len(), 4);
        let partner = d.partners();
        for f in &fs {
            let k = f.vertices.len();
            for i in 0..k {
                let (a, b) = (f.vertices[i], f.vertices[(i + 1) % k]);
                match f.edges[i] {
                    Edge::Arc(j) => {
                        let ccw = d.direction.unwrap().arc_is_ccw(j);
                        let (from, to) = if ccw { (j, (j + 1) % 6) } else { ((j + 1) % 6, j) };
                        assert_eq!((a, b), (from, to));
                    }
                    Edge::Chord(_) => assert_eq!(partner[a], b),
                }
            }
        }
    }

    #[test]
    fn four_vertex_descents() {
        // Matching {0,1},{2,3}: the middle face carries all four vertices.
        let fwd = ChordDiagram::unweighted(vec![[0, 1], [2, 3]], Direction::Forward, vec![1, 2, 3, 4]);
        let fs = faces(&fwd).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[1].vertices.len(), 4);
        // Traversed clockwise: labels 1,4,3,2 have three cyclic descents.
        assert_eq!(fs[1].sign, Sign::Negative);
        assert_eq!(fs[1].descents, 3);
        assert_eq!((fs[0].descents, fs[2].descents), (1, 1));

        let bwd = ChordDiagram { direction: Some(Direction::Backward), ..fwd };
        let fs = faces(&bwd).unwrap();
        assert_eq!(fs[1].descents, 1);
    }

    #[test]
    fn crossing_is_rejected() {
        let d = ChordDiagram::unweighted(vec![[0, 2], [1, 3]], Direction::Forward, vec![1, 2, 3, 4]);
        assert!(matches!(faces(&d), Err(GardenError::InvalidDiagram(_))));
    }
}
