use super::diagram::faces_unchecked;
use super::{Garden, GardenError, Sign, Weight};

/// A planar region between an outer boundary (a face boundary or an oval) and
/// its immediate inner ovals, each boundary carrying a covering multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pants {
    pub sign: Sign,
    pub outer: Weight,
    pub inner: Vec<Weight>,
    pub face: usize,
    pub node: usize,
}

impl Pants {
    /// Degree of the covering of a hemisphere: the sum of all boundary weights.
    pub fn degree(&self) -> Weight {
        self.outer + self.inner.iter().sum::<Weight>()
    }

    pub fn boundary_count(&self) -> usize {
        1 + self.inner.len()
    }

    /// Outer weight followed by the inner weights.
    pub fn boundary_weights(&self) -> Vec<Weight> {
        let mut w = Vec::with_capacity(self.boundary_count());
        w.push(self.outer);
        w.extend_from_slice(&self.inner);
        w
    }

    /// Simple ramification points of a genus-0 pants map: degree plus number
    /// of boundary components minus two.
    pub fn ramification_count(&self) -> Weight {
        self.degree() + self.boundary_count() as Weight - 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PantsCollection {
    pub pants: Vec<Pants>,
}

impl PantsCollection {
    pub fn total_ramification(&self) -> Weight {
        self.pants.iter().map(Pants::ramification_count).sum()
    }

    pub fn len(&self) -> usize {
        self.pants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pants.is_empty()
    }
}

/// The weighted pants collection of a valid garden, one pants per tree node,
/// listed face by face in node order.
pub fn pants_collection(g: &Garden) -> Result<PantsCollection, GardenError> {
    g.ensure_valid()?;
    let faces = faces_unchecked(&g.diagram)?;
    let mut pants = Vec::new();
    for (face, tree) in faces.iter().zip(&g.trees) {
        let children = tree.children();
        let depths = tree.depths();
        for (node, n) in tree.nodes.iter().enumerate() {
            let sign = if depths[node] % 2 == 0 {
                face.sign
            } else {
                face.sign.flipped()
            };
            pants.push(Pants {
                sign,
                outer: n.weight,
                inner: children[node].iter().map(|&c| tree.nodes[c].weight).collect(),
                face: face.id,
                node,
            });
        }
    }
    Ok(PantsCollection { pants })
}
