use std::fmt;

use super::diagram::FaceCycles;
use super::{ChordDiagram, Direction, Garden, GardenError, WeightedTree};

/// Byte encoding of a garden that is invariant under rotation of the disk
/// combined with a cyclic shift of the labels. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

/// Rotates positions by `r` and shifts labels so that position 0 carries 1.
/// Trees are put in canonical sibling order.
fn rotate_normalized(g: &Garden, r: usize) -> Garden {
    let d = &g.diagram;
    let o = d.order;
    if o == 0 {
        return Garden {
            diagram: d.clone(),
            trees: g.trees.iter().map(WeightedTree::canonicalized).collect(),
        };
    }
    let mv = |p: usize| (p + r) % o;

    let mut chords: Vec<([usize; 2], u64)> = d
        .matching
        .iter()
        .zip(&d.chord_weights)
        .map(|(&[a, b], &w)| {
            let (a, b) = (mv(a), mv(b));
            ([a.min(b), a.max(b)], w)
        })
        .collect();
    chords.sort();

    let mut labels = vec![0; o];
    let mut arc_weights = vec![0; o];
    for p in 0..o {
        labels[mv(p)] = d.labels[p];
        arc_weights[mv(p)] = d.arc_weights[p];
    }
    let first = labels[0];
    for x in labels.iter_mut() {
        *x = (*x + o - first) % o + 1;
    }

    let direction = d.direction.map(|dir| if r % 2 == 1 { dir.reversed() } else { dir });
    let diagram = ChordDiagram {
        order: o,
        matching: chords.iter().map(|c| c.0).collect(),
        direction,
        labels,
        arc_weights,
        chord_weights: chords.iter().map(|c| c.1).collect(),
    };

    let old = FaceCycles::new(o, &d.partners(), &d.chord_at());
    let new = FaceCycles::new(o, &diagram.partners(), &diagram.chord_at());
    let mut trees = vec![WeightedTree::bare(0); g.trees.len()];
    for (f, tree) in g.trees.iter().enumerate().take(old.len()) {
        let first_arc = old.ccw_vertices[f][0];
        trees[new.face_of_arc[mv(first_arc)]] = tree.canonicalized();
    }
    Garden { diagram, trees }
}

fn encode(g: &Garden) -> Vec<u8> {
    let d = &g.diagram;
    let mut out = Vec::with_capacity(16 + d.order * 24);
    out.extend_from_slice(&(d.order as u32).to_be_bytes());
    out.push(match d.direction {
        None => 0,
        Some(Direction::Forward) => 1,
        Some(Direction::Backward) => 2,
    });
    let partner = d.partners();
    let chord_at = d.chord_at();
    for p in 0..d.order {
        out.extend_from_slice(&(d.labels[p] as u32).to_be_bytes());
        out.extend_from_slice(&(partner[p] as u32).to_be_bytes());
        out.extend_from_slice(&d.chord_weights[chord_at[p]].to_be_bytes());
    }
    for w in &d.arc_weights {
        out.extend_from_slice(&w.to_be_bytes());
    }
    for t in &g.trees {
        out.extend_from_slice(&t.canonical_bytes());
    }
    out
}

fn best_rotation(g: &Garden) -> (Vec<u8>, Garden) {
    let rotations = g.diagram.order.max(1);
    (0..rotations)
        .map(|r| {
            let rg = rotate_normalized(g, r);
            (encode(&rg), rg)
        })
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("at least one rotation")
}

/// Minimal encoding over all rotations with the induced label shift.
pub fn canonical_key(g: &Garden) -> Result<CanonicalKey, GardenError> {
    g.ensure_valid()?;
    Ok(CanonicalKey(best_rotation(g).0))
}

/// The representative of `g`'s equivalence class whose encoding is the
/// canonical key. Applying it twice gives the same garden.
pub fn canonical_form(g: &Garden) -> Result<Garden, GardenError> {
    g.ensure_valid()?;
    Ok(best_rotation(g).1)
}

/// Key and representative together, for callers that need both.
pub(crate) fn canonical_pair_unchecked(g: &Garden) -> (CanonicalKey, Garden) {
    let (k, rep) = best_rotation(g);
    (CanonicalKey(k), rep)
}

pub fn are_equivalent(g1: &Garden, g2: &Garden) -> Result<bool, GardenError> {
    Ok(canonical_key(g1)? == canonical_key(g2)?)
}
