//! Every rotation of a garden, with labels shifted so that position 0 keeps
//! label 1, has the same canonical key.
//!
//! cargo run --example canonical_forms

use gardens::enumerate::{enumerate_gardens, Budget, EnumerationQuery};
use gardens::{canonical_form, canonical_key, faces, ChordDiagram, Garden, WeightedTree};

/// `g` with every position moved by `r` steps counterclockwise.
fn rotate(g: &Garden, r: usize) -> Garden {
    let d = &g.diagram;
    let o = d.order;
    let mv = |p: usize| (p + r) % o;
    let mut chords: Vec<([usize; 2], u64)> = d
        .matching
        .iter()
        .zip(&d.chord_weights)
        .map(|(&[a, b], &w)| ([mv(a).min(mv(b)), mv(a).max(mv(b))], w))
        .collect();
    chords.sort();
    let mut labels = vec![0; o];
    let mut arc_weights = vec![0; o];
    for p in 0..o {
        labels[mv(p)] = d.labels[p];
        arc_weights[mv(p)] = d.arc_weights[p];
    }
    let shift = labels[0] - 1;
    let labels = labels.iter().map(|&x| (x + o - 1 - shift) % o + 1).collect();
    let diagram = ChordDiagram {
        order: o,
        matching: chords.iter().map(|c| c.0).collect(),
        // Arc 0 of the result is arc -r of the original.
        direction: d.direction.map(|dir| if r % 2 == 1 { dir.reversed() } else { dir }),
        labels,
        arc_weights,
        chord_weights: chords.iter().map(|c| c.1).collect(),
    };
    let old = faces(d).unwrap();
    let new = faces(&diagram).unwrap();
    let mut trees = vec![WeightedTree::bare(0); g.trees.len()];
    for (face, tree) in old.iter().zip(&g.trees) {
        let arc = face.arcs().next().unwrap();
        let target = new.iter().position(|f| f.arcs().any(|a| a == mv(arc))).unwrap();
        trees[target] = tree.clone();
    }
    Garden::new(diagram, trees)
}

fn main() {
    let r = enumerate_gardens(&EnumerationQuery::new(4).with_order(4), Budget::default()).unwrap();
    let g = r.gardens.iter().find(|g| g.trees.iter().any(|t| t.len() > 1)).unwrap_or(&r.gardens[0]);
    let key = canonical_key(g).unwrap();
    println!("garden   {}", g.to_json_string());
    println!("key      {}", key.to_hex());
    for s in 1..g.order() {
        let h = rotate(g, s);
        let same = canonical_key(&h).unwrap() == key;
        println!("rotate {s} {} same class: {same}", h.to_json_string());
    }
    println!("canonical form {}", canonical_form(g).unwrap().to_json_string());
    println!("{} classes of weight 4 with two chords", r.len());
}
