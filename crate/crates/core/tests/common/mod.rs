//! Brute-force reference implementations shared by the integration tests.
//! They avoid the library's enumeration and canonicalization code and use
//! only the data model: validation, faces and total weight.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use gardens::{faces, ChordDiagram, Direction, Garden, WeightedTree};
use itertools::Itertools;

/// Unordered-tree encoding: weight, then the sorted encodings of the children.
pub fn tree_code(t: &WeightedTree) -> String {
    fn go(t: &WeightedTree, children: &[Vec<usize>], v: usize) -> String {
        let mut parts: Vec<String> = children[v].iter().map(|&c| go(t, children, c)).collect();
        parts.sort();
        format!("{}({})", t.nodes[v].weight, parts.join(","))
    }
    go(t, &t.children(), 0)
}

/// Every rooted tree whose non-root nodes have positive weights summing to
/// `inner`, with root weight `root`, one per unordered shape.
pub fn brute_trees(root: u64, inner: u64) -> Vec<WeightedTree> {
    let mut seen = BTreeMap::new();
    for k in 0..=inner as usize {
        let parent_choices: Vec<Vec<usize>> = (1..=k).map(|i| (0..i).collect()).collect();
        let parents: Vec<Vec<usize>> = if k == 0 {
            vec![Vec::new()]
        } else {
            parent_choices.into_iter().multi_cartesian_product().collect()
        };
        for weights in compositions(inner, k) {
            for ps in &parents {
                let mut spec = vec![(None, root)];
                spec.extend(ps.iter().zip(&weights).map(|(&p, &w)| (Some(p), w)));
                let t = WeightedTree::from_parents(&spec);
                seen.entry(tree_code(&t)).or_insert(t);
            }
        }
    }
    seen.into_values().collect()
}

/// Ordered ways to write `total` as `k` positive parts.
pub fn compositions(total: u64, k: usize) -> Vec<Vec<u64>> {
    if k == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (1..=total)
        .flat_map(|first| {
            compositions(total - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Nonnegative vectors of length `k` with `sum(cost * x) <= budget`.
fn bounded_vectors(k: usize, cost: u64, budget: u64) -> Vec<Vec<u64>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (0..=budget / cost)
        .flat_map(|x| {
            bounded_vectors(k - 1, cost, budget - cost * x).into_iter().map(move |mut rest| {
                rest.insert(0, x);
                rest
            })
        })
        .collect()
}

/// Noncrossing perfect matchings of `2l` points, by checking every perfect
/// matching.
pub fn noncrossing_matchings(l: usize) -> Vec<Vec<[usize; 2]>> {
    fn all(points: &[usize]) -> Vec<Vec<[usize; 2]>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let a = points[0];
        let mut out = Vec::new();
        for i in 1..points.len() {
            let rest: Vec<usize> = points[1..].iter().copied().filter(|&p| p != points[i]).collect();
            for mut m in all(&rest) {
                m.push([a, points[i]]);
                out.push(m);
            }
        }
        out
    }
    let crosses = |p: [usize; 2], q: [usize; 2]| (p[0] < q[0] && q[0] < p[1]) != (p[0] < q[1] && q[1] < p[1]);
    let points: Vec<usize> = (0..2 * l).collect();
    all(&points)
        .into_iter()
        .filter(|m| m.iter().tuple_combinations().all(|(&p, &q)| !crosses(p, q)))
        .map(|mut m| {
            m.sort();
            m
        })
        .collect()
}

/// `g` with every position moved `r` steps counterclockwise and labels
/// shifted cyclically so that position 0 carries label 1.
pub fn rotate(g: &Garden, r: usize) -> Garden {
    let d = &g.diagram;
    let o = d.order;
    if o == 0 {
        return g.clone();
    }
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
    // Arc 0 of the result is arc -r of the original.
    let ccw0 = d.direction.expect("direction").arc_is_ccw((o - r % o) % o);
    let diagram = ChordDiagram {
        order: o,
        matching: chords.iter().map(|c| c.0).collect(),
        direction: Some(if ccw0 { Direction::Forward } else { Direction::Backward }),
        labels,
        arc_weights,
        chord_weights: chords.iter().map(|c| c.1).collect(),
    };
    let old = faces(d).expect("valid diagram");
    let new = faces(&diagram).expect("valid diagram");
    let mut trees = vec![WeightedTree::bare(0); g.trees.len()];
    for (face, tree) in old.iter().zip(&g.trees) {
        let arc = face.arcs().next().expect("every face has an arc");
        let target = new.iter().position(|f| f.arcs().any(|a| a == mv(arc))).expect("arc has a face");
        trees[target] = tree.clone();
    }
    Garden::new(diagram, trees)
}

/// Structural identity of a garden, ignoring sibling order in trees.
pub fn code(g: &Garden) -> String {
    let d = &g.diagram;
    let trees: Vec<String> = g.trees.iter().map(tree_code).collect();
    format!(
        "{:?}|{:?}|{:?}|{:?}|{:?}|{}",
        d.matching,
        d.direction,
        d.labels,
        d.arc_weights,
        d.chord_weights,
        trees.join(";")
    )
}

/// Every valid garden of total weight `n` with label 1 at position 0.
pub fn brute_gardens(n: u64) -> Vec<Garden> {
    let mut out = Vec::new();
    for l in 0..n as usize {
        let order = 2 * l;
        if l == 0 {
            for t in (1..=n).flat_map(|root| {
                if (n - root).is_multiple_of(2) {
                    brute_trees(root, (n - root) / 2)
                } else {
                    Vec::new()
                }
            }) {
                let g = Garden::imaginary(t);
                if g.validate().is_ok() {
                    out.push(g);
                }
            }
            continue;
        }
        for matching in noncrossing_matchings(l) {
            for rest in (2..=order).permutations(order - 1) {
                let mut labels = vec![1];
                labels.extend(rest);
                for dir in [Direction::Forward, Direction::Backward] {
                    let bare = ChordDiagram::unweighted(matching.clone(), dir, labels.clone());
                    let base: u64 = faces(&bare).expect("valid").iter().map(|f| f.total).sum();
                    if base > n {
                        continue;
                    }
                    let r = n - base;
                    for arcs in bounded_vectors(order, 1, r) {
                        let used: u64 = arcs.iter().sum();
                        for chords in bounded_vectors(l, 2, r - used) {
                            let left = r - used - 2 * chords.iter().sum::<u64>();
                            if left % 2 == 1 {
                                continue;
                            }
                            let mut d = bare.clone();
                            d.arc_weights = arcs.clone();
                            d.chord_weights = chords.clone();
                            let fs = faces(&d).expect("valid");
                            for split in bounded_vectors(fs.len(), 1, left / 2)
                                .into_iter()
                                .filter(|s| s.iter().sum::<u64>() == left / 2)
                            {
                                let options: Vec<Vec<WeightedTree>> =
                                    fs.iter().zip(&split).map(|(f, &s)| brute_trees(f.total, s)).collect();
                                for trees in options.into_iter().multi_cartesian_product() {
                                    let g = Garden::new(d.clone(), trees);
                                    if g.validate().is_ok() && g.total_weight() == Ok(n) {
                                        out.push(g);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Classes of `brute_gardens(n)` under rotation, by union-find. Returns the
/// class index of each garden.
pub fn rotation_classes(gardens: &[Garden]) -> Vec<usize> {
    let index: HashMap<String, usize> = gardens.iter().enumerate().map(|(i, g)| (code(g), i)).collect();
    let mut parent: Vec<usize> = (0..gardens.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for (i, g) in gardens.iter().enumerate() {
        if g.order() == 0 {
            continue;
        }
        let j = *index
            .get(&code(&rotate(g, 1)))
            .unwrap_or_else(|| panic!("rotation leaves the candidate set: {}", g.to_json_string()));
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        parent[a] = b;
    }
    let roots: Vec<usize> = (0..gardens.len()).map(|i| find(&mut parent, i)).collect();
    let ids: BTreeSet<usize> = roots.iter().copied().collect();
    let renumber: HashMap<usize, usize> = ids.into_iter().enumerate().map(|(k, r)| (r, k)).collect();
    roots.iter().map(|r| renumber[r]).collect()
}
