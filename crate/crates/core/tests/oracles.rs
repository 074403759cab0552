//! The enumeration and the tree formulas against brute-force references.

mod common;

use std::collections::{BTreeMap, HashMap};

use common::{brute_gardens, brute_trees, noncrossing_matchings, rotation_classes, tree_code};
use gardens::enumerate::{count_components, enumerate_gardens, enumerate_skeletons, enumerate_trees, Budget, EnumerationQuery};
use gardens::hurwitz::{direct_count_tree, hurwitz_tree};
use gardens::canonical_key;

fn check_classes(n: u64) -> BTreeMap<usize, u64> {
    let all = brute_gardens(n);
    let class = rotation_classes(&all);
    let mut by_l: BTreeMap<usize, BTreeMap<usize, ()>> = BTreeMap::new();
    for (g, &c) in all.iter().zip(&class) {
        by_l.entry(g.diagram.chord_count()).or_default().insert(c, ());
    }
    let expected: BTreeMap<usize, u64> = by_l.iter().map(|(&l, cs)| (l, cs.len() as u64)).collect();
    let counts = count_components(n, Budget::default()).unwrap();
    let found: BTreeMap<usize, u64> = counts.by_order.iter().filter(|(_, &c)| c > 0).map(|(&l, &c)| (l, c)).collect();
    assert_eq!(found, expected, "class counts for n = {n}");

    // Canonical keys separate exactly the brute-force classes.
    let mut key_class = HashMap::new();
    for (g, &c) in all.iter().zip(&class) {
        let k = canonical_key(g).unwrap();
        assert_eq!(*key_class.entry(k).or_insert(c), c, "one key for two classes at n = {n}");
    }
    assert_eq!(key_class.len() as u64, counts.total());

    // Every enumerated representative is one of the brute-force gardens.
    let reps = enumerate_gardens(&EnumerationQuery::new(n), Budget::default()).unwrap();
    for g in &reps.gardens {
        assert!(key_class.contains_key(&canonical_key(g).unwrap()));
    }
    expected
}

#[test]
fn classes_match_brute_force_up_to_weight_four() {
    let counts: Vec<Vec<u64>> = (1..=4).map(|n| check_classes(n).into_values().collect()).collect();
    assert_eq!(counts, vec![vec![1], vec![1, 1], vec![2, 2, 2], vec![2, 6, 8, 8]]);
}

#[test]
fn classes_match_brute_force_at_weight_five() {
    let counts = check_classes(5);
    assert_eq!(counts.values().sum::<u64>(), count_components(5, Budget::default()).unwrap().total());
}

#[test]
fn skeletons_match_brute_force() {
    for l in 0..=5 {
        let mut a = enumerate_skeletons(l);
        let mut b = noncrossing_matchings(l);
        a.sort();
        b.sort();
        assert_eq!(a, b, "l = {l}");
    }
}

#[test]
fn trees_match_brute_force() {
    for w in 1..=9u64 {
        let mut expected: Vec<String> = (1..=w)
            .filter(|root| (w - root) % 2 == 0)
            .flat_map(|root| brute_trees(root, (w - root) / 2))
            .map(|t| tree_code(&t))
            .collect();
        expected.sort();
        let mut found: Vec<String> = enumerate_trees(w, None).iter().map(tree_code).collect();
        found.sort();
        assert_eq!(found, expected, "w = {w}");
    }
}

#[test]
fn tree_formula_matches_direct_count() {
    for w in 1..=7u64 {
        for t in enumerate_trees(w, None) {
            assert_eq!(hurwitz_tree(&t).unwrap(), direct_count_tree(&t).unwrap(), "{}", tree_code(&t));
        }
    }
}
