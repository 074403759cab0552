use crate::garden::{TreeNode, Weight, WeightedTree};

/// Unordered rooted tree shape: a root weight and a multiset of subtrees,
/// stored as nonincreasing catalog ids.
#[derive(Debug, Clone)]
struct Shape {
    weight: Weight,
    children: Vec<usize>,
    size: Weight,
}

/// Catalog of all weighted rooted trees up to a total node weight, generated
/// once in canonical form so that forests are multisets of catalog ids.
#[derive(Debug, Clone)]
pub(crate) struct TreeCatalog {
    shapes: Vec<Shape>,
    /// Forests by total node weight, each a nonincreasing list of shape ids.
    forests: Vec<Vec<Vec<usize>>>,
}

impl TreeCatalog {
    pub fn up_to(max_size: Weight) -> Self {
        let mut cat = TreeCatalog {
            shapes: Vec::new(),
            forests: vec![vec![Vec::new()]],
        };
        for size in 1..=max_size {
            // Trees of this size use forests of strictly smaller sizes.
            for w in 1..=size {
                let below = cat.forests[(size - w) as usize].clone();
                for f in below {
                    cat.shapes.push(Shape {
                        weight: w,
                        children: f,
                        size,
                    });
                }
            }
            let forests = cat.forests_of(size, usize::MAX);
            cat.forests.push(forests);
        }
        cat
    }

    fn forests_of(&self, total: Weight, bound: usize) -> Vec<Vec<usize>> {
        if total == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (id, s) in self.shapes.iter().enumerate() {
            if id > bound {
                break;
            }
            if s.size > total {
                continue;
            }
            for mut rest in self.forests_of(total - s.size, id) {
                rest.insert(0, id);
                out.push(rest);
            }
        }
        out
    }

    /// Forests whose node weights sum to `total`.
    pub fn forests(&self, total: Weight) -> &[Vec<usize>] {
        &self.forests[total as usize]
    }

    /// Tree with the given root weight and the given forest below the root.
    pub fn tree(&self, root_weight: Weight, forest: &[usize]) -> WeightedTree {
        let mut nodes = vec![TreeNode {
            parent: None,
            weight: root_weight,
        }];
        let mut stack: Vec<(usize, usize)> = forest.iter().rev().map(|&s| (s, 0)).collect();
        while let Some((shape, parent)) = stack.pop() {
            let id = nodes.len();
            let s = &self.shapes[shape];
            nodes.push(TreeNode {
                parent: Some(parent),
                weight: s.weight,
            });
            stack.extend(s.children.iter().rev().map(|&c| (c, id)));
        }
        WeightedTree { nodes }
    }
}

/// All weighted rooted trees with `root + 2 * (sum of inner weights) = weight`,
/// optionally with a fixed root weight. Duplicate-free up to sibling order.
pub fn enumerate_trees(weight: Weight, root_weight: Option<Weight>) -> Vec<WeightedTree> {
    if weight == 0 {
        return Vec::new();
    }
    let roots: Vec<Weight> = match root_weight {
        Some(r) if r >= 1 && r <= weight && (weight - r).is_multiple_of(2) => vec![r],
        Some(_) => Vec::new(),
        None => (1..=weight).rev().filter(|r| (weight - r).is_multiple_of(2)).collect(),
    };
    let catalog = TreeCatalog::up_to((weight - 1) / 2);
    let mut out = Vec::new();
    for r in roots {
        for f in catalog.forests((weight - r) / 2) {
            out.push(catalog.tree(r, f));
        }
    }
    out
}

/// Number of trees counted by [`enumerate_trees`] with unconstrained root.
pub fn count_elliptic(n: Weight) -> u64 {
    enumerate_trees(n, None).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_weights() {
        assert_eq!(enumerate_trees(1, None).len(), 1);
        let three = enumerate_trees(3, None);
        assert_eq!(three.len(), 2);
        assert_eq!(three[0], WeightedTree::bare(3));
        assert_eq!(three[1], WeightedTree::from_parents(&[(None, 1), (Some(0), 1)]));
        assert_eq!(enumerate_trees(2, Some(2)), vec![WeightedTree::bare(2)]);
        assert!(enumerate_trees(2, Some(1)).is_empty());
    }

    #[test]
    fn duplicate_free_and_weight_exact() {
        for n in 1..=11 {
            let trees = enumerate_trees(n, None);
            let keys: HashSet<_> = trees.iter().map(|t| t.canonical_bytes()).collect();
            assert_eq!(keys.len(), trees.len());
            for t in &trees {
                assert!(t.structure_problem().is_none());
                assert_eq!(t.garden_weight().unwrap(), n);
            }
        }
    }

    #[test]
    fn forest_counts() {
        // Weighted rooted forests by total weight: 1, 1, 3, 8, 24.
        let cat = TreeCatalog::up_to(4);
        let counts: Vec<usize> = (0..=4).map(|s| cat.forests(s).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 8, 24]);
    }
}
