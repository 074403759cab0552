use super::{GardenError, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TreeNode {
    pub parent: Option<usize>,
    pub weight: Weight,
}

/// Rooted tree with positive node weights and unordered children.
///
/// Node 0 is the root. Children are unordered: two trees that differ only in
/// the order of siblings have the same [`WeightedTree::canonical_bytes`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedTree {
    pub nodes: Vec<TreeNode>,
}

impl WeightedTree {
    pub fn bare(root_weight: Weight) -> Self {
        WeightedTree {
            nodes: vec![TreeNode {
                parent: None,
                weight: root_weight,
            }],
        }
    }

    /// Builds a tree from `(parent, weight)` pairs, node `i` at index `i`.
    pub fn from_parents(spec: &[(Option<usize>, Weight)]) -> Self {
        WeightedTree {
            nodes: spec
                .iter()
                .map(|&(parent, weight)| TreeNode { parent, weight })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root_weight(&self) -> Weight {
        self.nodes[0].weight
    }

    pub fn is_bare(&self) -> bool {
        self.nodes.len() == 1
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            if let Some(p) = node.parent {
                if p < self.nodes.len() {
                    children[p].push(i);
                }
            }
        }
        children
    }

    /// Depth of every node (root at 0). Assumes a structurally valid tree.
    pub fn depths(&self) -> Vec<usize> {
        let children = self.children();
        let mut depth = vec![0; self.nodes.len()];
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for &c in &children[v] {
                depth[c] = depth[v] + 1;
                stack.push(c);
            }
        }
        depth
    }

    /// Sum of inner (non-root) node weights.
    pub fn inner_weight(&self) -> Result<Weight, GardenError> {
        self.nodes[1..]
            .iter()
            .try_fold(0u64, |acc, n| acc.checked_add(n.weight).ok_or(GardenError::Overflow))
    }

    /// Contribution to the total weight of a garden: root once, inner nodes twice.
    pub fn garden_weight(&self) -> Result<Weight, GardenError> {
        let inner = self.inner_weight()?;
        inner
            .checked_mul(2)
            .and_then(|x| x.checked_add(self.root_weight()))
            .ok_or(GardenError::Overflow)
    }

    /// Reason the parent links do not form a tree rooted at node 0, if any.
    pub fn structure_problem(&self) -> Option<String> {
        if self.nodes.is_empty() {
            return Some("tree has no nodes".into());
        }
        if self.nodes[0].parent.is_some() {
            return Some("node 0 must be the root".into());
        }
        for (i, node) in self.nodes.iter().enumerate().skip(1) {
            match node.parent {
                None => return Some(format!("node {i} has no parent but is not the root")),
                Some(p) if p >= self.nodes.len() => {
                    return Some(format!("node {i} has out-of-range parent {p}"))
                }
                Some(p) if p == i => return Some(format!("node {i} is its own parent")),
                _ => {}
            }
        }
        let reached = {
            let children = self.children();
            let mut seen = vec![false; self.nodes.len()];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for &c in &children[v] {
                    if !seen[c] {
                        seen[c] = true;
                        stack.push(c);
                    }
                }
            }
            seen
        };
        if let Some(i) = reached.iter().position(|r| !r) {
            return Some(format!("node {i} is not connected to the root"));
        }
        None
    }

    /// Self-delimiting encoding with children sorted by their own encoding.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let children = self.children();
        let mut out = Vec::new();
        encode_subtree(self, &children, 0, &mut out);
        out
    }

    /// The same tree with nodes renumbered in preorder, siblings sorted by
    /// canonical encoding. Equal for trees that differ only in sibling order.
    pub fn canonicalized(&self) -> Self {
        let children = self.children();
        let mut nodes = Vec::with_capacity(self.nodes.len());
        rebuild(self, &children, 0, None, &mut nodes);
        WeightedTree { nodes }
    }
}

fn subtree_bytes(t: &WeightedTree, children: &[Vec<usize>], v: usize) -> Vec<u8> {
    let mut out = Vec::new();
    encode_subtree(t, children, v, &mut out);
    out
}

fn encode_subtree(t: &WeightedTree, children: &[Vec<usize>], v: usize, out: &mut Vec<u8>) {
    out.extend_from_slice(&t.nodes[v].weight.to_be_bytes());
    out.extend_from_slice(&(children[v].len() as u32).to_be_bytes());
    let mut encoded: Vec<Vec<u8>> = children[v]
        .iter()
        .map(|&c| subtree_bytes(t, children, c))
        .collect();
    encoded.sort();
    for e in encoded {
        out.extend_from_slice(&e);
    }
}

fn rebuild(
    t: &WeightedTree,
    children: &[Vec<usize>],
    v: usize,
    parent: Option<usize>,
    nodes: &mut Vec<TreeNode>,
) {
    let id = nodes.len();
    nodes.push(TreeNode {
        parent,
        weight: t.nodes[v].weight,
    });
    let mut kids: Vec<(Vec<u8>, usize)> = children[v]
        .iter()
        .map(|&c| (subtree_bytes(t, children, c), c))
        .collect();
    kids.sort();
    for (_, c) in kids {
        rebuild(t, children, c, Some(id), nodes);
    }
}
