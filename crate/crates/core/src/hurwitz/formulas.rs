use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::exact::{as_positive_integer, factorial, int, multiset_symmetry, ratio, rpow};
use super::HurwitzError;
use crate::garden::{pants_collection, Garden, Weight, WeightedTree};

/// Hurwitz number of a genus-0 pants with boundary multiplicities `weights`:
/// `m^(k-3) (m+k-2)! prod m_i^m_i / (prod m_i! * s)` with `m` the degree and
/// `s` the multiset symmetry. In degree 2 with one or two boundaries the
/// formula would give 1/2 while the true count is 1; those cases return 1.
pub fn hurwitz_pants(weights: &[Weight]) -> Result<BigRational, HurwitzError> {
    if weights.is_empty() {
        return Err(HurwitzError::EmptyBoundary);
    }
    if weights.contains(&0) {
        return Err(HurwitzError::ZeroWeight);
    }
    let m = weights
        .iter()
        .try_fold(0u64, |acc, &w| acc.checked_add(w))
        .ok_or(HurwitzError::ZeroWeight)?;
    let k = weights.len() as u64;
    if m == 2 && k <= 2 {
        return Ok(BigRational::one());
    }
    let num: BigInt = factorial(m + k - 2) * weights.iter().map(|&w| num_traits::pow(int(w), w as usize)).product::<BigInt>();
    let den: BigInt = weights.iter().map(|&w| factorial(w)).product::<BigInt>() * multiset_symmetry(weights);
    Ok(rpow(m, k as i64 - 3) * BigRational::new(num, den))
}

/// Per-node quantities entering the tree formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeStats {
    pub weight: Weight,
    /// Number of children `c_i`.
    pub degree: usize,
    /// Node weight plus children's weights: the degree of the node's pants.
    pub modified_weight: Weight,
    /// Automorphisms of the multiset `{w_i, children's weights}`.
    pub symmetry: BigInt,
    /// Weights of the children, in node order.
    pub child_weights: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStats {
    pub nodes: Vec<NodeStats>,
    /// Sum of modified weights, equal to `w_0 + 2 * (inner weights)`.
    pub total_weight: Weight,
    /// Number of nodes with modified weight 2.
    pub e: u64,
}

impl TreeStats {
    pub fn of(t: &WeightedTree) -> Result<Self, HurwitzError> {
        if let Some(p) = t.structure_problem() {
            return Err(HurwitzError::InvalidTree(p));
        }
        if t.nodes.iter().any(|n| n.weight == 0) {
            return Err(HurwitzError::InvalidTree("node weights must be positive".into()));
        }
        let children = t.children();
        let nodes: Vec<NodeStats> = t
            .nodes
            .iter()
            .zip(&children)
            .map(|(n, ch)| {
                let child_weights: Vec<Weight> = ch.iter().map(|&c| t.nodes[c].weight).collect();
                let mut multiset = child_weights.clone();
                multiset.push(n.weight);
                NodeStats {
                    weight: n.weight,
                    degree: ch.len(),
                    modified_weight: multiset.iter().sum(),
                    symmetry: multiset_symmetry(&multiset),
                    child_weights,
                }
            })
            .collect();
        let total_weight = nodes.iter().map(|s| s.modified_weight).sum();
        let e = nodes.iter().filter(|s| s.modified_weight == 2).count() as u64;
        Ok(TreeStats { nodes, total_weight, e })
    }

    /// `w_i^(2 w_i) ŵ_i^(c_i - 2) / ((w_i!)^2 s_i)` multiplied over all nodes.
    fn node_product(&self) -> BigRational {
        self.nodes
            .iter()
            .map(|s| {
                let w = s.weight;
                let num = num_traits::pow(int(w), 2 * w as usize);
                let f = factorial(w);
                rpow(s.modified_weight, s.degree as i64 - 2) * BigRational::new(num, &f * &f * &s.symmetry)
            })
            .product()
    }

    fn root_factor(&self) -> BigRational {
        let w0 = self.nodes[0].weight;
        BigRational::new(factorial(w0), num_traits::pow(int(w0), w0 as usize))
    }
}

fn positive_integer(x: BigRational, what: &str) -> Result<BigRational, HurwitzError> {
    match as_positive_integer(&x) {
        Some(_) => Ok(x),
        None => Err(HurwitzError::Inconsistent(format!("{what} = {x} is not a positive integer"))),
    }
}

/// `H_T = (w_T-1)! w_0! 2^e_T / w_0^w_0 * prod_i w_i^(2w_i) ŵ_i^(c_i-2) / ((w_i!)^2 s_i)`.
pub fn hurwitz_tree(t: &WeightedTree) -> Result<BigRational, HurwitzError> {
    let s = TreeStats::of(t)?;
    let h = ratio(factorial(s.total_weight - 1) << s.e) * s.root_factor() * s.node_product();
    positive_integer(h, "H_T")
}

/// Branch points distributed over the pants of `t`, times the pants numbers.
pub fn direct_count_tree(t: &WeightedTree) -> Result<BigRational, HurwitzError> {
    let s = TreeStats::of(t)?;
    let mut den = int(1);
    let mut pants = BigRational::one();
    for node in &s.nodes {
        den *= factorial(node.modified_weight + node.degree as u64 - 1);
        let mut boundary = vec![node.weight];
        boundary.extend_from_slice(&node.child_weights);
        pants *= hurwitz_pants(&boundary)?;
    }
    Ok(BigRational::new(factorial(s.total_weight - 1), den) * pants)
}

/// `H_G = (w-l-1)! prod_i H_{T_i} / (w_{T_i}-1)!`, cross-checked against the
/// expanded product over roots and nodes.
pub fn hurwitz_garden(g: &Garden) -> Result<BigRational, HurwitzError> {
    g.ensure_valid()?;
    let w = g.total_weight()?;
    let l = g.diagram.chord_count() as u64;
    let stats: Vec<TreeStats> = g.trees.iter().map(TreeStats::of).collect::<Result<_, _>>()?;

    let mut by_trees = ratio(factorial(w - l - 1));
    for (t, s) in g.trees.iter().zip(&stats) {
        by_trees *= hurwitz_tree(t)? / ratio(factorial(s.total_weight - 1));
    }

    let e: u64 = stats.iter().map(|s| s.e).sum();
    let mut expanded = ratio(factorial(w - l - 1) << e);
    for s in &stats {
        expanded *= s.root_factor() * s.node_product();
    }

    if by_trees != expanded {
        return Err(HurwitzError::Inconsistent(format!(
            "H_G forms disagree: {by_trees} vs {expanded}"
        )));
    }
    positive_integer(by_trees, "H_G")
}

/// `(n-l-1)! / prod_P r_P! * prod_P h(P)` over the pants collection.
pub fn direct_count_garden(g: &Garden) -> Result<BigRational, HurwitzError> {
    let pc = pants_collection(g)?;
    let n = g.total_weight()?;
    let l = g.diagram.chord_count() as u64;
    let mut den = int(1);
    let mut product = BigRational::one();
    for p in &pc.pants {
        den *= factorial(p.ramification_count());
        product *= hurwitz_pants(&p.boundary_weights())?;
    }
    Ok(BigRational::new(factorial(n - l - 1), den) * product)
}
