use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use super::trees::TreeCatalog;
use super::{enumerate_skeletons, Budget, EnumerationError, EnumerationQuery, Restriction};
use crate::garden::canon::canonical_pair_unchecked;
use crate::garden::diagram::FaceCycles;
use crate::garden::{CanonicalKey, ChordDiagram, Direction, Edge, Garden, Weight, WeightedTree};

/// Canonical representatives, sorted by canonical key.
#[derive(Debug, Clone, Default)]
pub struct EnumerationResult {
    pub gardens: Vec<Garden>,
    pub keys: Vec<CanonicalKey>,
    /// Number of classes per chord count `l`.
    pub counts: BTreeMap<usize, u64>,
}

impl EnumerationResult {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn len(&self) -> usize {
        self.gardens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gardens.is_empty()
    }
}

struct Search {
    n: Weight,
    hyperbolic: bool,
    budget: Budget,
    nodes: AtomicU64,
    catalog: TreeCatalog,
}

type Found = HashMap<CanonicalKey, Garden>;

impl Search {
    fn tick(&self, k: u64) -> Result<(), EnumerationError> {
        let used = self.nodes.fetch_add(k, Ordering::Relaxed) + k;
        if used > self.budget.max_nodes {
            Err(EnumerationError::BudgetExceeded {
                limit: self.budget.max_nodes,
                what: "search nodes",
            })
        } else {
            Ok(())
        }
    }

    fn record(&self, g: Garden, found: &mut Found) -> Result<(), EnumerationError> {
        self.tick(1)?;
        debug_assert!(g.validate().is_ok(), "{}", g.validate());
        debug_assert_eq!(g.total_weight(), Ok(self.n));
        let (key, rep) = canonical_pair_unchecked(&g);
        found.entry(key).or_insert(rep);
        Ok(())
    }

    fn elliptic(&self) -> Result<Found, EnumerationError> {
        let mut found = Found::new();
        for root in (1..=self.n).rev().filter(|r| (self.n - r).is_multiple_of(2)) {
            let inner = (self.n - root) / 2;
            if self.hyperbolic && inner > 0 {
                continue;
            }
            for f in self.catalog.forests(inner) {
                self.record(Garden::imaginary(self.catalog.tree(root, f)), &mut found)?;
            }
        }
        Ok(found)
    }

    fn skeleton_task(&self, matching: &[[usize; 2]], direction: Direction) -> Result<Found, EnumerationError> {
        let l = matching.len();
        let order = 2 * l;
        let base = ChordDiagram::unweighted(matching.to_vec(), direction, (1..=order).collect());
        let cycles = FaceCycles::new(order, &base.partners(), &base.chord_at());
        let faces = cycles.len();
        let ccw: Vec<bool> = (0..faces)
            .map(|f| direction.arc_is_ccw(cycles.ccw_vertices[f][0]))
            .collect();
        let face_arcs: Vec<Vec<usize>> = cycles
            .ccw_edges
            .iter()
            .map(|es| es.iter().filter_map(|e| if let Edge::Arc(i) = e { Some(*i) } else { None }).collect())
            .collect();
        let face_chords: Vec<Vec<usize>> = cycles
            .ccw_edges
            .iter()
            .map(|es| es.iter().filter_map(|e| if let Edge::Chord(k) = e { Some(*k) } else { None }).collect())
            .collect();

        let mut found = Found::new();
        let mut labels = vec![1usize; order];
        for perm in (2..=order).permutations(order - 1) {
            self.tick(1)?;
            labels[1..].copy_from_slice(&perm);
            let descents: Vec<Weight> = (0..faces).map(|f| cycles.descents(f, &labels, ccw[f])).collect();
            let base_total: Weight = descents.iter().sum();
            if base_total > self.n {
                continue;
            }
            let rem = self.n - base_total;
            if self.hyperbolic && rem > 0 {
                continue;
            }
            // Weight units: arcs cost 1, chords and inner tree weight cost 2.
            let costs: Vec<Weight> = std::iter::repeat_n(1, order)
                .chain(std::iter::repeat_n(2, l + faces))
                .collect();
            let mut amounts = vec![0; costs.len()];
            self.distribute(&costs, 0, rem, &mut amounts, &mut |amounts| {
                let arc_weights = amounts[..order].to_vec();
                let chord_weights = amounts[order..order + l].to_vec();
                let inner = &amounts[order + l..];
                let totals: Vec<Weight> = (0..faces)
                    .map(|f| {
                        descents[f]
                            + face_arcs[f].iter().map(|&i| arc_weights[i]).sum::<Weight>()
                            + face_chords[f].iter().map(|&k| chord_weights[k]).sum::<Weight>()
                    })
                    .collect();
                let diagram = ChordDiagram {
                    order,
                    matching: matching.to_vec(),
                    direction: Some(direction),
                    labels: labels.clone(),
                    arc_weights,
                    chord_weights,
                };
                let mut chosen = Vec::with_capacity(faces);
                self.forest_product(&diagram, &totals, inner, &mut chosen, &mut found)
            })?;
        }
        Ok(found)
    }

    fn distribute(
        &self,
        costs: &[Weight],
        idx: usize,
        rem: Weight,
        amounts: &mut Vec<Weight>,
        leaf: &mut dyn FnMut(&[Weight]) -> Result<(), EnumerationError>,
    ) -> Result<(), EnumerationError> {
        if idx == costs.len() {
            return if rem == 0 { leaf(amounts) } else { Ok(()) };
        }
        self.tick(1)?;
        let c = costs[idx];
        for units in 0..=rem / c {
            amounts[idx] = units;
            self.distribute(costs, idx + 1, rem - units * c, amounts, leaf)?;
        }
        amounts[idx] = 0;
        Ok(())
    }

    fn forest_product(
        &self,
        diagram: &ChordDiagram,
        totals: &[Weight],
        inner: &[Weight],
        chosen: &mut Vec<WeightedTree>,
        found: &mut Found,
    ) -> Result<(), EnumerationError> {
        let f = chosen.len();
        if f == totals.len() {
            return self.record(Garden::new(diagram.clone(), chosen.clone()), found);
        }
        for forest in self.catalog.forests(inner[f]) {
            chosen.push(self.catalog.tree(totals[f], forest));
            self.forest_product(diagram, totals, inner, chosen, found)?;
            chosen.pop();
        }
        Ok(())
    }
}

/// One canonical representative per equivalence class of gardens matching
/// the query, sorted by canonical key.
pub fn enumerate_gardens(q: &EnumerationQuery, budget: Budget) -> Result<EnumerationResult, EnumerationError> {
    let ls = q.chord_counts()?;
    let n = q.total_weight;
    let search = Search {
        n,
        hyperbolic: q.restriction == Restriction::Hyperbolic,
        budget,
        nodes: AtomicU64::new(0),
        catalog: TreeCatalog::up_to(n / 2),
    };

    let mut merged: BTreeMap<CanonicalKey, (usize, Garden)> = BTreeMap::new();
    for l in ls {
        let parts: Vec<Found> = if l == 0 {
            vec![search.elliptic()?]
        } else {
            let skeletons = enumerate_skeletons(l);
            let tasks: Vec<(&Vec<[usize; 2]>, Direction)> = skeletons
                .iter()
                .cartesian_product([Direction::Forward, Direction::Backward])
                .collect();
            tasks
                .par_iter()
                .map(|(m, d)| search.skeleton_task(m, *d))
                .collect::<Result<_, _>>()?
        };
        for part in parts {
            for (key, g) in part {
                merged.entry(key).or_insert((l, g));
            }
            if merged.len() as u64 > budget.max_gardens {
                return Err(EnumerationError::BudgetExceeded {
                    limit: budget.max_gardens,
                    what: "gardens",
                });
            }
        }
    }

    let mut result = EnumerationResult::default();
    for l in q.chord_counts()? {
        result.counts.insert(l, 0);
    }
    for (key, (l, g)) in merged {
        *result.counts.entry(l).or_default() += 1;
        result.keys.push(key);
        result.gardens.push(g);
    }
    Ok(result)
}

/// Number of connected components of the space of generic real rational
/// functions of degree `n`, split by the number `l` of chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCounts {
    pub n: Weight,
    pub by_order: BTreeMap<usize, u64>,
}

impl ComponentCounts {
    pub fn total(&self) -> u64 {
        self.by_order.values().sum()
    }
}

pub fn count_components(n: Weight, budget: Budget) -> Result<ComponentCounts, EnumerationError> {
    let r = enumerate_gardens(&EnumerationQuery::new(n), budget)?;
    Ok(ComponentCounts { n, by_order: r.counts })
}

/// Classes of hyperbolic gardens: `l = n - 1`, every face with one descent.
pub fn count_hyperbolic(n: Weight, budget: Budget) -> Result<u64, EnumerationError> {
    if n < 2 {
        return Err(EnumerationError::InvalidQuery("hyperbolic counts need n >= 2".into()));
    }
    let q = EnumerationQuery::new(n).with_restriction(Restriction::Hyperbolic);
    Ok(enumerate_gardens(&q, budget)?.total())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_one_is_a_single_bare_root() {
        let r = enumerate_gardens(&EnumerationQuery::new(1), Budget::default()).unwrap();
        assert_eq!(r.total(), 1);
        assert_eq!(r.gardens[0], Garden::imaginary(WeightedTree::bare(1)));
    }

    #[test]
    fn weight_two() {
        let q = EnumerationQuery::new(2);
        let ell = enumerate_gardens(&q.with_restriction(Restriction::Elliptic), Budget::default()).unwrap();
        assert_eq!(ell.gardens, vec![Garden::imaginary(WeightedTree::bare(2))]);
        let hyp = enumerate_gardens(&q.with_restriction(Restriction::Hyperbolic), Budget::default()).unwrap();
        assert_eq!(hyp.total(), 1);
        assert_eq!(count_components(2, Budget::default()).unwrap().total(), 2);
    }

    #[test]
    fn budget_overflow_is_an_error() {
        let tiny = Budget {
            max_nodes: 10,
            max_gardens: u64::MAX,
        };
        assert!(matches!(
            enumerate_gardens(&EnumerationQuery::new(4), tiny),
            Err(EnumerationError::BudgetExceeded { .. })
        ));
        let few = Budget {
            max_nodes: u64::MAX,
            max_gardens: 1,
        };
        assert!(enumerate_gardens(&EnumerationQuery::new(3), few).is_err());
    }

    #[test]
    fn hyperbolic_needs_two() {
        assert!(count_hyperbolic(1, Budget::default()).is_err());
    }
}
