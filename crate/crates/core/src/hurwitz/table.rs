use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::exact::as_positive_integer;
use super::{hurwitz_garden, HurwitzError};
use crate::enumerate::{enumerate_gardens, Budget, EnumerationQuery};
use crate::garden::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealHurwitzRow {
    /// Number of garden classes of this order.
    pub gardens: u64,
    /// Sum of `H_G` over those classes.
    pub sum: BigInt,
}

/// For fixed degree `n`, keyed by chord count `l`: the number of functions
/// over a generic branch set with `2l` real points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealHurwitzTable {
    pub n: Weight,
    pub rows: BTreeMap<usize, RealHurwitzRow>,
}

pub fn real_hurwitz_table(n: Weight, budget: Budget) -> Result<RealHurwitzTable, HurwitzError> {
    let r = enumerate_gardens(&EnumerationQuery::new(n), budget)?;
    let values: Vec<(usize, BigInt)> = r
        .gardens
        .par_iter()
        .map(|g| {
            let h = hurwitz_garden(g)?;
            let h = as_positive_integer(&h).ok_or_else(|| HurwitzError::Inconsistent(format!("H_G = {h}")))?;
            Ok((g.diagram.chord_count(), h))
        })
        .collect::<Result<_, HurwitzError>>()?;
    let mut rows: BTreeMap<usize, RealHurwitzRow> = r
        .counts
        .iter()
        .map(|(&l, &gardens)| (l, RealHurwitzRow { gardens, sum: BigInt::from(0) }))
        .collect();
    for (l, h) in values {
        rows.get_mut(&l).expect("row per order").sum += h;
    }
    Ok(RealHurwitzTable { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        let one = real_hurwitz_table(1, Budget::default()).unwrap();
        assert_eq!(one.rows[&0].sum, BigInt::from(1));
        let three = real_hurwitz_table(3, Budget::default()).unwrap();
        assert_eq!(three.rows[&0], RealHurwitzRow { gardens: 2, sum: BigInt::from(2) });
    }
}
