//! Mostar-type indices built on closer-vertex counts.
//!
//! For a pair `{u, v}` write `n(u,v)` for the number of vertices strictly
//! closer to `u` than to `v`. The pair unbalancedness is
//! `|n(u,v) - n(v,u)|`; summing it over edges gives the Mostar index, over
//! pairs at distance `ell` the `ell`-th Mostar index, and over all unordered
//! pairs the distance-unbalancedness `uB`.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{DistanceTable, Graph};

/// Every index of one connected graph, from a single distance table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    pub order: usize,
    pub size: usize,
    pub diameter: usize,
    pub unbalancedness: u64,
    /// `mostar_by_ell[i]` is the Mostar index at distance `i + 1`.
    pub mostar_by_ell: Vec<u64>,
    /// `None` for the single-vertex graph.
    pub average_unbalancedness: Option<Ratio<u64>>,
}

impl InvariantProfile {
    /// Mostar index at distance `ell`, for `1 <= ell <= diameter`.
    pub fn mostar_ell(&self, ell: usize) -> Option<u64> {
        ell.checked_sub(1)
            .and_then(|i| self.mostar_by_ell.get(i).copied())
    }

    pub fn mostar(&self) -> u64 {
        self.mostar_by_ell.first().copied().unwrap_or(0)
    }

    pub fn is_highly_distance_balanced(&self) -> bool {
        self.unbalancedness == 0
    }

    /// `ell`-distance-balancedness for `ell = 1..=diameter`.
    pub fn balanced_pattern(&self) -> Vec<bool> {
        self.mostar_by_ell.iter().map(|&m| m == 0).collect()
    }
}

/// Distance-unbalancedness summed per distance class, indexed by `ell - 1`.
fn mostar_by_ell(table: &DistanceTable) -> Vec<u64> {
    let n = table.order();
    let mut by_ell = vec![0u64; table.diameter()];
    for u in 0..n {
        for v in u + 1..n {
            let d = table.distance(u, v) as usize;
            by_ell[d - 1] += table.pair_unbalancedness(u, v);
        }
    }
    by_ell
}

/// `uB` straight from a distance table.
pub fn unbalancedness_from_table(table: &DistanceTable) -> u64 {
    let n = table.order();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            total += table.pair_unbalancedness(u, v);
        }
    }
    total
}

pub fn profile(g: &Graph) -> Result<InvariantProfile> {
    let table = DistanceTable::new(g)?;
    let mostar_by_ell = mostar_by_ell(&table);
    let unbalancedness = mostar_by_ell.iter().sum();
    let average_unbalancedness = average_of(unbalancedness, g.order()).ok();
    Ok(InvariantProfile {
        order: g.order(),
        size: g.size(),
        diameter: table.diameter(),
        unbalancedness,
        mostar_by_ell,
        average_unbalancedness,
    })
}

/// Mostar index: pair unbalancedness summed over the edges.
pub fn mostar(g: &Graph) -> Result<u64> {
    let table = DistanceTable::new(g)?;
    Ok(g.edges()
        .map(|(u, v)| table.pair_unbalancedness(u, v))
        .sum())
}

/// Pair unbalancedness summed over pairs at distance exactly `ell`.
///
/// `ell` must lie in `1..=diameter`.
pub fn mostar_ell(g: &Graph, ell: usize) -> Result<u64> {
    let table = DistanceTable::new(g)?;
    let diameter = table.diameter();
    if ell == 0 || ell > diameter {
        return Err(Error::EllOutOfRange { ell, diameter });
    }
    let n = g.order();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            if table.distance(u, v) as usize == ell {
                total += table.pair_unbalancedness(u, v);
            }
        }
    }
    Ok(total)
}

/// `uB`: pair unbalancedness summed over all unordered vertex pairs.
pub fn distance_unbalancedness(g: &Graph) -> Result<u64> {
    Ok(unbalancedness_from_table(&DistanceTable::new(g)?))
}

/// `uB` divided by the number of vertex pairs, reduced.
pub fn average_unbalancedness(g: &Graph) -> Result<Ratio<u64>> {
    if g.order() < 2 {
        return Err(Error::OrderTooSmall(g.order()));
    }
    average_of(distance_unbalancedness(g)?, g.order())
}

fn average_of(unbalancedness: u64, order: usize) -> Result<Ratio<u64>> {
    if order < 2 {
        return Err(Error::OrderTooSmall(order));
    }
    let pairs = (order * (order - 1) / 2) as u64;
    Ok(Ratio::new(unbalancedness, pairs))
}

pub fn is_ell_distance_balanced(g: &Graph, ell: usize) -> Result<bool> {
    Ok(mostar_ell(g, ell)? == 0)
}

pub fn is_highly_distance_balanced(g: &Graph) -> Result<bool> {
    Ok(distance_unbalancedness(g)? == 0)
}
