//! Extremal statistics over exhaustive streams of trees and graphs.
//!
//! "Second smallest" and "second largest" are distinct-value order
//! statistics: the least value strictly above the minimum, and the
//! greatest value strictly below the maximum. Attainers are reported as
//! sorted canonical forms.
//!
//! Per-graph work runs on the rayon pool in chunks; accumulation happens in
//! stream order, so results do not depend on the number of workers.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::families::{self, FamilyDescriptor};
use crate::graph::{DistanceTable, Graph};
use crate::invariants::unbalancedness_from_table;
use crate::partitions::partitions;
use crate::trees::enumerate_trees;

const CHUNK: usize = 4096;

fn unbalancedness(g: &Graph) -> Result<u64> {
    Ok(unbalancedness_from_table(&DistanceTable::new(g)?))
}

/// Evaluates `uB` chunk-wise in parallel and hands `(graph, uB)` to `sink`
/// in stream order.
fn for_each_scored<I, F>(stream: I, mut sink: F) -> Result<()>
where
    I: IntoIterator<Item = Result<Graph>>,
    F: FnMut(Graph, u64) -> Result<()>,
{
    let mut stream = stream.into_iter();
    let mut chunk = Vec::with_capacity(CHUNK);
    loop {
        chunk.clear();
        for item in stream.by_ref().take(CHUNK) {
            chunk.push(item?);
        }
        if chunk.is_empty() {
            return Ok(());
        }
        let scores = chunk
            .par_iter()
            .map(unbalancedness)
            .collect::<Result<Vec<u64>>>()?;
        for (g, score) in chunk.drain(..).zip(scores) {
            sink(g, score)?;
        }
    }
}

/// The `keep` smallest (or largest) distinct values seen, with every graph
/// attaining them.
#[derive(Clone, Debug)]
struct Extremes {
    keep: usize,
    largest: bool,
    buckets: Vec<(u64, Vec<Graph>)>,
}

impl Extremes {
    fn new(keep: usize, largest: bool) -> Self {
        Extremes {
            keep,
            largest,
            buckets: Vec::with_capacity(keep + 1),
        }
    }

    fn before(&self, a: u64, b: u64) -> bool {
        if self.largest {
            a > b
        } else {
            a < b
        }
    }

    fn offer(&mut self, value: u64, g: &Graph) {
        let pos = self
            .buckets
            .iter()
            .position(|(v, _)| !self.before(*v, value));
        match pos {
            Some(i) if self.buckets[i].0 == value => self.buckets[i].1.push(g.clone()),
            Some(i) => {
                self.buckets.insert(i, (value, vec![g.clone()]));
                self.buckets.truncate(self.keep);
            }
            None if self.buckets.len() < self.keep => self.buckets.push((value, vec![g.clone()])),
            None => {}
        }
    }

    fn bucket(&self, rank: usize) -> Option<(u64, &[Graph])> {
        self.buckets.get(rank).map(|(v, gs)| (*v, gs.as_slice()))
    }
}

fn sorted_forms(graphs: &[Graph]) -> Result<Vec<CanonicalForm>> {
    let mut forms = graphs
        .iter()
        .map(canonical_form)
        .collect::<Result<Vec<_>>>()?;
    forms.sort();
    Ok(forms)
}

/// Extremal statistics of `uB` over one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub order: usize,
    pub min: u64,
    pub min_second: Option<u64>,
    pub max_second: Option<u64>,
    pub max: u64,
    /// Number of isomorphism classes scanned.
    pub total: u64,
    pub min_attainers: Vec<CanonicalForm>,
    pub min_second_attainers: Vec<CanonicalForm>,
    pub max_second_attainers: Vec<CanonicalForm>,
    pub max_attainers: Vec<CanonicalForm>,
    /// Multiplicity of every value of `uB` seen.
    pub histogram: BTreeMap<u64, u64>,
}

impl SurveyRow {
    pub fn min_count(&self) -> usize {
        self.min_attainers.len()
    }

    pub fn max_count(&self) -> usize {
        self.max_attainers.len()
    }
}

/// Accumulates a [`SurveyRow`] over a stream of graphs of one order.
#[derive(Clone, Debug)]
pub struct SurveyAccumulator {
    order: usize,
    low: Extremes,
    high: Extremes,
    histogram: BTreeMap<u64, u64>,
}

impl SurveyAccumulator {
    pub fn new(order: usize) -> Self {
        SurveyAccumulator {
            order,
            low: Extremes::new(2, false),
            high: Extremes::new(2, true),
            histogram: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, g: &Graph, value: u64) -> Result<()> {
        if g.order() != self.order {
            return Err(Error::bad_params(format!(
                "survey of order {} received a graph of order {}",
                self.order,
                g.order()
            )));
        }
        self.low.offer(value, g);
        self.high.offer(value, g);
        *self.histogram.entry(value).or_default() += 1;
        Ok(())
    }

    pub fn finish(self) -> Result<SurveyRow> {
        let (min, min_graphs) = self.low.bucket(0).ok_or(Error::EmptyStream)?;
        let (max, max_graphs) = self.high.bucket(0).ok_or(Error::EmptyStream)?;
        let second_low = self.low.bucket(1);
        let second_high = self.high.bucket(1);
        Ok(SurveyRow {
            order: self.order,
            min,
            min_second: second_low.map(|(v, _)| v),
            max_second: second_high.map(|(v, _)| v),
            max,
            total: self.histogram.values().sum(),
            min_attainers: sorted_forms(min_graphs)?,
            min_second_attainers: sorted_forms(second_low.map_or(&[], |(_, g)| g))?,
            max_second_attainers: sorted_forms(second_high.map_or(&[], |(_, g)| g))?,
            max_attainers: sorted_forms(max_graphs)?,
            histogram: self.histogram,
        })
    }
}

/// Statistics of `uB` over a whole stream of graphs of the given order.
pub fn survey<I>(order: usize, stream: I) -> Result<SurveyRow>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let mut acc = SurveyAccumulator::new(order);
    for_each_scored(stream, |g, value| acc.add(&g, value))?;
    acc.finish()
}

/// Statistics of `uB` over all trees of order `n`.
pub fn tree_survey(n: usize) -> Result<SurveyRow> {
    if n < 3 {
        return Err(Error::bad_params("tree survey needs order >= 3"));
    }
    survey(n, enumerate_trees(n)?.map(Ok))
}

/// Outcome of a finite conjecture check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds { value: u64 },
    Counterexample { form: CanonicalForm, value: u64 },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }
}

fn unique_attainer_verdict(
    expected: &Graph,
    attainers: &[CanonicalForm],
    value: u64,
) -> Result<Verdict> {
    let expected = canonical_form(expected)?;
    match attainers.iter().find(|f| **f != expected) {
        Some(other) => Ok(Verdict::Counterexample {
            form: other.clone(),
            value,
        }),
        None if attainers.contains(&expected) => Ok(Verdict::Holds { value }),
        None => Err(Error::EmptyStream),
    }
}

fn check_order(n: usize) -> Result<()> {
    if n < 5 {
        return Err(Error::bad_params("conjecture checks need order >= 5"));
    }
    Ok(())
}

/// Is the star the unique tree of order `row.order` minimising `uB`?
pub fn min_star_verdict(row: &SurveyRow) -> Result<Verdict> {
    check_order(row.order)?;
    let star = families::star(row.order - 1)?;
    unique_attainer_verdict(&star, &row.min_attainers, row.min)
}

/// Is the balanced (subdivided) merged star the unique tree attaining the
/// second smallest `uB`?
pub fn second_min_verdict(row: &SurveyRow) -> Result<Verdict> {
    check_order(row.order)?;
    let n = row.order;
    let expected = if n.is_multiple_of(2) {
        families::merged_star((n - 2) / 2, (n - 2) / 2)?
    } else {
        families::subdivided_merged_star((n - 3) / 2, (n - 3) / 2)?
    };
    let value = row.min_second.ok_or(Error::EmptyStream)?;
    unique_attainer_verdict(&expected, &row.min_second_attainers, value)
}

pub fn check_conjecture_min_star(n: usize) -> Result<Verdict> {
    check_order(n)?;
    min_star_verdict(&tree_survey(n)?)
}

pub fn check_conjecture_second_min(n: usize) -> Result<Verdict> {
    check_order(n)?;
    second_min_verdict(&tree_survey(n)?)
}

/// Leg orders of `g` if it is a spider (one vertex of valence at least 3,
/// every other vertex of valence at most 2, and a tree), sorted descending.
pub fn spider_legs(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_tree() {
        return None;
    }
    let mut hubs = (0..g.order()).filter(|&v| g.degree(v) >= 3);
    let center = hubs.next()?;
    if hubs.next().is_some() {
        return None;
    }
    let mut legs: Vec<usize> = g
        .neighbors(center)
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    legs.sort_unstable_by(|a, b| b.cmp(a));
    Some(legs)
}

/// A tree attaining the maximum, with its legs when it is a spider.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxTree {
    pub form: CanonicalForm,
    pub spider_legs: Option<Vec<usize>>,
}

pub fn max_classification(row: &SurveyRow) -> Vec<MaxTree> {
    row.max_attainers
        .iter()
        .map(|form| MaxTree {
            form: form.clone(),
            spider_legs: spider_legs(&form.graph()),
        })
        .collect()
}

/// Every tree of order `n` with the largest `uB`.
pub fn max_tree_classification(n: usize) -> Result<Vec<MaxTree>> {
    if n < 5 {
        return Err(Error::bad_params(
            "max tree classification needs order >= 5",
        ));
    }
    Ok(max_classification(&tree_survey(n)?))
}

/// Spiders of one order with the largest `uB` among spiders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiderMax {
    pub order: usize,
    pub value: u64,
    /// Leg sequences (descending), in reverse lexicographic order.
    pub best: Vec<Vec<usize>>,
}

/// Scans every leg multiset with at least three legs.
pub fn spider_max_survey(n: usize) -> Result<SpiderMax> {
    if n < 5 {
        return Err(Error::bad_params("spider survey needs order >= 5"));
    }
    let candidates: Vec<Vec<usize>> = partitions(n - 1).filter(|p| p.len() >= 3).collect();
    let scores = candidates
        .par_iter()
        .map(|legs| unbalancedness(&families::spider(legs)?))
        .collect::<Result<Vec<u64>>>()?;
    let value = scores.iter().copied().max().ok_or(Error::EmptyStream)?;
    let best = candidates
        .into_iter()
        .zip(scores)
        .filter(|&(_, s)| s == value)
        .map(|(legs, _)| legs)
        .collect();
    Ok(SpiderMax {
        order: n,
        value,
        best,
    })
}

/// Smallest nonzero `uB` in a stream and the graphs attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinNonzeroRow {
    pub order: usize,
    pub min_nonzero: u64,
    pub attainers: Vec<CanonicalForm>,
    /// Graphs scanned.
    pub total: u64,
    /// Graphs with `uB = 0`.
    pub balanced: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinSurvey {
    MinNonzero(MinNonzeroRow),
    /// Every scanned graph is highly distance-balanced.
    AllBalanced {
        order: usize,
        total: u64,
    },
}

impl MinSurvey {
    pub fn order(&self) -> usize {
        match self {
            MinSurvey::MinNonzero(row) => row.order,
            MinSurvey::AllBalanced { order, .. } => *order,
        }
    }

    pub fn row(&self) -> Option<&MinNonzeroRow> {
        match self {
            MinSurvey::MinNonzero(row) => Some(row),
            MinSurvey::AllBalanced { .. } => None,
        }
    }
}

/// Accumulates the smallest nonzero `uB` over graphs of one order.
#[derive(Clone, Debug)]
pub struct MinAccumulator {
    order: Option<usize>,
    total: u64,
    balanced: u64,
    low: Extremes,
}

impl Default for MinAccumulator {
    fn default() -> Self {
        MinAccumulator {
            order: None,
            total: 0,
            balanced: 0,
            low: Extremes::new(1, false),
        }
    }
}

impl MinAccumulator {
    pub fn add(&mut self, g: &Graph, value: u64) -> Result<()> {
        match self.order {
            None => self.order = Some(g.order()),
            Some(n) if n != g.order() => {
                return Err(Error::bad_params(format!(
                    "stream mixes orders {n} and {}",
                    g.order()
                )))
            }
            Some(_) => {}
        }
        self.total += 1;
        if value == 0 {
            self.balanced += 1;
        } else {
            self.low.offer(value, g);
        }
        Ok(())
    }

    pub fn finish(self) -> Result<MinSurvey> {
        let order = self.order.ok_or(Error::EmptyStream)?;
        Ok(match self.low.bucket(0) {
            Some((min_nonzero, graphs)) => MinSurvey::MinNonzero(MinNonzeroRow {
                order,
                min_nonzero,
                attainers: sorted_forms(graphs)?,
                total: self.total,
                balanced: self.balanced,
            }),
            None => MinSurvey::AllBalanced {
                order,
                total: self.total,
            },
        })
    }
}

/// Smallest nonzero `uB` over a stream of connected graphs of one order.
pub fn graph_min_survey<I>(stream: I) -> Result<MinSurvey>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let mut acc = MinAccumulator::default();
    for_each_scored(stream, |g, value| acc.add(&g, value))?;
    acc.finish()
}

/// As [`graph_min_survey`], restricted to the regular graphs of the stream.
pub fn regular_min_survey<I>(stream: I) -> Result<MinSurvey>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let regular = stream.into_iter().filter(|item| match item {
        Ok(g) => g.regular_degree().is_some(),
        Err(_) => true,
    });
    graph_min_survey(regular)
}

/// Minimum of `uB` over all merged and subdivided merged stars of one order
/// (`n >= m >= 1`), computed from the graphs themselves, with every
/// minimiser. Order 3 has no such member and scans `SSx(0,0)` instead.
pub fn merged_family_scan(order: usize) -> Result<(u64, Vec<FamilyDescriptor>)> {
    let mut members = Vec::new();
    for n in 1..order {
        for m in 1..=n {
            if n + m + 2 == order {
                members.push(FamilyDescriptor::MergedStar(n, m));
            }
            if n + m + 3 == order {
                members.push(FamilyDescriptor::SubdividedMergedStar(n, m));
            }
        }
    }
    if order == 3 {
        members.push(FamilyDescriptor::SubdividedMergedStar(0, 0));
    }
    let scores = members
        .par_iter()
        .map(|f| unbalancedness(&f.build()?))
        .collect::<Result<Vec<u64>>>()?;
    let best = scores
        .iter()
        .copied()
        .min()
        .ok_or_else(|| Error::bad_params(format!("no merged stars of order {order}")))?;
    let winners = members
        .into_iter()
        .zip(scores)
        .filter(|&(_, v)| v == best)
        .map(|(f, _)| f)
        .collect();
    Ok((best, winners))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes_keep_two_distinct_values() {
        let g = Graph::empty(1);
        let mut low = Extremes::new(2, false);
        for v in [5, 3, 9, 3, 4, 1, 4] {
            low.offer(v, &g);
        }
        assert_eq!(low.bucket(0).map(|(v, gs)| (v, gs.len())), Some((1, 1)));
        assert_eq!(low.bucket(1).map(|(v, gs)| (v, gs.len())), Some((3, 2)));
        let mut high = Extremes::new(2, true);
        for v in [5, 3, 9, 3, 9, 1, 4] {
            high.offer(v, &g);
        }
        assert_eq!(high.bucket(0).map(|(v, gs)| (v, gs.len())), Some((9, 2)));
        assert_eq!(high.bucket(1).map(|(v, _)| v), Some(5));
    }

    #[test]
    fn order_five_row() {
        let row = tree_survey(5).unwrap();
        assert_eq!(
            (row.min, row.min_second, row.max_second, row.max, row.total),
            (12, Some(14), Some(14), 16, 3)
        );
    }

    #[test]
    fn order_three_and_four() {
        let row = tree_survey(3).unwrap();
        assert_eq!((row.min, row.max, row.total), (2, 2, 1));
        assert_eq!((row.min_second, row.max_second), (None, None));
        let row = tree_survey(4).unwrap();
        assert_eq!((row.min, row.max, row.total, row.min_count()), (6, 6, 2, 2));
    }

    #[test]
    fn bad_orders() {
        assert!(tree_survey(2).is_err());
        assert!(check_conjecture_min_star(4).is_err());
        assert!(spider_max_survey(4).is_err());
        assert!(max_tree_classification(4).is_err());
    }

    #[test]
    fn spider_detection() {
        let sp = families::spider(&[3, 2, 2, 1]).unwrap();
        assert_eq!(spider_legs(&sp), Some(vec![3, 2, 2, 1]));
        let shuffled = sp.relabel(&[4, 0, 7, 2, 8, 1, 3, 5, 6]);
        assert_eq!(spider_legs(&shuffled), Some(vec![3, 2, 2, 1]));
        assert_eq!(spider_legs(&families::path(6).unwrap()), None);
        assert_eq!(spider_legs(&families::merged_star(2, 2).unwrap()), None);
        assert_eq!(spider_legs(&families::cycle(5).unwrap()), None);
    }

    #[test]
    fn min_survey_errors() {
        assert!(matches!(
            graph_min_survey(std::iter::empty()),
            Err(Error::EmptyStream)
        ));
        let mixed = vec![
            Ok(families::path(3).unwrap()),
            Ok(families::path(4).unwrap()),
        ];
        assert!(matches!(graph_min_survey(mixed), Err(Error::BadParams(_))));
        let cycles = vec![Ok(families::cycle(5).unwrap())];
        assert_eq!(
            regular_min_survey(cycles).unwrap(),
            MinSurvey::AllBalanced { order: 5, total: 1 }
        );
        let paths = vec![Ok(families::path(5).unwrap())];
        assert!(matches!(regular_min_survey(paths), Err(Error::EmptyStream)));
    }

    #[test]
    fn disconnected_graph_in_stream_is_an_error() {
        let stream = vec![Ok(Graph::empty(3))];
        assert!(matches!(
            graph_min_survey(stream),
            Err(Error::DisconnectedInput)
        ));
    }

    #[test]
    fn merged_family_small_orders() {
        assert_eq!(
            merged_family_scan(3).unwrap(),
            (2, vec![FamilyDescriptor::SubdividedMergedStar(0, 0)])
        );
        assert_eq!(
            merged_family_scan(4).unwrap(),
            (6, vec![FamilyDescriptor::MergedStar(1, 1)])
        );
    }
}
