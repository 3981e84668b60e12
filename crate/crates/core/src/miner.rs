//! Maximal span-truss mining.
//!
//! Four strategies produce the same [`MaximalSet`]:
//!
//! * [`mine_naive`] decomposes every non-empty interval and filters the
//!   candidates pairwise. It is the reference implementation.
//! * [`mine_baseline`] sweeps `t_start` upward and `t_end` downward, keeping
//!   the orders of the enclosing intervals `[t_s - 1, t_e]` and
//!   `[t_s, t_e + 1]` as a lower bound. An innermost truss is maximal iff its
//!   order beats that bound, so no filtering pass is needed. Every interval's
//!   supports are recounted from scratch.
//! * [`mine_streaming`] runs the same sweep but grows one snapshot per
//!   `t_start` by inserting the edges that drop out at `t_e + 1`, updating
//!   supports incrementally.
//! * [`mine_heuristic`] adds a skip test on top of streaming: if inserting the
//!   new edges leaves the number of edges with support above `k' - 2`
//!   unchanged, the order stays `k'` and the decomposition is skipped.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::MinerError;
use crate::static_truss::{
    compute_supports, innermost_truss, insert_edges_update, peel, truss_decomposition, Snapshot,
};
use crate::tgraph::{retain_sorted, DeltaEdgeSets, Edge, Interval, TemporalGraph, Timestamp};

/// A k-truss of `G_Δ` tagged with its span Δ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SpanTruss {
    order: u32,
    span: Interval,
    edges: Vec<Edge>,
}

impl SpanTruss {
    /// `edges` must be sorted and non-empty.
    pub(crate) fn new(order: u32, span: Interval, edges: Vec<Edge>) -> Self {
        debug_assert!(order >= 2 && !edges.is_empty());
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        SpanTruss { order, span, edges }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn span(&self) -> Interval {
        self.span
    }

    /// Sorted edge set.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `true` if `other` is a different span-truss with order `>=` ours whose
    /// span encloses ours.
    pub fn is_dominated_by(&self, other: &SpanTruss) -> bool {
        other.order >= self.order
            && other.span.contains(self.span)
            && (other.order, other.span) != (self.order, self.span)
    }
}

/// An antichain of span-trusses, ordered by `(t_start asc, t_end desc, k desc)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MaximalSet {
    trusses: Vec<SpanTruss>,
}

impl MaximalSet {
    fn from_unsorted(mut trusses: Vec<SpanTruss>) -> Self {
        trusses.sort_by(|a, b| {
            a.span
                .start()
                .cmp(&b.span.start())
                .then(b.span.end().cmp(&a.span.end()))
                .then(b.order.cmp(&a.order))
        });
        MaximalSet { trusses }
    }

    pub fn len(&self) -> usize {
        self.trusses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trusses.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SpanTruss> {
        self.trusses.iter()
    }

    pub fn as_slice(&self) -> &[SpanTruss] {
        &self.trusses
    }

    /// `(order, span)` of every member, in set order.
    pub fn headers(&self) -> Vec<(u32, Interval)> {
        self.trusses.iter().map(|t| (t.order, t.span)).collect()
    }
}

impl IntoIterator for MaximalSet {
    type Item = SpanTruss;
    type IntoIter = std::vec::IntoIter<SpanTruss>;

    fn into_iter(self) -> Self::IntoIter {
        self.trusses.into_iter()
    }
}

impl<'a> IntoIterator for &'a MaximalSet {
    type Item = &'a SpanTruss;
    type IntoIter = std::slice::Iter<'a, SpanTruss>;

    fn into_iter(self) -> Self::IntoIter {
        self.trusses.iter()
    }
}

/// Keeps the candidates not dominated by any other candidate.
///
/// Expects at most one candidate per interval. Quadratic in the number of
/// candidates.
pub fn filter_maximal(candidates: Vec<SpanTruss>) -> MaximalSet {
    let keep: Vec<bool> = candidates
        .iter()
        .map(|c| !candidates.iter().any(|d| c.is_dominated_by(d)))
        .collect();
    let kept = candidates
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect();
    MaximalSet::from_unsorted(kept)
}

/// Orders of the innermost trusses of the two enclosing intervals.
///
/// `k_prime_per_end[t]` holds the order for `[t_s - 1, t]` (the running max
/// over earlier passes); `k_double_prime` holds the order for
/// `[t_s, t_e + 1]` within the current pass.
#[derive(Debug, Clone)]
pub struct LowerBoundState {
    k_prime_per_end: Vec<u32>,
    k_double_prime: u32,
}

impl LowerBoundState {
    pub fn new(num_timestamps: usize) -> Self {
        LowerBoundState {
            k_prime_per_end: vec![0; num_timestamps],
            k_double_prime: 0,
        }
    }

    /// Resets `k''` at the start of a `t_start` pass.
    pub fn start_pass(&mut self) {
        self.k_double_prime = 0;
    }

    pub fn bound(&self, t_end: Timestamp) -> u32 {
        self.k_prime_per_end[t_end].max(self.k_double_prime)
    }

    /// Records the innermost order found for `[t_s, t_end]`.
    pub fn record(&mut self, t_end: Timestamp, order: u32) {
        self.k_double_prime = order;
        let slot = &mut self.k_prime_per_end[t_end];
        *slot = (*slot).max(order);
    }

    pub fn k_prime(&self, t_end: Timestamp) -> u32 {
        self.k_prime_per_end[t_end]
    }

    pub fn k_double_prime(&self) -> u32 {
        self.k_double_prime
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Naive,
    Baseline,
    Streaming,
    Heuristic,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Naive,
        Algorithm::Baseline,
        Algorithm::Streaming,
        Algorithm::Heuristic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Baseline => "baseline",
            Algorithm::Streaming => "streaming",
            Algorithm::Heuristic => "heuristic",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = MinerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| MinerError::UnknownAlgorithm(s.to_string()))
    }
}

/// Work counters for one mining run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct MiningStats {
    /// Non-empty intervals visited.
    pub intervals: u64,
    /// Truss decompositions actually run (paranoid re-checks excluded).
    pub decompositions: u64,
    /// Decompositions avoided by the heuristic.
    pub skips: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiningOutcome {
    pub set: MaximalSet,
    pub stats: MiningStats,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct MineOptions {
    /// Heuristic only: re-run the decomposition on every skipped interval and
    /// fail if the order differs from the one the skip assumed.
    pub paranoid: bool,
}

/// Runs `algo` on `g`. Only a paranoid heuristic run can fail.
pub fn mine(
    g: &TemporalGraph,
    algo: Algorithm,
    opts: MineOptions,
) -> Result<MiningOutcome, MinerError> {
    match algo {
        Algorithm::Naive => Ok(naive(g)),
        Algorithm::Baseline => sweep(g, Sweep::Baseline, false),
        Algorithm::Streaming => sweep(g, Sweep::Streaming, false),
        Algorithm::Heuristic => sweep(g, Sweep::Heuristic, opts.paranoid),
    }
}

pub fn mine_naive(g: &TemporalGraph) -> MaximalSet {
    naive(g).set
}

pub fn mine_baseline(g: &TemporalGraph) -> MaximalSet {
    infallible(sweep(g, Sweep::Baseline, false))
}

pub fn mine_streaming(g: &TemporalGraph) -> MaximalSet {
    infallible(sweep(g, Sweep::Streaming, false))
}

pub fn mine_heuristic(g: &TemporalGraph) -> MaximalSet {
    infallible(sweep(g, Sweep::Heuristic, false))
}

fn infallible(r: Result<MiningOutcome, MinerError>) -> MaximalSet {
    match r {
        Ok(o) => o.set,
        Err(e) => unreachable!("non-paranoid sweep failed: {e}"),
    }
}

fn naive(g: &TemporalGraph) -> MiningOutcome {
    let mut stats = MiningStats::default();
    let mut candidates = Vec::new();
    let n = g.num_vertices();
    let num_t = g.num_timestamps();
    for t_start in 0..num_t {
        let mut current = g.edges_at(t_start).to_vec();
        let mut t_end = t_start;
        while !current.is_empty() {
            let s = Snapshot::from_edges(n, &current).expect("interval edges are distinct");
            let labels = truss_decomposition(&s, &compute_supports(&s));
            let (order, edges) = innermost_truss(&labels).expect("snapshot is non-empty");
            stats.intervals += 1;
            stats.decompositions += 1;
            candidates.push(SpanTruss::new(
                order,
                Interval::new(t_start, t_end).expect("t_start <= t_end"),
                edges,
            ));
            t_end += 1;
            if t_end == num_t {
                break;
            }
            retain_sorted(&mut current, g.edges_at(t_end));
        }
    }
    log::debug!("naive: {} candidates", candidates.len());
    MiningOutcome {
        set: filter_maximal(candidates),
        stats,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sweep {
    Baseline,
    Streaming,
    Heuristic,
}

fn sweep(g: &TemporalGraph, mode: Sweep, paranoid: bool) -> Result<MiningOutcome, MinerError> {
    let mut stats = MiningStats::default();
    let mut found = Vec::new();
    let mut bounds = LowerBoundState::new(g.num_timestamps());
    let mut snap = Snapshot::with_vertices(g.num_vertices());
    let mut current: Vec<Edge> = Vec::new();

    for t_start in 0..g.num_timestamps() {
        let Ok(delta) = DeltaEdgeSets::build(g, t_start) else {
            continue;
        };
        let t_star = delta.t_star();
        bounds.start_pass();
        snap.clear();
        snap.add_edges(delta.base()).expect("fresh snapshot");
        let mut sup = compute_supports(&snap);
        if mode == Sweep::Baseline {
            current.clear();
            current.extend_from_slice(delta.base());
        }
        let mut last_order = 0u32;

        for t_end in (t_start..=t_star).rev() {
            let span = Interval::new(t_start, t_end).expect("t_start <= t_end");
            stats.intervals += 1;
            let mut skip = false;
            if t_end < t_star {
                let added = delta.removed_at(t_end);
                match mode {
                    Sweep::Baseline => {
                        current.extend_from_slice(added);
                        snap.clear();
                        snap.add_edges(&current).expect("delta sets are disjoint");
                        sup = compute_supports(&snap);
                    }
                    Sweep::Streaming => {
                        insert_edges_update(&mut snap, &mut sup, added)
                            .expect("delta sets are disjoint");
                    }
                    Sweep::Heuristic => {
                        let threshold = last_order - 2;
                        let before = sup.count_above(threshold);
                        insert_edges_update(&mut snap, &mut sup, added)
                            .expect("delta sets are disjoint");
                        skip = sup.count_above(threshold) == before;
                    }
                }
            }

            if skip {
                stats.skips += 1;
                if paranoid {
                    let actual = peel(&snap, &sup).max_order;
                    if actual != last_order {
                        return Err(MinerError::HeuristicDisagreement {
                            span,
                            skipped: last_order,
                            actual,
                        });
                    }
                }
                // Order equals k'' and so cannot beat the bound.
                bounds.record(t_end, last_order);
                continue;
            }

            let decomposition = peel(&snap, &sup);
            stats.decompositions += 1;
            let order = decomposition.max_order;
            if order > bounds.bound(t_end) {
                found.push(SpanTruss::new(
                    order,
                    span,
                    decomposition.edges_at_least(&snap, order),
                ));
            }
            bounds.record(t_end, order);
            last_order = order;
        }
    }
    log::debug!("{mode:?}: {} maximal, {:?}", found.len(), stats);
    Ok(MiningOutcome {
        set: MaximalSet::from_unsorted(found),
        stats,
    })
}
