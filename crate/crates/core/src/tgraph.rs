//! Temporal graph model: per-timestamp edge sets, inclusive intervals,
//! interval edge intersection and the shrinking-interval delta sets.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Dense vertex index.
pub type VertexId = u32;

/// Discrete timestamp index, `0..=t_max`.
pub type Timestamp = usize;

/// Undirected edge stored canonically with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(VertexId, VertexId)", into = "(VertexId, VertexId)")]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Canonical edge between `a` and `b`. Fails on a self-loop.
    pub fn new(a: VertexId, b: VertexId) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            Ordering::Less => Ok(Edge { u: a, v: b }),
            Ordering::Greater => Ok(Edge { u: b, v: a }),
            Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }

    /// Smaller endpoint.
    #[inline]
    pub fn u(self) -> VertexId {
        self.u
    }

    /// Larger endpoint.
    #[inline]
    pub fn v(self) -> VertexId {
        self.v
    }

    #[inline]
    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    /// Packs the edge into one word; used as a hash key.
    #[inline]
    pub(crate) fn key(self) -> u64 {
        ((self.u as u64) << 32) | self.v as u64
    }
}

impl TryFrom<(VertexId, VertexId)> for Edge {
    type Error = GraphError;

    fn try_from((a, b): (VertexId, VertexId)) -> Result<Self, Self::Error> {
        Edge::new(a, b)
    }
}

impl From<Edge> for (VertexId, VertexId) {
    fn from(e: Edge) -> Self {
        (e.u, e.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Inclusive span `[start, end]` of timestamps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    start: Timestamp,
    end: Timestamp,
}

impl Interval {
    pub fn new(start: Timestamp, end: Timestamp) -> Result<Self, GraphError> {
        if start > end {
            return Err(GraphError::InvertedInterval { start, end });
        }
        Ok(Interval { start, end })
    }

    /// The single-timestamp interval `[t, t]`.
    pub fn at(t: Timestamp) -> Self {
        Interval { start: t, end: t }
    }

    #[inline]
    pub fn start(self) -> Timestamp {
        self.start
    }

    #[inline]
    pub fn end(self) -> Timestamp {
        self.end
    }

    /// Number of timestamps covered.
    pub fn len(self) -> usize {
        self.end - self.start + 1
    }

    /// Intervals are never empty; present for API symmetry with `len`.
    pub fn is_empty(self) -> bool {
        false
    }

    /// `true` iff `inner` is nested inside `self` (an interval contains itself).
    #[inline]
    pub fn contains(self, inner: Interval) -> bool {
        self.start <= inner.start && self.end >= inner.end
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

/// Free-function form of [`Interval::contains`].
pub fn interval_contains(outer: Interval, inner: Interval) -> bool {
    outer.contains(inner)
}

/// Immutable temporal graph over the time domain `0..num_timestamps`.
///
/// Every per-timestamp edge set is a sorted, duplicate-free sequence of
/// canonical edges. A timestamp with no activity has an empty set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTemporalGraph")]
pub struct TemporalGraph {
    num_vertices: usize,
    edges_at: Vec<Vec<Edge>>,
}

#[derive(Deserialize)]
struct RawTemporalGraph {
    num_vertices: usize,
    edges_at: Vec<Vec<Edge>>,
}

impl TryFrom<RawTemporalGraph> for TemporalGraph {
    type Error = GraphError;

    fn try_from(raw: RawTemporalGraph) -> Result<Self, Self::Error> {
        TemporalGraph::new(raw.num_vertices, raw.edges_at)
    }
}

impl TemporalGraph {
    /// Builds a graph from one edge list per timestamp. The lists are sorted
    /// and deduplicated; endpoints must be below `num_vertices`.
    pub fn new(num_vertices: usize, mut edges_at: Vec<Vec<Edge>>) -> Result<Self, GraphError> {
        for (t, edges) in edges_at.iter_mut().enumerate() {
            edges.sort_unstable();
            edges.dedup();
            if let Some(e) = edges.iter().find(|e| e.v() as usize >= num_vertices) {
                return Err(GraphError::VertexOutOfRange {
                    vertex: e.v(),
                    num_vertices,
                    timestamp: t,
                });
            }
        }
        Ok(TemporalGraph {
            num_vertices,
            edges_at,
        })
    }

    /// Convenience constructor from `(u, v, t)` triples; the time domain is
    /// `0..=max t` and the vertex count is one past the largest endpoint.
    pub fn from_triples<I>(triples: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Timestamp)>,
    {
        let mut edges_at: Vec<Vec<Edge>> = Vec::new();
        let mut num_vertices = 0usize;
        for (a, b, t) in triples {
            let e = Edge::new(a, b)?;
            num_vertices = num_vertices.max(e.v() as usize + 1);
            if edges_at.len() <= t {
                edges_at.resize_with(t + 1, Vec::new);
            }
            edges_at[t].push(e);
        }
        TemporalGraph::new(num_vertices, edges_at)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// `|T|`; zero for a graph with an empty time domain.
    pub fn num_timestamps(&self) -> usize {
        self.edges_at.len()
    }

    pub fn t_max(&self) -> Option<Timestamp> {
        self.edges_at.len().checked_sub(1)
    }

    /// Edges active at `t`, sorted. Panics if `t` is outside the time domain.
    pub fn edges_at(&self, t: Timestamp) -> &[Edge] {
        &self.edges_at[t]
    }

    /// Total number of temporal edges `(u, v, t)`.
    pub fn num_temporal_edges(&self) -> usize {
        self.edges_at.iter().map(Vec::len).sum()
    }

    fn check_interval(&self, d: Interval) -> Result<(), GraphError> {
        if d.end() >= self.edges_at.len() {
            return Err(GraphError::IntervalOutOfRange {
                interval: d,
                num_timestamps: self.edges_at.len(),
            });
        }
        Ok(())
    }

    /// Edges present at every timestamp of `d`, sorted.
    pub fn interval_edges(&self, d: Interval) -> Result<Vec<Edge>, GraphError> {
        self.check_interval(d)?;
        let mut acc = self.edges_at[d.start()].clone();
        for t in d.start() + 1..=d.end() {
            if acc.is_empty() {
                break;
            }
            retain_sorted(&mut acc, &self.edges_at[t]);
        }
        Ok(acc)
    }

    /// Largest `t_e >= t_start` for which `E[t_start, t_e]` is non-empty, or
    /// `None` when nothing is active at `t_start`.
    pub fn max_nonempty_end(&self, t_start: Timestamp) -> Option<Timestamp> {
        let first = self.edges_at.get(t_start)?;
        if first.is_empty() {
            return None;
        }
        let mut acc = first.clone();
        let mut t = t_start;
        while t + 1 < self.edges_at.len() {
            retain_sorted(&mut acc, &self.edges_at[t + 1]);
            if acc.is_empty() {
                break;
            }
            t += 1;
        }
        Some(t)
    }
}

/// Keeps the elements of `acc` that also occur in `other`; both sorted.
pub(crate) fn retain_sorted(acc: &mut Vec<Edge>, other: &[Edge]) {
    let mut j = 0;
    acc.retain(|e| {
        while j < other.len() && other[j] < *e {
            j += 1;
        }
        j < other.len() && other[j] == *e
    });
}

/// For a fixed `t_start`, the edge set of the longest non-empty interval plus
/// the edges that drop out at each later step.
///
/// `removed_at(t_e)` holds the edges present throughout `[t_start, t_e]` but
/// absent at `t_e + 1`. Walking `t_e` downward from `t_star` and adding these
/// sets to `base` rebuilds every `E[t_start, t_e]` by insertion alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaEdgeSets {
    t_start: Timestamp,
    t_star: Timestamp,
    base: Vec<Edge>,
    removed: Vec<Vec<Edge>>,
}

impl DeltaEdgeSets {
    pub fn build(g: &TemporalGraph, t_start: Timestamp) -> Result<Self, GraphError> {
        g.check_interval(Interval::at(t_start))?;
        let mut current = g.edges_at[t_start].clone();
        if current.is_empty() {
            return Err(GraphError::EmptyStart(t_start));
        }
        let mut removed = Vec::new();
        let mut t = t_start;
        while t + 1 < g.edges_at.len() {
            let next = &g.edges_at[t + 1];
            let (kept, gone): (Vec<Edge>, Vec<Edge>) =
                current.iter().partition(|e| next.binary_search(e).is_ok());
            if kept.is_empty() {
                break;
            }
            removed.push(gone);
            current = kept;
            t += 1;
        }
        Ok(DeltaEdgeSets {
            t_start,
            t_star: t,
            base: current,
            removed,
        })
    }

    pub fn t_start(&self) -> Timestamp {
        self.t_start
    }

    /// The maximum end with a non-empty interval edge set.
    pub fn t_star(&self) -> Timestamp {
        self.t_star
    }

    /// `E[t_start, t_star]`.
    pub fn base(&self) -> &[Edge] {
        &self.base
    }

    /// `E⁻(t_e)` for `t_e` in `[t_start, t_star - 1]`. Panics outside that range.
    pub fn removed_at(&self, t_e: Timestamp) -> &[Edge] {
        assert!(
            t_e >= self.t_start && t_e < self.t_star,
            "t_e {} outside [{}, {})",
            t_e,
            self.t_start,
            self.t_star
        );
        &self.removed[t_e - self.t_start]
    }

    /// Yields `(t_e, E[t_start, t_e])` for `t_e` from `t_star` down to
    /// `t_start`, each set sorted.
    pub fn reconstruct(&self) -> impl Iterator<Item = (Timestamp, Vec<Edge>)> + '_ {
        let mut acc: Option<Vec<Edge>> = None;
        (self.t_start..=self.t_star).rev().map(move |t_e| {
            let next = match acc.take() {
                None => self.base.clone(),
                Some(mut edges) => {
                    edges.extend_from_slice(self.removed_at(t_e));
                    edges.sort_unstable();
                    edges
                }
            };
            acc = Some(next.clone());
            (t_e, next)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(a: VertexId, b: VertexId) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn iv(s: Timestamp, t: Timestamp) -> Interval {
        Interval::new(s, t).unwrap()
    }

    /// Triangle at t = 0 and t = 1, then only (0,1) at t = 2.
    fn triangle_then_edge() -> TemporalGraph {
        TemporalGraph::from_triples([
            (0, 1, 0),
            (1, 2, 0),
            (0, 2, 0),
            (0, 1, 1),
            (1, 2, 1),
            (0, 2, 1),
            (0, 1, 2),
        ])
        .unwrap()
    }

    #[test]
    fn edge_is_canonical() {
        assert_eq!(e(5, 2).endpoints(), (2, 5));
        assert!(matches!(Edge::new(3, 3), Err(GraphError::SelfLoop(3))));
    }

    #[test]
    fn interval_containment_examples() {
        assert!(interval_contains(iv(0, 5), iv(1, 3)));
        assert!(interval_contains(iv(2, 4), iv(2, 4)));
        assert!(!interval_contains(iv(1, 3), iv(0, 3)));
        assert!(Interval::new(3, 2).is_err());
    }

    #[test]
    fn new_rejects_out_of_range_vertex() {
        let err = TemporalGraph::new(2, vec![vec![e(0, 2)]]).unwrap_err();
        assert!(matches!(err, GraphError::VertexOutOfRange { vertex: 2, .. }));
    }

    #[test]
    fn new_sorts_and_dedups() {
        let g = TemporalGraph::new(3, vec![vec![e(1, 2), e(0, 1), e(2, 1)]]).unwrap();
        assert_eq!(g.edges_at(0), &[e(0, 1), e(1, 2)]);
    }

    #[test]
    fn interval_edges_examples() {
        let g = triangle_then_edge();
        assert_eq!(g.interval_edges(iv(1, 1)).unwrap(), g.edges_at(1));
        assert_eq!(g.interval_edges(iv(0, 2)).unwrap(), vec![e(0, 1)]);
        assert!(g.interval_edges(iv(0, 3)).is_err());

        let gap = TemporalGraph::new(3, vec![vec![e(0, 1)], vec![], vec![e(0, 1)]]).unwrap();
        assert!(gap.interval_edges(iv(0, 2)).unwrap().is_empty());
    }

    #[test]
    fn max_nonempty_end_examples() {
        let g = triangle_then_edge();
        assert_eq!(g.max_nonempty_end(0), Some(2));
        let gap = TemporalGraph::new(3, vec![vec![], vec![e(0, 1)]]).unwrap();
        assert_eq!(gap.max_nonempty_end(0), None);
        let single = TemporalGraph::from_triples([(0, 1, 0)]).unwrap();
        assert_eq!(single.max_nonempty_end(0), Some(0));
    }

    #[test]
    fn delta_sets_on_triangle_then_edge() {
        let d = DeltaEdgeSets::build(&triangle_then_edge(), 0).unwrap();
        assert_eq!(d.t_star(), 2);
        assert_eq!(d.base(), &[e(0, 1)]);
        assert_eq!(d.removed_at(1), &[e(0, 2), e(1, 2)]);
        assert!(d.removed_at(0).is_empty());
    }

    #[test]
    fn delta_sets_constant_and_single() {
        let edges = vec![e(0, 1), e(1, 2)];
        let g = TemporalGraph::new(3, vec![edges.clone(); 4]).unwrap();
        let d = DeltaEdgeSets::build(&g, 1).unwrap();
        assert_eq!(d.t_star(), 3);
        assert_eq!(d.base(), edges.as_slice());
        assert!((1..3).all(|t| d.removed_at(t).is_empty()));

        let g = TemporalGraph::new(3, vec![edges.clone(), vec![]]).unwrap();
        let d = DeltaEdgeSets::build(&g, 0).unwrap();
        assert_eq!(d.t_star(), 0);
        assert_eq!(d.base(), edges.as_slice());
        assert_eq!(d.reconstruct().count(), 1);
    }

    #[test]
    fn delta_sets_empty_start() {
        let g = TemporalGraph::new(3, vec![vec![], vec![e(0, 1)]]).unwrap();
        assert!(matches!(
            DeltaEdgeSets::build(&g, 0),
            Err(GraphError::EmptyStart(0))
        ));
    }

    fn arb_graph() -> impl Strategy<Value = TemporalGraph> {
        (2u32..8, 1usize..7).prop_flat_map(|(n, t)| {
            let pairs: Vec<(u32, u32)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .collect();
            let m = pairs.len();
            prop::collection::vec(prop::collection::vec(any::<bool>(), m), t).prop_map(
                move |mask| {
                    let edges_at = mask
                        .into_iter()
                        .map(|row| {
                            row.into_iter()
                                .zip(&pairs)
                                .filter(|(on, _)| *on)
                                .map(|(_, &(a, b))| Edge::new(a, b).unwrap())
                                .collect()
                        })
                        .collect();
                    TemporalGraph::new(n as usize, edges_at).unwrap()
                },
            )
        })
    }

    fn arb_interval() -> impl Strategy<Value = Interval> {
        (0usize..6, 0usize..6).prop_map(|(a, b)| Interval::new(a.min(b), a.max(b)).unwrap())
    }

    proptest! {
        #[test]
        fn reconstruction_matches_direct_intersection(g in arb_graph()) {
            for ts in 0..g.num_timestamps() {
                match DeltaEdgeSets::build(&g, ts) {
                    Err(_) => prop_assert!(g.edges_at(ts).is_empty()),
                    Ok(d) => {
                        prop_assert_eq!(Some(d.t_star()), g.max_nonempty_end(ts));
                        for (te, edges) in d.reconstruct() {
                            prop_assert_eq!(edges, g.interval_edges(iv(ts, te)).unwrap());
                        }
                        let mut all: Vec<Edge> = d.base().to_vec();
                        for te in ts..d.t_star() {
                            all.extend_from_slice(d.removed_at(te));
                        }
                        let n = all.len();
                        all.sort_unstable();
                        all.dedup();
                        prop_assert_eq!(all.len(), n, "delta sets overlap");
                    }
                }
            }
        }

        #[test]
        fn interval_edges_shrink_as_interval_grows(g in arb_graph()) {
            let t = g.num_timestamps();
            for ts in 0..t {
                for te in ts..t.saturating_sub(1) {
                    let wide = g.interval_edges(iv(ts, te + 1)).unwrap();
                    let narrow = g.interval_edges(iv(ts, te)).unwrap();
                    prop_assert!(wide.iter().all(|e| narrow.binary_search(e).is_ok()));
                }
            }
        }

        #[test]
        fn containment_is_partial_order(a in arb_interval(), b in arb_interval(), c in arb_interval()) {
            prop_assert!(a.contains(a));
            if a.contains(b) && b.contains(a) {
                prop_assert_eq!(a, b);
            }
            if a.contains(b) && b.contains(c) {
                prop_assert!(a.contains(c));
            }
        }
    }
}
