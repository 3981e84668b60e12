//! Static snapshots, edge supports and truss decomposition.
//!
//! A [`Snapshot`] is the static graph of one interval. It only grows: the
//! temporal miners add edges as the interval shrinks, so supports can be
//! maintained by [`insert_edges_update`] instead of being recounted.
//! Decomposition peels a working copy of the supports and leaves the
//! caller's [`SupportMap`] untouched.

use rustc_hash::FxHashMap;

use crate::error::TrussError;
use crate::tgraph::{Edge, VertexId};

type EdgeId = u32;

/// Mutable static graph with constant-time edge membership.
///
/// Edges get dense ids in insertion order; supports and trussness values are
/// stored against those ids.
#[derive(Debug, Clone, Default)]
pub struct Snapshot {
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    index: FxHashMap<u64, EdgeId>,
    edges: Vec<Edge>,
}

impl Snapshot {
    /// Empty snapshot over vertices `0..num_vertices`.
    pub fn with_vertices(num_vertices: usize) -> Self {
        Snapshot {
            adj: vec![Vec::new(); num_vertices],
            index: FxHashMap::default(),
            edges: Vec::new(),
        }
    }

    pub fn from_edges(num_vertices: usize, edges: &[Edge]) -> Result<Self, TrussError> {
        let mut s = Snapshot::with_vertices(num_vertices);
        s.add_edges(edges)?;
        Ok(s)
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v as usize].iter().map(|&(w, _)| w)
    }

    pub fn contains(&self, a: VertexId, b: VertexId) -> bool {
        self.lookup(a, b).is_some()
    }

    fn lookup(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let key = if a < b {
            ((a as u64) << 32) | b as u64
        } else {
            ((b as u64) << 32) | a as u64
        };
        self.index.get(&key).copied()
    }

    fn id_of(&self, e: Edge) -> Option<EdgeId> {
        self.index.get(&e.key()).copied()
    }

    /// Removes every edge but keeps the vertex range and allocations.
    pub fn clear(&mut self) {
        for e in &self.edges {
            self.adj[e.u() as usize].clear();
            self.adj[e.v() as usize].clear();
        }
        self.index.clear();
        self.edges.clear();
    }

    /// Validates a batch before any of it is applied, so a rejected batch
    /// leaves the snapshot unchanged.
    fn check_new_edges(&self, edges: &[Edge]) -> Result<(), TrussError> {
        let n = self.adj.len();
        let mut batch = FxHashMap::default();
        for &e in edges {
            if e.v() as usize >= n {
                return Err(TrussError::VertexOutOfRange {
                    vertex: e.v(),
                    num_vertices: n,
                });
            }
            if self.index.contains_key(&e.key()) || batch.insert(e.key(), ()).is_some() {
                return Err(TrussError::DuplicateEdge(e));
            }
        }
        Ok(())
    }

    /// Adds edges without touching any [`SupportMap`]; supports computed
    /// earlier are stale afterwards.
    pub fn add_edges(&mut self, edges: &[Edge]) -> Result<(), TrussError> {
        self.check_new_edges(edges)?;
        for &e in edges {
            self.push_edge(e);
        }
        Ok(())
    }

    fn push_edge(&mut self, e: Edge) -> EdgeId {
        let id = self.edges.len() as EdgeId;
        self.edges.push(e);
        self.index.insert(e.key(), id);
        self.adj[e.u() as usize].push((e.v(), id));
        self.adj[e.v() as usize].push((e.u(), id));
        id
    }

    /// Calls `f(id(a,w), id(b,w))` for every common neighbour `w` of the
    /// endpoints of `e`, scanning the smaller neighbour list.
    #[inline]
    fn for_each_triangle(&self, e: Edge, mut f: impl FnMut(EdgeId, EdgeId)) {
        let (mut a, mut b) = e.endpoints();
        if self.adj[a as usize].len() > self.adj[b as usize].len() {
            std::mem::swap(&mut a, &mut b);
        }
        for &(w, aw) in &self.adj[a as usize] {
            if w == b {
                continue;
            }
            if let Some(bw) = self.lookup(b, w) {
                f(aw, bw);
            }
        }
    }
}

/// Triangle count per edge of a [`Snapshot`], indexed like the snapshot's
/// edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SupportMap {
    counts: Vec<u32>,
}

impl SupportMap {
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn get(&self, s: &Snapshot, e: Edge) -> Option<u32> {
        s.id_of(e).map(|id| self.counts[id as usize])
    }

    /// `(edge, support)` pairs in snapshot insertion order.
    pub fn iter<'a>(&'a self, s: &'a Snapshot) -> impl Iterator<Item = (Edge, u32)> + 'a {
        s.edges.iter().copied().zip(self.counts.iter().copied())
    }

    /// `(edge, support)` pairs sorted by edge.
    pub fn to_sorted_vec(&self, s: &Snapshot) -> Vec<(Edge, u32)> {
        let mut v: Vec<_> = self.iter(s).collect();
        v.sort_unstable();
        v
    }

    /// Number of edges whose support is strictly greater than `threshold`.
    pub fn count_above(&self, threshold: u32) -> usize {
        self.counts.iter().filter(|&&c| c > threshold).count()
    }

    pub fn max(&self) -> u32 {
        self.counts.iter().copied().max().unwrap_or(0)
    }
}

/// Counts, for every edge, the triangles it closes.
pub fn compute_supports(s: &Snapshot) -> SupportMap {
    let counts = s
        .edges
        .iter()
        .map(|&e| {
            let mut c = 0u32;
            s.for_each_triangle(e, |_, _| c += 1);
            c
        })
        .collect();
    SupportMap { counts }
}

/// Adds `new_edges` to `s` one at a time, crediting each triangle the new
/// edge closes to all three of its edges.
///
/// The whole batch is rejected, with `s` and `sup` untouched, if any edge is
/// already present or repeated in the batch.
pub fn insert_edges_update(
    s: &mut Snapshot,
    sup: &mut SupportMap,
    new_edges: &[Edge],
) -> Result<(), TrussError> {
    debug_assert_eq!(sup.counts.len(), s.edges.len());
    s.check_new_edges(new_edges)?;
    for &e in new_edges {
        let id = s.push_edge(e);
        sup.counts.push(0);
        let counts = &mut sup.counts;
        let mut closed = 0u32;
        s.for_each_triangle(e, |aw, bw| {
            closed += 1;
            counts[aw as usize] += 1;
            counts[bw as usize] += 1;
        });
        counts[id as usize] = closed;
    }
    Ok(())
}

/// Per-edge trussness aligned with snapshot ids.
#[derive(Debug, Clone)]
pub(crate) struct Decomposition {
    pub(crate) trussness: Vec<u32>,
    pub(crate) max_order: u32,
}

impl Decomposition {
    /// Edges with trussness at least `k`, sorted.
    pub(crate) fn edges_at_least(&self, s: &Snapshot, k: u32) -> Vec<Edge> {
        let mut out: Vec<Edge> = s
            .edges
            .iter()
            .zip(&self.trussness)
            .filter(|(_, &t)| t >= k)
            .map(|(&e, _)| e)
            .collect();
        out.sort_unstable();
        out
    }
}

/// Bin-sorted peeling. Edges sit in an array ordered by current support with
/// `bin_start[s]` marking where support `s` begins; lowering an edge's
/// support swaps it to the front of its bin and shifts the boundary.
pub(crate) fn peel(s: &Snapshot, sup: &SupportMap) -> Decomposition {
    let m = s.edges.len();
    debug_assert_eq!(sup.counts.len(), m);
    if m == 0 {
        return Decomposition {
            trussness: Vec::new(),
            max_order: 0,
        };
    }
    let mut support = sup.counts.clone();
    let max_sup = support.iter().copied().max().unwrap_or(0) as usize;

    let mut bin_start = vec![0usize; max_sup + 1];
    for &c in &support {
        bin_start[c as usize] += 1;
    }
    let mut start = 0;
    for b in bin_start.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut order = vec![0 as EdgeId; m];
    let mut pos = vec![0usize; m];
    {
        let mut next = bin_start.clone();
        for (id, &c) in support.iter().enumerate() {
            let p = next[c as usize];
            next[c as usize] += 1;
            pos[id] = p;
            order[p] = id as EdgeId;
        }
    }

    let mut removed = vec![false; m];
    let mut trussness = vec![0u32; m];
    let mut max_order = 2;
    for i in 0..m {
        let e = order[i] as usize;
        let sup_e = support[e];
        trussness[e] = sup_e + 2;
        max_order = max_order.max(sup_e + 2);

        let mut lower = |f: usize, support: &mut Vec<u32>| {
            let sf = support[f] as usize;
            let first = bin_start[sf];
            let g = order[first] as usize;
            if g != f {
                let pf = pos[f];
                order[first] = f as EdgeId;
                order[pf] = g as EdgeId;
                pos[f] = first;
                pos[g] = pf;
            }
            bin_start[sf] += 1;
            support[f] -= 1;
        };
        s.for_each_triangle(s.edges[e], |aw, bw| {
            let (aw, bw) = (aw as usize, bw as usize);
            if removed[aw] || removed[bw] {
                return;
            }
            for f in [aw, bw] {
                if support[f] > sup_e {
                    lower(f, &mut support);
                }
            }
        });
        removed[e] = true;
    }
    Decomposition {
        trussness,
        max_order,
    }
}

/// Trussness of every edge of a static graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrussLabels {
    labels: Vec<(Edge, u32)>,
    max_order: u32,
}

impl TrussLabels {
    /// Largest trussness present; 0 for an edgeless graph.
    pub fn max_order(&self) -> u32 {
        self.max_order
    }

    pub fn get(&self, e: Edge) -> Option<u32> {
        self.labels
            .binary_search_by_key(&e, |&(x, _)| x)
            .ok()
            .map(|i| self.labels[i].1)
    }

    /// `(edge, trussness)` sorted by edge.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        self.labels.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Edges of the k-truss, sorted.
    pub fn k_truss(&self, k: u32) -> Vec<Edge> {
        self.labels
            .iter()
            .filter(|&&(_, t)| t >= k)
            .map(|&(e, _)| e)
            .collect()
    }
}

/// Full truss decomposition; `sup` must match `s` and is left unchanged.
pub fn truss_decomposition(s: &Snapshot, sup: &SupportMap) -> TrussLabels {
    let d = peel(s, sup);
    let mut labels: Vec<(Edge, u32)> = s.edges.iter().copied().zip(d.trussness).collect();
    labels.sort_unstable();
    TrussLabels {
        labels,
        max_order: d.max_order,
    }
}

/// The non-empty k-truss with the largest k, as `(k*, sorted edges)`.
pub fn innermost_truss(labels: &TrussLabels) -> Result<(u32, Vec<Edge>), TrussError> {
    if labels.is_empty() {
        return Err(TrussError::NoTruss);
    }
    Ok((labels.max_order, labels.k_truss(labels.max_order)))
}
