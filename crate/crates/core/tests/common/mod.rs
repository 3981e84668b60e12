//! Brute-force references that share no code path with the library's
//! snapshot, support or peeling machinery.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use spantruss::{Edge, Interval, TemporalGraph};

pub type EdgeSet = BTreeSet<(u32, u32)>;

pub fn pair(e: Edge) -> (u32, u32) {
    e.endpoints()
}

/// Triangles containing `(a, b)` whose other two edges are also in `edges`.
fn support_within(edges: &EdgeSet, (a, b): (u32, u32)) -> usize {
    let neighbours = |x: u32| -> BTreeSet<u32> {
        edges
            .iter()
            .filter_map(|&(p, q)| {
                if p == x {
                    Some(q)
                } else if q == x {
                    Some(p)
                } else {
                    None
                }
            })
            .collect()
    };
    neighbours(a).intersection(&neighbours(b)).count()
}

/// The k-truss as the fixpoint of deleting every edge with fewer than
/// `k - 2` triangles inside the surviving subgraph.
pub fn k_truss_fixpoint(edges: &EdgeSet, k: u32) -> EdgeSet {
    let mut current = edges.clone();
    loop {
        let weak: Vec<(u32, u32)> = current
            .iter()
            .copied()
            .filter(|&e| (support_within(&current, e) as u32) + 2 < k)
            .collect();
        if weak.is_empty() {
            return current;
        }
        for e in weak {
            current.remove(&e);
        }
    }
}

/// Largest k for which each edge survives the fixpoint.
pub fn trussness_fixpoint(edges: &EdgeSet) -> BTreeMap<(u32, u32), u32> {
    let mut out: BTreeMap<(u32, u32), u32> = edges.iter().map(|&e| (e, 2)).collect();
    let mut k = 3;
    loop {
        let t = k_truss_fixpoint(edges, k);
        if t.is_empty() {
            return out;
        }
        for e in t {
            out.insert(e, k);
        }
        k += 1;
    }
}

/// Intersection of per-timestamp edge sets, done with plain sets.
pub fn interval_edges_direct(g: &TemporalGraph, d: Interval) -> EdgeSet {
    let mut acc: EdgeSet = g.edges_at(d.start()).iter().map(|&e| pair(e)).collect();
    for t in d.start() + 1..=d.end() {
        let here: EdgeSet = g.edges_at(t).iter().map(|&e| pair(e)).collect();
        acc = acc.intersection(&here).copied().collect();
    }
    acc
}

/// Every non-empty span-truss `(k, Δ, edges)` for every k and Δ.
pub fn all_span_trusses(g: &TemporalGraph) -> Vec<(u32, Interval, EdgeSet)> {
    let mut out = Vec::new();
    let nt = g.num_timestamps();
    for s in 0..nt {
        for e in s..nt {
            let span = Interval::new(s, e).unwrap();
            let edges = interval_edges_direct(g, span);
            if edges.is_empty() {
                break;
            }
            let mut k = 2;
            loop {
                let t = k_truss_fixpoint(&edges, k);
                if t.is_empty() {
                    break;
                }
                out.push((k, span, t));
                k += 1;
            }
        }
    }
    out
}

/// Maximal span-trusses straight from the domination definition, applied
/// over all span-trusses (not only innermost ones).
pub fn maximal_by_definition(g: &TemporalGraph) -> BTreeSet<(u32, Interval, EdgeSet)> {
    let all = all_span_trusses(g);
    all.iter()
        .filter(|(k, d, _)| {
            !all.iter().any(|(k2, d2, _)| {
                k2 >= k && d2.contains(*d) && (k2, d2) != (k, d)
            })
        })
        .cloned()
        .collect()
}

pub fn as_triples(set: &spantruss::MaximalSet) -> BTreeSet<(u32, Interval, EdgeSet)> {
    set.iter()
        .map(|t| (t.order(), t.span(), t.edges().iter().map(|&e| pair(e)).collect()))
        .collect()
}
