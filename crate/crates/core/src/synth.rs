//! Random temporal graphs for tests and benchmarks.

use rand::Rng;

use crate::tgraph::{Edge, TemporalGraph, VertexId};

fn all_pairs(n: usize) -> Vec<Edge> {
    let n = n as VertexId;
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b).expect("a < b")))
        .collect()
}

/// Every vertex pair is active at every timestamp independently with
/// probability `p`.
pub fn uniform<R: Rng + ?Sized>(rng: &mut R, n: usize, num_timestamps: usize, p: f64) -> TemporalGraph {
    let pairs = all_pairs(n);
    let edges_at = (0..num_timestamps)
        .map(|_| pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect())
        .collect();
    TemporalGraph::new(n, edges_at).expect("generated edges are valid")
}

/// Two-state Markov chain per vertex pair with stationary density `density`.
///
/// An active edge stays active at the next timestamp with probability
/// `persistence`; inactive pairs switch on at the rate that keeps the
/// expected density constant. `persistence = 1` gives a static graph
/// repeated over every timestamp.
pub fn persistent<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    num_timestamps: usize,
    density: f64,
    persistence: f64,
) -> TemporalGraph {
    assert!((0.0..1.0).contains(&density), "density must be in [0, 1)");
    assert!((0.0..=1.0).contains(&persistence), "persistence must be in [0, 1]");
    let pairs = all_pairs(n);
    let birth = (density * (1.0 - persistence) / (1.0 - density)).min(1.0);
    let mut active: Vec<bool> = pairs.iter().map(|_| rng.gen_bool(density)).collect();
    let mut edges_at = Vec::with_capacity(num_timestamps);
    for t in 0..num_timestamps {
        if t > 0 {
            for on in active.iter_mut() {
                *on = if *on {
                    rng.gen_bool(persistence)
                } else {
                    rng.gen_bool(birth)
                };
            }
        }
        edges_at.push(
            pairs
                .iter()
                .zip(&active)
                .filter(|(_, &on)| on)
                .map(|(&e, _)| e)
                .collect(),
        );
    }
    TemporalGraph::new(n, edges_at).expect("generated edges are valid")
}

/// A persistent background over `n` vertices overlaid with a denser
/// persistent community on vertices `0..core_size`.
///
/// With `core_persistence` close to 1 the high-order truss stays put while
/// the periphery churns.
#[allow(clippy::too_many_arguments)]
pub fn planted_core<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    num_timestamps: usize,
    density: f64,
    persistence: f64,
    core_size: usize,
    core_density: f64,
    core_persistence: f64,
) -> TemporalGraph {
    assert!(core_size <= n, "core larger than graph");
    let background = persistent(rng, n, num_timestamps, density, persistence);
    let core = persistent(rng, core_size, num_timestamps, core_density, core_persistence);
    let edges_at = (0..num_timestamps)
        .map(|t| {
            let mut edges = background.edges_at(t).to_vec();
            edges.extend_from_slice(core.edges_at(t));
            edges
        })
        .collect();
    TemporalGraph::new(n, edges_at).expect("generated edges are valid")
}
