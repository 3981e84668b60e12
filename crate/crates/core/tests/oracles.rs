mod common;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use spantruss::miner::{mine, Algorithm, MineOptions};
use spantruss::{
    compute_supports, innermost_truss, mine_baseline, mine_heuristic, mine_naive, mine_streaming,
    synth, truss_decomposition, Edge, Interval, Snapshot, TemporalGraph,
};

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize, max_t: usize) -> TemporalGraph {
    let n = rng.gen_range(3..=max_n);
    let t = rng.gen_range(1..=max_t);
    if rng.gen_bool(0.5) {
        let p = [0.2, 0.4, 0.6][rng.gen_range(0..3)];
        synth::uniform(rng, n, t, p)
    } else {
        let density = rng.gen_range(0.2..0.7);
        let persistence = rng.gen_range(0.6..=1.0);
        synth::persistent(rng, n, t, density, persistence)
    }
}

fn snapshot_of(g: &TemporalGraph, d: Interval) -> Snapshot {
    Snapshot::from_edges(g.num_vertices(), &g.interval_edges(d).unwrap()).unwrap()
}

#[test]
fn naive_matches_domination_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 8, 5);
        assert_eq!(as_triples(&mine_naive(&g)), maximal_by_definition(&g), "{g:?}");
    }
}

#[test]
fn fixture_matches_definition() {
    let g = TemporalGraph::from_triples([
        (0, 1, 0),
        (1, 2, 0),
        (0, 2, 0),
        (0, 1, 1),
        (1, 2, 1),
        (0, 2, 1),
        (0, 1, 2),
    ])
    .unwrap();
    let want: BTreeSet<_> = [
        (3, Interval::new(0, 1).unwrap(), [(0, 1), (0, 2), (1, 2)].into_iter().collect()),
        (2, Interval::new(0, 2).unwrap(), [(0, 1)].into_iter().collect()),
    ]
    .into_iter()
    .collect();
    assert_eq!(maximal_by_definition(&g), want);
    assert_eq!(
        interval_edges_direct(&g, Interval::new(0, 2).unwrap()),
        [(0, 1)].into_iter().collect()
    );
}

#[test]
fn k4_with_pendant_matches_fixpoint() {
    let edges: EdgeSet = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
        .into_iter()
        .collect();
    let truss = trussness_fixpoint(&edges);
    assert_eq!(truss[&(0, 4)], 3);
    assert_eq!(truss[&(1, 4)], 3);
    assert_eq!(truss.values().filter(|&&k| k == 4).count(), 6);
}

#[test]
fn decomposition_matches_fixpoint_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(2..=16);
        let p = rng.gen_range(0.1..0.8);
        let g = synth::uniform(&mut rng, n, 1, p);
        let s = Snapshot::from_edges(n, g.edges_at(0)).unwrap();
        let labels = truss_decomposition(&s, &compute_supports(&s));
        let oracle = trussness_fixpoint(&g.edges_at(0).iter().map(|&e| pair(e)).collect());
        let got: Vec<((u32, u32), u32)> = labels.iter().map(|(e, k)| (pair(e), k)).collect();
        let want: Vec<((u32, u32), u32)> = oracle.into_iter().collect();
        assert_eq!(got, want);
    }
}

#[test]
fn every_result_is_a_sound_innermost_truss() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 14, 6);
        let set = mine_streaming(&g);
        for t in &set {
            let span_edges = interval_edges_direct(&g, t.span());
            let edges: EdgeSet = t.edges().iter().map(|&e| pair(e)).collect();
            assert!(!edges.is_empty());
            assert!(edges.is_subset(&span_edges));
            // the edge set is closed under the k-2 triangle rule
            assert_eq!(k_truss_fixpoint(&edges, t.order()), edges);
            // and equals the innermost truss of its interval
            let s = snapshot_of(&g, t.span());
            let (k, inner) = innermost_truss(&truss_decomposition(&s, &compute_supports(&s))).unwrap();
            assert_eq!((k, inner.as_slice()), (t.order(), t.edges()));
        }
        for a in &set {
            for b in &set {
                if a != b {
                    assert!(!a.is_dominated_by(b), "{a:?} dominated by {b:?}");
                }
            }
        }
    }
}

#[test]
fn span_truss_containment() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let g = random_graph(&mut rng, 12, 5);
        let nt = g.num_timestamps();
        for _ in 0..20 {
            let (a, b) = (rng.gen_range(0..nt), rng.gen_range(0..nt));
            let outer = Interval::new(a.min(b), a.max(b)).unwrap();
            let s0 = rng.gen_range(outer.start()..=outer.end());
            let e0 = rng.gen_range(s0..=outer.end());
            let inner = Interval::new(s0, e0).unwrap();
            // T_{k, outer} ⊆ T_{k', inner} for k' <= k
            let lo = truss_decomposition(&snapshot_of(&g, inner), &compute_supports(&snapshot_of(&g, inner)));
            let hi = truss_decomposition(&snapshot_of(&g, outer), &compute_supports(&snapshot_of(&g, outer)));
            for k in 2..=hi.max_order() {
                let big: BTreeSet<Edge> = hi.k_truss(k).into_iter().collect();
                for k2 in 2..=k {
                    let small: BTreeSet<Edge> = lo.k_truss(k2).into_iter().collect();
                    assert!(big.is_subset(&small));
                }
            }
        }
    }
}

#[test]
fn four_strategies_agree_with_paranoid_heuristic() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 20, 8);
        let naive = mine_naive(&g);
        assert_eq!(mine_baseline(&g), naive);
        assert_eq!(mine_streaming(&g), naive);
        assert_eq!(mine_heuristic(&g), naive);
        let checked = mine(&g, Algorithm::Heuristic, MineOptions { paranoid: true }).unwrap();
        assert_eq!(checked.set, naive);
    }
}

#[test]
fn results_are_ordered() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for _ in 0..100 {
        let g = random_graph(&mut rng, 15, 7);
        let set = mine_heuristic(&g);
        let keys: Vec<_> = set
            .iter()
            .map(|t| (t.span().start(), std::cmp::Reverse(t.span().end()), std::cmp::Reverse(t.order())))
            .collect();
        assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn heuristic_skips_on_constant_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let g = synth::persistent(&mut rng, 25, 6, 0.4, 1.0);
    let out = mine(&g, Algorithm::Heuristic, MineOptions::default()).unwrap();
    // t* = t_max for every start, so each pass skips t* - t_s intervals
    assert_eq!(out.stats.skips, (0..6).map(|ts| 5 - ts).sum::<u64>());
    assert_eq!(out.stats.decompositions, 6);
    assert_eq!(out.set.len(), 1);
    assert_eq!(out.set.as_slice()[0].span(), Interval::new(0, 5).unwrap());
}
