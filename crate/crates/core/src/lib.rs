//! Mining maximal (k, Δ)-trusses ("span-trusses") of temporal graphs.
//!
//! A temporal graph assigns an edge set to every discrete timestamp. For an
//! interval Δ, the static graph `G_Δ` keeps the edges present at every
//! timestamp of Δ, and its k-truss paired with Δ is a span-truss. A span-truss
//! is maximal when no other span-truss has both a larger-or-equal order and an
//! enclosing span.
//!
//! Four interchangeable strategies live in [`miner`]; the naive one is the
//! reference the others are checked against.

pub mod error;
pub mod ingest;
pub mod miner;
pub mod static_truss;
pub mod synth;
pub mod tgraph;

pub use error::{GraphError, IngestError, MinerError, TrussError};
pub use ingest::{build_temporal_graph, parse_edges, IngestConfig, IngestedGraph, InputFormat, RawTemporalEdge};
pub use miner::{
    filter_maximal, mine, mine_baseline, mine_heuristic, mine_naive, mine_streaming, Algorithm,
    LowerBoundState, MaximalSet, MineOptions, MiningOutcome, MiningStats, SpanTruss,
};
pub use static_truss::{
    compute_supports, innermost_truss, insert_edges_update, truss_decomposition, Snapshot,
    SupportMap, TrussLabels,
};
pub use tgraph::{interval_contains, DeltaEdgeSets, Edge, Interval, TemporalGraph, Timestamp, VertexId};
