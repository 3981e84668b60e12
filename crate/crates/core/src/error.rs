use thiserror::Error;

use crate::tgraph::{Edge, Interval, Timestamp, VertexId};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex {vertex} at timestamp {timestamp} is out of range (num_vertices = {num_vertices})")]
    VertexOutOfRange {
        vertex: VertexId,
        num_vertices: usize,
        timestamp: Timestamp,
    },
    #[error("interval start {start} is after end {end}")]
    InvertedInterval { start: Timestamp, end: Timestamp },
    #[error("interval {interval} outside the time domain of {num_timestamps} timestamps")]
    IntervalOutOfRange {
        interval: Interval,
        num_timestamps: usize,
    },
    #[error("no edges are active at start timestamp {0}")]
    EmptyStart(Timestamp),
}

#[derive(Debug, Error)]
pub enum TrussError {
    #[error("edge {0} is already present in the snapshot")]
    DuplicateEdge(Edge),
    #[error("vertex {vertex} is out of range (num_vertices = {num_vertices})")]
    VertexOutOfRange { vertex: VertexId, num_vertices: usize },
    #[error("graph has no edges, so it has no truss")]
    NoTruss,
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {message}")]
    Malformed { line: u64, message: String },
    #[error("csv input: {0}")]
    Csv(#[from] csv::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("window size must be positive")]
    ZeroWindow,
    #[error("empty graph: no edges survived filtering")]
    EmptyGraph,
    #[error("self-loop on '{label}' at line {line}")]
    SelfLoop { label: String, line: u64 },
    #[error("unknown input format '{0}'")]
    UnknownFormat(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error)]
pub enum MinerError {
    #[error(
        "heuristic skip disagrees with decomposition on {span}: skipped with order {skipped}, decomposition gave {actual}"
    )]
    HeuristicDisagreement {
        span: Interval,
        skipped: u32,
        actual: u32,
    },
    #[error("unknown algorithm '{0}'")]
    UnknownAlgorithm(String),
}
