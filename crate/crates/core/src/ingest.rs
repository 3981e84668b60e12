//! Reading timestamped edge lists and binning them into a [`TemporalGraph`].
//!
//! Supported inputs:
//!
//! * `konect`: whitespace separated `u v weight timestamp`, weight ignored
//! * `snap`: whitespace separated `u v timestamp`
//! * `csv`: comma separated with a header row, columns `u,v,timestamp`
//! * `json`: the internal snapshot format written by [`write_json`]
//!
//! Lines starting with `%` or `#` and blank lines are skipped in the text
//! formats. Vertex labels are arbitrary strings.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::IngestError;
use crate::tgraph::{Edge, TemporalGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InputFormat {
    Konect,
    Snap,
    Csv,
    Json,
}

impl InputFormat {
    pub fn name(self) -> &'static str {
        match self {
            InputFormat::Konect => "konect",
            InputFormat::Snap => "snap",
            InputFormat::Csv => "csv",
            InputFormat::Json => "json",
        }
    }
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InputFormat {
    type Err = IngestError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "konect" => Ok(InputFormat::Konect),
            "snap" => Ok(InputFormat::Snap),
            "csv" => Ok(InputFormat::Csv),
            "json" => Ok(InputFormat::Json),
            _ => Err(IngestError::UnknownFormat(s.to_string())),
        }
    }
}

/// One interaction as read from the file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTemporalEdge {
    pub u: String,
    pub v: String,
    /// Seconds since the epoch.
    pub timestamp: u64,
    /// 1-based source line.
    pub line: u64,
}

#[derive(Debug, Clone)]
pub struct IngestConfig {
    /// Length of one discrete timestamp, in seconds.
    pub window_seconds: u64,
    pub format: InputFormat,
    pub drop_self_loops: bool,
}

impl Default for IngestConfig {
    fn default() -> Self {
        IngestConfig {
            window_seconds: 1,
            format: InputFormat::Konect,
            drop_self_loops: true,
        }
    }
}

/// A binned graph plus the original label of every vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestedGraph {
    pub graph: TemporalGraph,
    /// `labels[i]` is the source label of vertex `i`.
    pub labels: Vec<String>,
}

/// Reads raw edges in file order. Not applicable to [`InputFormat::Json`].
pub fn parse_edges<R: Read>(
    input: R,
    format: InputFormat,
) -> Result<Vec<RawTemporalEdge>, IngestError> {
    match format {
        InputFormat::Konect => parse_whitespace(input, 4, 3),
        InputFormat::Snap => parse_whitespace(input, 3, 2),
        InputFormat::Csv => parse_csv(input),
        InputFormat::Json => Err(IngestError::UnknownFormat(
            "json is a graph snapshot, not an edge list".into(),
        )),
    }
}

fn parse_timestamp(field: &str, line: u64) -> Result<u64, IngestError> {
    field.parse::<u64>().map_err(|_| IngestError::Malformed {
        line,
        message: format!("invalid timestamp '{field}'"),
    })
}

fn parse_whitespace<R: Read>(
    input: R,
    min_fields: usize,
    ts_field: usize,
) -> Result<Vec<RawTemporalEdge>, IngestError> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(input).lines().enumerate() {
        let line = line?;
        let lineno = i as u64 + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() < min_fields {
            return Err(IngestError::Malformed {
                line: lineno,
                message: format!("expected {min_fields} fields, found {}", fields.len()),
            });
        }
        out.push(RawTemporalEdge {
            u: fields[0].to_string(),
            v: fields[1].to_string(),
            timestamp: parse_timestamp(fields[ts_field], lineno)?,
            line: lineno,
        });
    }
    Ok(out)
}

fn parse_csv<R: Read>(input: R) -> Result<Vec<RawTemporalEdge>, IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(input);
    let mut out = Vec::new();
    for record in reader.records() {
        let record = record?;
        let lineno = record.position().map_or(0, |p| p.line());
        if record.len() < 3 {
            return Err(IngestError::Malformed {
                line: lineno,
                message: format!("expected 3 columns, found {}", record.len()),
            });
        }
        out.push(RawTemporalEdge {
            u: record[0].to_string(),
            v: record[1].to_string(),
            timestamp: parse_timestamp(&record[2], lineno)?,
            line: lineno,
        });
    }
    Ok(out)
}

/// Bins raw edges into windows anchored at the earliest surviving timestamp.
///
/// Vertex ids follow first appearance. Repeated interactions inside one
/// window collapse to a single edge and direction is discarded.
pub fn build_temporal_graph(
    edges: &[RawTemporalEdge],
    cfg: &IngestConfig,
) -> Result<IngestedGraph, IngestError> {
    if cfg.window_seconds == 0 {
        return Err(IngestError::ZeroWindow);
    }
    let mut kept = Vec::with_capacity(edges.len());
    for e in edges {
        if e.u == e.v {
            if cfg.drop_self_loops {
                continue;
            }
            return Err(IngestError::SelfLoop {
                label: e.u.clone(),
                line: e.line,
            });
        }
        kept.push(e);
    }
    let Some(t0) = kept.iter().map(|e| e.timestamp).min() else {
        return Err(IngestError::EmptyGraph);
    };

    let mut ids: FxHashMap<&str, VertexId> = FxHashMap::default();
    let mut labels: Vec<String> = Vec::new();
    let mut edges_at: Vec<Vec<Edge>> = Vec::new();
    for e in kept {
        let a = intern(&mut ids, &mut labels, &e.u);
        let b = intern(&mut ids, &mut labels, &e.v);
        let bin = ((e.timestamp - t0) / cfg.window_seconds) as usize;
        if edges_at.len() <= bin {
            edges_at.resize_with(bin + 1, Vec::new);
        }
        edges_at[bin].push(Edge::new(a, b)?);
    }
    let graph = TemporalGraph::new(labels.len(), edges_at)?;
    Ok(IngestedGraph { graph, labels })
}

fn intern<'a>(
    ids: &mut FxHashMap<&'a str, VertexId>,
    labels: &mut Vec<String>,
    label: &'a str,
) -> VertexId {
    *ids.entry(label).or_insert_with(|| {
        labels.push(label.to_string());
        (labels.len() - 1) as VertexId
    })
}

/// Parses `input` according to `cfg.format` and builds the graph.
pub fn load<R: Read>(input: R, cfg: &IngestConfig) -> Result<IngestedGraph, IngestError> {
    match cfg.format {
        InputFormat::Json => read_json(input),
        format => build_temporal_graph(&parse_edges(input, format)?, cfg),
    }
}

pub fn load_path(path: &Path, cfg: &IngestConfig) -> Result<IngestedGraph, IngestError> {
    load(File::open(path)?, cfg)
}

/// Writes the internal JSON snapshot:
/// `{"graph":{"num_vertices":N,"edges_at":[[[u,v],...],...]},"labels":[...]}`.
pub fn write_json<W: Write>(w: W, g: &IngestedGraph) -> Result<(), IngestError> {
    serde_json::to_writer(w, g)?;
    Ok(())
}

/// Reads the internal JSON snapshot. An empty `labels` array means each
/// vertex is labelled by its id.
pub fn read_json<R: Read>(r: R) -> Result<IngestedGraph, IngestError> {
    let mut g: IngestedGraph = serde_json::from_reader(BufReader::new(r))?;
    let n = g.graph.num_vertices();
    if g.labels.is_empty() {
        g.labels = (0..n).map(|i| i.to_string()).collect();
    } else if g.labels.len() != n {
        return Err(IngestError::Malformed {
            line: 0,
            message: format!("{} labels for {n} vertices", g.labels.len()),
        });
    }
    Ok(g)
}
