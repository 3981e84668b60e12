use std::fs::File;
use std::io::{BufWriter, Write};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use spantruss::ingest::{self, IngestedGraph};
use spantruss::miner::{mine, MineOptions};
use spantruss::{compute_supports, synth, truss_decomposition, Algorithm, Interval, Snapshot};

use crate::args::{BenchArgs, Command, DecomposeArgs, GenerateArgs, InputArgs, MineArgs};
use crate::bench::{run_bench, write_reports, Strategy};
use crate::CliError;

pub fn run(command: &Command, out: &mut dyn Write, notice: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Mine(a) => cmd_mine(a, out),
        Command::Bench(a) => cmd_bench(a, out),
        Command::Decompose(a) => cmd_decompose(a, out, notice),
        Command::Generate(a) => cmd_generate(a),
    }
}

fn load(input: &InputArgs) -> Result<IngestedGraph, CliError> {
    let g = ingest::load_path(&input.input, &input.ingest_config())?;
    log::info!(
        "loaded {}: {} vertices, {} timestamps, {} temporal edges",
        input.input.display(),
        g.graph.num_vertices(),
        g.graph.num_timestamps(),
        g.graph.num_temporal_edges()
    );
    Ok(g)
}

#[derive(Serialize)]
struct TrussLine {
    k: u32,
    t_start: usize,
    t_end: usize,
    num_edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<(u32, u32)>>,
}

pub fn cmd_mine(a: &MineArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let ing = load(&a.input)?;
    let algo: Algorithm = a.algo.into();
    let outcome = mine(&ing.graph, algo, MineOptions { paranoid: a.paranoid })?;
    log::info!("{algo}: {} maximal span-trusses, {:?}", outcome.set.len(), outcome.stats);

    let mut w = BufWriter::new(out);
    for t in outcome.set.iter().filter(|t| t.order() >= a.min_k) {
        let line = TrussLine {
            k: t.order(),
            t_start: t.span().start(),
            t_end: t.span().end(),
            num_edges: t.edges().len(),
            edges: a
                .emit_edges
                .then(|| t.edges().iter().map(|e| e.endpoints()).collect()),
        };
        serde_json::to_writer(&mut w, &line)?;
        writeln!(w)?;
    }
    w.flush()?;

    if let Some(path) = &a.vertex_map {
        let mut vm = csv::Writer::from_path(path)?;
        vm.write_record(["id", "label"])?;
        for (id, label) in ing.labels.iter().enumerate() {
            vm.write_record([id.to_string().as_str(), label])?;
        }
        vm.flush()?;
    }
    Ok(())
}

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let ing = load(&a.input)?;
    let dataset = a.dataset.clone().unwrap_or_else(|| {
        a.input
            .input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    });
    let algos: Vec<Algorithm> = a.algos.iter().map(|&x| x.into()).collect();
    let strategies: Vec<&dyn Strategy> = algos.iter().map(|x| x as &dyn Strategy).collect();
    let reports = run_bench(&dataset, &ing.graph, &strategies)?;
    write_reports(out, &reports, a.output)
}

#[derive(Serialize)]
struct EdgeTruss {
    u: u32,
    v: u32,
    trussness: u32,
}

#[derive(Serialize)]
struct DecomposeOutput {
    t_start: usize,
    t_end: usize,
    num_edges: usize,
    innermost: Option<u32>,
    edges: Vec<EdgeTruss>,
}

pub fn cmd_decompose(
    a: &DecomposeArgs,
    out: &mut dyn Write,
    notice: &mut dyn Write,
) -> Result<(), CliError> {
    let span = Interval::new(a.t_start, a.t_end)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let ing = load(&a.input)?;
    let edges = ing
        .graph
        .interval_edges(span)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let s = Snapshot::from_edges(ing.graph.num_vertices(), &edges)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let labels = truss_decomposition(&s, &compute_supports(&s));
    if labels.is_empty() {
        writeln!(notice, "no edges are active throughout {span}")?;
    }
    let doc = DecomposeOutput {
        t_start: span.start(),
        t_end: span.end(),
        num_edges: labels.len(),
        innermost: (!labels.is_empty()).then(|| labels.max_order()),
        edges: labels
            .iter()
            .map(|(e, k)| EdgeTruss {
                u: e.u(),
                v: e.v(),
                trussness: k,
            })
            .collect(),
    };
    serde_json::to_writer(&mut *out, &doc)?;
    writeln!(out)?;
    Ok(())
}

pub fn cmd_generate(a: &GenerateArgs) -> Result<(), CliError> {
    let in_unit = |x: f64| (0.0..1.0).contains(&x);
    if !in_unit(a.density) || !in_unit(a.core_density) || !(0.0..=1.0).contains(&a.persistence) {
        return Err(CliError::Usage(
            "density must be in [0, 1) and persistence in [0, 1]".into(),
        ));
    }
    if a.core_size > a.vertices {
        return Err(CliError::Usage("core size exceeds vertex count".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let graph = synth::planted_core(
        &mut rng,
        a.vertices,
        a.timestamps,
        a.density,
        a.persistence,
        a.core_size,
        a.core_density,
        1.0,
    );
    let labels = (0..graph.num_vertices()).map(|i| i.to_string()).collect();
    let w = BufWriter::new(File::create(&a.output)?);
    ingest::write_json(w, &IngestedGraph { graph, labels })?;
    Ok(())
}
