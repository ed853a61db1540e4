//! Benchmark harness: run matrices, result CSVs and strategy comparison.

mod config;
mod record;
mod stats;

use std::fs;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

pub use config::{BenchConfig, Cell, Seeds, DEFAULT_SEEDS, DEFAULT_TRACE_EVERY};
pub use record::{read_csv, sci, write_csv, RunRecord, CSV_HEADER};
pub use stats::{
    compare_samples, markdown, summarize, totals, wilcoxon_rank_sum, ComparisonResult, SampleStats, Totals,
    Verdict, ALPHA, MIN_SAMPLE,
};

use crate::error::{Error, Result};
use crate::indicators::{igd, normalized_hv};
use crate::moea::{run_with_reference, AlgoConfig};
use crate::problems::{reference_size, true_pf_sample, ProblemKind, ProblemSpec};
use crate::rng::RngStream;

/// Version of the result CSV layout.
pub const SCHEMA_VERSION: &str = "1";

const REFERENCE_SEED: u64 = 0x5EED_F407;
const HV_STREAM: u64 = 1;

/// The IGD reference set used for `spec`: a fixed-seed true-front sample.
pub fn reference_front(spec: &ProblemSpec, size: Option<usize>) -> Result<Vec<Vec<f64>>> {
    let kind_id = ProblemKind::ALL.iter().position(|&k| k == spec.kind).unwrap_or(0) as u64;
    let mut rng = RngStream::new(REFERENCE_SEED).substream(kind_id * 1000 + spec.m as u64);
    true_pf_sample(spec, size.unwrap_or_else(|| reference_size(spec.m)), &mut rng)
}

/// Runs one cell against a precomputed reference front.
pub fn run_cell(
    cell: &Cell,
    cfg: &BenchConfig,
    reference: &[Vec<f64>],
    trace_dir: Option<&Path>,
) -> Result<RunRecord> {
    let start = Instant::now();
    let mut algo = AlgoConfig::new(cell.spec.clone(), cell.n, cell.seed)
        .with_max_evals(cfg.max_evals)
        .with_strategy(cell.strategy)
        .with_similarity(cell.kernel);
    let tracing = trace_dir.is_some() && cfg.trace_every > 0;
    if tracing {
        algo.trace_every = Some(cfg.trace_every);
    }
    let result = run_with_reference(&algo, tracing.then_some(reference))?;
    let front = result.front();
    let igd_value = igd(&front, reference);
    let mut hv_rng = RngStream::new(cell.seed).substream(HV_STREAM);
    let hv_value = normalized_hv(&front, reference, cfg.hv_samples, &mut hv_rng)?;
    let trace_path = match trace_dir {
        Some(dir) if tracing => {
            fs::create_dir_all(dir)?;
            let path = dir.join(format!("{}.json", cell.label()));
            let kept: Vec<_> = result.trace.iter().filter(|t| t.igd.is_some()).collect();
            fs::write(&path, serde_json::to_string_pretty(&kept)?)?;
            Some(path)
        }
        _ => None,
    };
    Ok(RunRecord {
        problem: cell.spec.name().to_string(),
        m: cell.spec.m,
        d: cell.spec.d,
        n: cell.n,
        strategy: cell.strategy.to_string(),
        kernel: cell.kernel.to_string(),
        seed: cell.seed,
        evals: result.evaluations,
        igd: igd_value,
        hv: hv_value,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
        trace_path,
    })
}

/// Outcome of a whole matrix: completed rows in cell order plus failures.
#[derive(Debug, Default)]
pub struct MatrixReport {
    pub records: Vec<RunRecord>,
    pub failures: Vec<(String, Error)>,
}

impl MatrixReport {
    pub fn is_complete(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Executes every cell. Each cell is seeded on its own, so `parallel` only
/// affects wall time, never the rows.
pub fn run_matrix(cfg: &BenchConfig, parallel: bool) -> Result<MatrixReport> {
    let cells = cfg.cells()?;
    let mut references: Vec<((ProblemKind, usize), Vec<Vec<f64>>)> = Vec::new();
    for cell in &cells {
        let key = (cell.spec.kind, cell.spec.m);
        if !references.iter().any(|(k, _)| *k == key) {
            references.push((key, reference_front(&cell.spec, cfg.reference_points)?));
        }
    }
    let trace_dir = cfg.out_dir.as_ref().map(|d| d.join("traces"));
    let work = |cell: &Cell| {
        let reference = references
            .iter()
            .find(|(k, _)| *k == (cell.spec.kind, cell.spec.m))
            .map(|(_, r)| r.as_slice())
            .unwrap_or_default();
        run_cell(cell, cfg, reference, trace_dir.as_deref())
    };
    let outcomes: Vec<Result<RunRecord>> = if parallel {
        cells.par_iter().map(work).collect()
    } else {
        cells.iter().map(work).collect()
    };
    let mut report = MatrixReport::default();
    for (cell, outcome) in cells.iter().zip(outcomes) {
        match outcome {
            Ok(r) => report.records.push(r),
            Err(e) => report.failures.push((cell.label(), e)),
        }
    }
    Ok(report)
}

/// Front sample as CSV with columns `f1..fM`.
pub fn write_points<W: std::io::Write>(out: W, points: &[Vec<f64>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if let Some(first) = points.first() {
        w.write_record((1..=first.len()).map(|i| format!("f{i}")))?;
    }
    for p in points {
        w.write_record(p.iter().map(|&v| format!("{v:.17e}")))?;
    }
    w.flush()?;
    Ok(())
}
