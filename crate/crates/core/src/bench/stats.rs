//! Rank-sum significance testing and strategy comparison tables.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};
use statrs::statistics::{Data, Median, Statistics};

use super::record::{sci, RunRecord};
use crate::error::{contract, Result};

pub const ALPHA: f64 = 0.05;
pub const MIN_SAMPLE: usize = 5;

/// Midranks (1-based) of `values`, ties sharing their average rank.
fn midranks(values: &[f64]) -> (Vec<f64>, f64) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut tie_term = 0.0;
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let avg = (start + end + 1) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = avg;
        }
        let t = (end - start) as f64;
        tie_term += t * t * t - t;
        start = end;
    }
    (ranks, tie_term)
}

/// Two-sided Wilcoxon rank-sum p-value.
///
/// Normal approximation with tie-corrected variance and a 0.5 continuity
/// correction.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() < MIN_SAMPLE || b.len() < MIN_SAMPLE {
        return Err(contract(format!(
            "rank-sum test needs at least {MIN_SAMPLE} values per sample, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let n1 = a.len() as f64;
    let n2 = b.len() as f64;
    let total = n1 + n2;
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let (ranks, tie_term) = midranks(&pooled);
    let w: f64 = ranks[..a.len()].iter().sum();
    let mean = n1 * (total + 1.0) / 2.0;
    let var = n1 * n2 / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
    if var <= 0.0 {
        return Ok(1.0);
    }
    let z = ((w - mean).abs() - 0.5).max(0.0) / var.sqrt();
    let normal = Normal::standard();
    Ok((2.0 * normal.sf(z)).min(1.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Better,
    Worse,
    Similar,
}

impl Verdict {
    pub fn symbol(self) -> &'static str {
        match self {
            Verdict::Better => "+",
            Verdict::Worse => "-",
            Verdict::Similar => "=",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Better => "BETTER",
            Verdict::Worse => "WORSE",
            Verdict::Similar => "SIMILAR",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SampleStats {
    pub median: f64,
    pub mean: f64,
    pub std: f64,
    pub count: usize,
}

impl SampleStats {
    pub fn of(values: &[f64]) -> Self {
        let std = if values.len() > 1 { values.std_dev() } else { 0.0 };
        Self {
            median: Data::new(values.to_vec()).median(),
            mean: values.mean(),
            std,
            count: values.len(),
        }
    }
}

/// IGD of `strategy` against `baseline` on one (problem, M, kernel) cell.
/// The verdict is from `strategy`'s side; lower IGD is better.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonResult {
    pub problem: String,
    pub m: usize,
    pub kernel: String,
    pub strategy: String,
    pub baseline: String,
    pub strategy_stats: SampleStats,
    pub baseline_stats: SampleStats,
    pub p_value: f64,
    pub verdict: Verdict,
}

pub fn compare_samples(a: &[f64], b: &[f64]) -> Result<(f64, Verdict)> {
    let p = wilcoxon_rank_sum(a, b)?;
    let verdict = if p >= ALPHA {
        Verdict::Similar
    } else if SampleStats::of(a).median < SampleStats::of(b).median {
        Verdict::Better
    } else {
        Verdict::Worse
    };
    Ok((p, verdict))
}

type CellKey = (String, usize, String);

/// Compares every non-baseline strategy with `baseline` cell by cell.
/// Cells lacking the baseline are skipped.
pub fn summarize(records: &[RunRecord], baseline: &str) -> Result<Vec<ComparisonResult>> {
    let mut cells: BTreeMap<CellKey, BTreeMap<String, Vec<f64>>> = BTreeMap::new();
    for r in records {
        cells
            .entry((r.problem.clone(), r.m, r.kernel.clone()))
            .or_default()
            .entry(r.strategy.clone())
            .or_default()
            .push(r.igd);
    }
    let mut out = Vec::new();
    for ((problem, m, kernel), by_strategy) in cells {
        let Some(base) = by_strategy.get(baseline) else {
            continue;
        };
        for (strategy, values) in &by_strategy {
            if strategy == baseline {
                continue;
            }
            let (p_value, verdict) = compare_samples(values, base)?;
            out.push(ComparisonResult {
                problem: problem.clone(),
                m,
                kernel: kernel.clone(),
                strategy: strategy.clone(),
                baseline: baseline.to_string(),
                strategy_stats: SampleStats::of(values),
                baseline_stats: SampleStats::of(base),
                p_value,
                verdict,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Totals {
    pub better: usize,
    pub worse: usize,
    pub similar: usize,
}

pub fn totals(results: &[ComparisonResult]) -> Totals {
    let mut t = Totals::default();
    for r in results {
        match r.verdict {
            Verdict::Better => t.better += 1,
            Verdict::Worse => t.worse += 1,
            Verdict::Similar => t.similar += 1,
        }
    }
    t
}

/// Markdown table of medians, p-values and verdicts with a totals row.
pub fn markdown(results: &[ComparisonResult]) -> String {
    let mut s = String::new();
    s.push_str("| problem | M | kernel | strategy | median IGD | baseline | median IGD | p | |\n");
    s.push_str("|---|---|---|---|---|---|---|---|---|\n");
    for r in results {
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.problem,
            r.m,
            r.kernel,
            r.strategy,
            sci(r.strategy_stats.median),
            r.baseline,
            sci(r.baseline_stats.median),
            sci(r.p_value),
            r.verdict.symbol()
        );
    }
    let t = totals(results);
    let _ = writeln!(s, "| +/-/= | | | | | | | | {}/{}/{} |", t.better, t.worse, t.similar);
    s
}
