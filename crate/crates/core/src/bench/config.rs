//! Run-matrix configuration, read from TOML.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::dpp::{SelectionStrategy, SimilarityMode};
use crate::error::{config, Result};
use crate::indicators::{default_pop_size, DEFAULT_HV_SAMPLES};
use crate::moea::DEFAULT_MAX_EVALS;
use crate::problems::{ProblemKind, ProblemSpec};

pub const DEFAULT_SEEDS: u64 = 5;
pub const DEFAULT_TRACE_EVERY: usize = 10;

/// Either a replicate count (seeds `0..n`) or explicit seed values.
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Seeds {
    Count(u64),
    List(Vec<u64>),
}

impl Default for Seeds {
    fn default() -> Self {
        Seeds::Count(DEFAULT_SEEDS)
    }
}

impl Seeds {
    pub fn values(&self) -> Vec<u64> {
        match self {
            Seeds::Count(n) => (0..*n).collect(),
            Seeds::List(v) => v.clone(),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    problems: Vec<String>,
    objectives: Vec<usize>,
    pop_size: Option<usize>,
    max_evals: Option<usize>,
    strategies: Option<Vec<String>>,
    kernel: Option<String>,
    seeds: Option<Seeds>,
    out_dir: Option<PathBuf>,
    trace_every: Option<usize>,
    hv_samples: Option<usize>,
    reference_points: Option<usize>,
}

/// A validated run matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub problems: Vec<ProblemKind>,
    pub objectives: Vec<usize>,
    pub pop_size: Option<usize>,
    pub max_evals: usize,
    pub strategies: Vec<SelectionStrategy>,
    pub kernel: SimilarityMode,
    pub seeds: Vec<u64>,
    pub out_dir: Option<PathBuf>,
    /// Generations between IGD samples in persisted traces; 0 disables.
    pub trace_every: usize,
    pub hv_samples: usize,
    /// Size of the IGD reference set; defaults by objective count.
    pub reference_points: Option<usize>,
}

impl BenchConfig {
    pub fn single(kind: ProblemKind, m: usize, strategy: SelectionStrategy, seed: u64, max_evals: usize) -> Self {
        Self {
            problems: vec![kind],
            objectives: vec![m],
            pop_size: None,
            max_evals,
            strategies: vec![strategy],
            kernel: SimilarityMode::Cos,
            seeds: vec![seed],
            out_dir: None,
            trace_every: DEFAULT_TRACE_EVERY,
            hv_samples: DEFAULT_HV_SAMPLES,
            reference_points: None,
        }
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| {
            let key = e
                .span()
                .and_then(|s| text.get(s))
                .map(|k| k.split('=').next().unwrap_or(k).trim().to_string())
                .unwrap_or_else(|| "<file>".to_string());
            config(key, e.message().to_string())
        })?;
        Self::from_raw(raw)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }

    fn from_raw(raw: RawConfig) -> Result<Self> {
        let problems = raw
            .problems
            .iter()
            .map(|p| p.parse::<ProblemKind>().map_err(|_| config("problems", format!("unknown problem `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        if problems.is_empty() {
            return Err(config("problems", "at least one problem is required"));
        }
        if raw.objectives.is_empty() {
            return Err(config("objectives", "at least one objective count is required"));
        }
        if let Some(&m) = raw.objectives.iter().find(|&&m| m < 2) {
            return Err(config("objectives", format!("objective count {m} is below 2")));
        }
        let strategies = match raw.strategies {
            Some(list) if list.is_empty() => return Err(config("strategies", "empty strategy list")),
            Some(list) => list.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()?,
            None => vec![SelectionStrategy::Dpp],
        };
        let kernel = match raw.kernel {
            Some(k) => k.parse()?,
            None => SimilarityMode::Cos,
        };
        let seeds = raw.seeds.unwrap_or_default().values();
        if seeds.is_empty() {
            return Err(config("seeds", "no seeds to run"));
        }
        let cfg = Self {
            problems,
            objectives: raw.objectives,
            pop_size: raw.pop_size,
            max_evals: raw.max_evals.unwrap_or(DEFAULT_MAX_EVALS),
            strategies,
            kernel,
            seeds,
            out_dir: raw.out_dir,
            trace_every: raw.trace_every.unwrap_or(DEFAULT_TRACE_EVERY),
            hv_samples: raw.hv_samples.unwrap_or(DEFAULT_HV_SAMPLES),
            reference_points: raw.reference_points,
        };
        for &m in &cfg.objectives {
            cfg.pop_size_for(m)?;
        }
        Ok(cfg)
    }

    /// Population size for `m` objectives: the explicit override, else the
    /// default lookup.
    pub fn pop_size_for(&self, m: usize) -> Result<usize> {
        let n = match self.pop_size {
            Some(n) => n,
            None => default_pop_size(m).ok_or_else(|| {
                config("pop_size", format!("no default population size for {m} objectives; set pop_size"))
            })?,
        };
        if n < 2 {
            return Err(config("pop_size", format!("population size {n} is below 2")));
        }
        if self.max_evals < n {
            return Err(config("max_evals", format!("budget {} is below population size {n}", self.max_evals)));
        }
        Ok(n)
    }

    /// Every cell of the matrix in (problem, M, strategy, seed) order.
    pub fn cells(&self) -> Result<Vec<Cell>> {
        let mut cells = Vec::new();
        for &kind in &self.problems {
            for &m in &self.objectives {
                let spec = ProblemSpec::new(kind, m)?;
                let n = self.pop_size_for(m)?;
                for &strategy in &self.strategies {
                    for &seed in &self.seeds {
                        cells.push(Cell {
                            spec: spec.clone(),
                            n,
                            strategy,
                            kernel: self.kernel,
                            seed,
                        });
                    }
                }
            }
        }
        Ok(cells)
    }
}

/// One (problem, M, strategy, seed) run.
#[derive(Clone, Debug, PartialEq)]
pub struct Cell {
    pub spec: ProblemSpec,
    pub n: usize,
    pub strategy: SelectionStrategy,
    pub kernel: SimilarityMode,
    pub seed: u64,
}

impl Cell {
    pub fn label(&self) -> String {
        format!(
            "{}_M{}_{}_{}_s{}",
            self.spec.name(),
            self.spec.m,
            self.strategy,
            self.kernel,
            self.seed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn parses_full_config() {
        let cfg = BenchConfig::from_toml_str(
            r#"
            problems = ["dtlz2", "WFG4"]
            objectives = [5, 10]
            max_evals = 2000
            strategies = ["dpp", "uniform"]
            kernel = "expneg"
            seeds = [3, 9]
            out_dir = "out"
            "#,
        )
        .unwrap();
        assert_eq!(cfg.problems, vec![ProblemKind::Dtlz2, ProblemKind::Wfg4]);
        assert_eq!(cfg.kernel, SimilarityMode::ExpNegCos);
        assert_eq!(cfg.seeds, vec![3, 9]);
        assert_eq!(cfg.pop_size_for(10).unwrap(), 230);
        assert_eq!(cfg.cells().unwrap().len(), 2 * 2 * 2 * 2);
    }

    #[test]
    fn defaults() {
        let cfg = BenchConfig::from_toml_str("problems = [\"dtlz1\"]\nobjectives = [5]\n").unwrap();
        assert_eq!(cfg.max_evals, 100_000);
        assert_eq!(cfg.seeds, vec![0, 1, 2, 3, 4]);
        assert_eq!(cfg.strategies, vec![SelectionStrategy::Dpp]);
        assert_eq!(cfg.kernel, SimilarityMode::Cos);
        assert_eq!(cfg.trace_every, 10);
    }

    fn key_of(text: &str) -> String {
        match BenchConfig::from_toml_str(text) {
            Err(Error::Config { key, .. }) => key,
            other => panic!("expected config error, got {other:?}"),
        }
    }

    #[test]
    fn errors_name_the_key() {
        assert_eq!(key_of("problems = [\"zdt1\"]\nobjectives = [5]"), "problems");
        assert_eq!(key_of("problems = [\"dtlz2\"]\nobjectives = [5]\nstrategies = [\"best\"]"), "strategies");
        assert_eq!(key_of("problems = [\"dtlz2\"]\nobjectives = [5]\nkernel = \"rbf\""), "kernel");
        assert_eq!(key_of("problems = [\"dtlz2\"]\nobjectives = [7]"), "pop_size");
    }
}
