//! The evolutionary main loop and DPP-based environmental selection.

use rand::Rng;
use serde::Serialize;

use crate::csa::{build_csa, update_csa, CornerArchive};
use crate::dpp::{
    build_kernel, dpp_select_greedy_with, kdpp_sample_layered, uniform_sample, EigenMethod,
    SelectionStrategy, SimilarityMode,
};
use crate::error::{contract, Result};
use crate::indicators::igd;
use crate::normalize::{update_ideal, update_nadir, NormalizationContext};
use crate::operators::{fill_mating_pool, init_population, variation, VariationParams};
use crate::pareto::nondominated_filter;
use crate::problems::ProblemSpec;
use crate::rng::RngStream;
use crate::solution::Population;

pub const DEFAULT_MAX_EVALS: usize = 100_000;

#[derive(Clone, Debug, PartialEq)]
pub struct AlgoConfig {
    pub problem: ProblemSpec,
    pub n: usize,
    pub max_evals: usize,
    pub variation: VariationParams,
    pub strategy: SelectionStrategy,
    pub similarity: SimilarityMode,
    pub eigen: EigenMethod,
    pub seed: u64,
    /// Record IGD in the trace every this many generations (needs a
    /// reference set at run time).
    pub trace_every: Option<usize>,
}

impl AlgoConfig {
    pub fn new(problem: ProblemSpec, n: usize, seed: u64) -> Self {
        let variation = VariationParams::for_dimension(problem.d);
        Self {
            problem,
            n,
            max_evals: DEFAULT_MAX_EVALS,
            variation,
            strategy: SelectionStrategy::Dpp,
            similarity: SimilarityMode::Cos,
            eigen: EigenMethod::default(),
            seed,
            trace_every: None,
        }
    }

    pub fn with_max_evals(mut self, max_evals: usize) -> Self {
        self.max_evals = max_evals;
        self
    }

    pub fn with_strategy(mut self, strategy: SelectionStrategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_similarity(mut self, similarity: SimilarityMode) -> Self {
        self.similarity = similarity;
        self
    }

    pub fn with_eigen(mut self, eigen: EigenMethod) -> Self {
        self.eigen = eigen;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(contract(format!("population size must be at least 2, got {}", self.n)));
        }
        if self.max_evals < self.n {
            return Err(contract(format!(
                "evaluation budget {} is below the population size {}",
                self.max_evals, self.n
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenerationTrace {
    pub generation: usize,
    pub evaluations: usize,
    /// FNV-1a over the bit patterns of the population's objective values.
    pub digest: u64,
    pub population_size: usize,
    pub ideal: Vec<f64>,
    pub igd: Option<f64>,
    pub hv: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct RunResult {
    pub population: Population,
    pub trace: Vec<GenerationTrace>,
    pub evaluations: usize,
}

impl RunResult {
    pub fn front(&self) -> Vec<Vec<f64>> {
        self.population.objectives()
    }
}

pub fn population_digest(pop: &Population) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for s in pop {
        for v in &s.f {
            for b in v.to_bits().to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        }
    }
    h
}

/// Survivors of `P ∪ C`.
///
/// Keeps the nondominated members; when more than `N` remain, builds the
/// kernel over them (normalized with `ctx`, threshold from the archive) and
/// keeps the `N` indices chosen by `strategy`, in population order.
#[allow(clippy::too_many_arguments)]
pub fn environmental_selection<R: Rng + ?Sized>(
    pop: &Population,
    offspring: &Population,
    n: usize,
    csa: &CornerArchive,
    ctx: &NormalizationContext,
    strategy: SelectionStrategy,
    similarity: SimilarityMode,
    eigen: EigenMethod,
    rng: &mut R,
) -> Result<Population> {
    let front = nondominated_filter(&pop.concat(offspring));
    if front.len() <= n {
        return Ok(front);
    }
    let mut chosen = match strategy {
        SelectionStrategy::Uniform => uniform_sample(front.len(), n, rng)?,
        SelectionStrategy::Dpp => {
            let l = build_kernel(&front, csa, ctx, similarity)?;
            dpp_select_greedy_with(&l, n, eigen)?
        }
        SelectionStrategy::KDpp => {
            let l = build_kernel(&front, csa, ctx, similarity)?;
            kdpp_sample_layered(&l, n, eigen, rng)?
        }
    };
    chosen.sort_unstable();
    Ok(front.select(&chosen))
}

pub fn run(config: &AlgoConfig) -> Result<RunResult> {
    run_with_reference(config, None)
}

/// Runs the algorithm; with a reference front and `trace_every`, IGD of the
/// population is recorded in the trace every that many generations.
pub fn run_with_reference(config: &AlgoConfig, reference: Option<&[Vec<f64>]>) -> Result<RunResult> {
    config.validate()?;
    let spec = &config.problem;
    let n = config.n;
    let mut rng = RngStream::new(config.seed);

    let mut pop = init_population(n, spec, &mut rng)?;
    let mut evaluations = n;
    let mut csa = build_csa(&pop, n, spec.m);
    let mut ctx = NormalizationContext::from_population(&pop)?;

    let snapshot = |generation: usize, evaluations: usize, pop: &Population, ctx: &NormalizationContext| {
        let igd_value = match (reference, config.trace_every) {
            (Some(r), Some(every)) if every > 0 && generation % every == 0 => Some(igd(&pop.objectives(), r)),
            _ => None,
        };
        GenerationTrace {
            generation,
            evaluations,
            digest: population_digest(pop),
            population_size: pop.len(),
            ideal: ctx.ideal.clone(),
            igd: igd_value,
            hv: None,
        }
    };
    let mut trace = vec![snapshot(0, evaluations, &pop, &ctx)];

    let mut generation = 0;
    while evaluations + n <= config.max_evals {
        generation += 1;
        let pool = fill_mating_pool(&pop, &csa, n, &ctx, &mut rng)?;
        let offspring = variation(&pool, n, spec, &config.variation, &mut rng)?;
        evaluations += offspring.len();
        ctx = update_ideal(&ctx, &offspring);
        csa = update_csa(&csa, &offspring, n);
        pop = environmental_selection(
            &pop,
            &offspring,
            n,
            &csa,
            &ctx,
            config.strategy,
            config.similarity,
            config.eigen,
            &mut rng,
        )?;
        ctx = update_nadir(&ctx, &pop, &csa)?;
        trace.push(snapshot(generation, evaluations, &pop, &ctx));
    }

    Ok(RunResult {
        population: pop,
        trace,
        evaluations,
    })
}
