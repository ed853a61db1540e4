//! Initialization, SBX, polynomial mutation and the convergence-biased
//! mating pool.

use rand::Rng;

use crate::csa::CornerArchive;
use crate::error::{contract, Result};
use crate::normalize::{normalize, NormalizationContext};
use crate::problems::ProblemSpec;
use crate::solution::{Population, Solution};

/// Lower bound for squared norms and norms in convergence and cosine.
pub const NORM_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VariationParams {
    pub p_c: f64,
    pub p_m: f64,
    pub eta_c: f64,
    pub eta_m: f64,
}

impl VariationParams {
    /// `p_c = 1`, `p_m = 1/D`, both distribution indices 20.
    pub fn for_dimension(d: usize) -> Self {
        Self {
            p_c: 1.0,
            p_m: 1.0 / d as f64,
            eta_c: 20.0,
            eta_m: 20.0,
        }
    }
}

pub fn init_population<R: Rng + ?Sized>(n: usize, spec: &ProblemSpec, rng: &mut R) -> Result<Population> {
    (0..n)
        .map(|_| {
            let x: Vec<f64> = spec
                .bounds
                .iter()
                .map(|&(lo, hi)| lo + (hi - lo) * rng.random::<f64>())
                .collect();
            let f = spec.evaluate(&x)?;
            Ok(Solution::new(x, f))
        })
        .collect()
}

/// `1 / Σ f_i²` on normalized objectives, capped at `1e12`.
pub fn convergence(f_norm: &[f64]) -> f64 {
    1.0 / f_norm.iter().map(|v| v * v).sum::<f64>().max(NORM_EPS)
}

pub fn norm(v: &[f64]) -> f64 {
    v.iter().map(|a| a * a).sum::<f64>().sqrt()
}

/// Cosine of the angle between two normalized objective vectors, clamped to
/// `[-1, 1]`. Zero vectors are treated as having norm `1e-12`.
pub fn cosine(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    (dot / (norm(a).max(NORM_EPS) * norm(b).max(NORM_EPS))).clamp(-1.0, 1.0)
}

/// Extremes of the pairwise cosine over distinct members of a set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CosineRange {
    pub min: f64,
    pub max: f64,
}

impl CosineRange {
    pub fn over(points: &[&[f64]]) -> Result<Self> {
        if points.len() < 2 {
            return Err(contract("cosine range needs at least two members"));
        }
        let unit: Vec<Vec<f64>> = points.iter().map(|p| unit_vector(p)).collect();
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for i in 0..unit.len() {
            for j in (i + 1)..unit.len() {
                let c = dot(&unit[i], &unit[j]).clamp(-1.0, 1.0);
                min = min.min(c);
                max = max.max(c);
            }
        }
        Ok(Self { min, max })
    }

    /// `(c - min) / (max - min)` clamped to `[0, 1]`; `0.5` when the range is
    /// degenerate.
    pub fn delta(&self, c: f64) -> f64 {
        let span = self.max - self.min;
        if span <= 0.0 {
            0.5
        } else {
            ((c - self.min) / span).clamp(0.0, 1.0)
        }
    }
}

fn unit_vector(v: &[f64]) -> Vec<f64> {
    let n = norm(v).max(NORM_EPS);
    v.iter().map(|a| a / n).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Mating threshold `δ(x, y)` with the cosine range taken over `pool_union`
/// (normalized objectives).
pub fn delta_threshold(x: &[f64], y: &[f64], pool_union: &[&[f64]]) -> Result<f64> {
    Ok(CosineRange::over(pool_union)?.delta(cosine(x, y)))
}

/// `P` followed by the archive members that are not already in `P` (or
/// earlier in the archive).
pub fn union_with_archive(pop: &Population, csa: &CornerArchive) -> Population {
    let mut members = pop.members.clone();
    for s in &csa.members {
        if !members.iter().any(|t| t.f == s.f && t.x == s.x) {
            members.push(s.clone());
        }
    }
    Population::new(members)
}

/// One iteration of the mating-pool loop, for instrumentation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MatingDraw {
    /// Index of the drawn solution in `P ∪ CSA` (population first).
    pub drawn: usize,
    /// Index in `P` of the least similar population member.
    pub partner: usize,
    pub delta: f64,
    /// Whether the partner was emitted instead of the drawn solution.
    pub took_partner: bool,
}

/// Fills the mating pool with `2N` solutions and returns the draw log.
///
/// Each draw picks `x` uniformly from `P ∪ CSA`, finds the population member
/// `y` with the smallest cosine to `x` (lowest index on ties), and emits `y`
/// when a fresh uniform number is below `δ(x, y)` and `y` converges better
/// than `x`; otherwise it emits `x`.
pub fn mating_draws<R: Rng + ?Sized>(
    pop: &Population,
    csa: &CornerArchive,
    n: usize,
    ctx: &NormalizationContext,
    rng: &mut R,
) -> Result<(Population, Vec<MatingDraw>)> {
    if pop.is_empty() {
        return Err(contract("mating pool needs a nonempty population"));
    }
    let union = normalize(&union_with_archive(pop, csa), ctx);
    let norm_f = union.normalized_objectives()?;
    let unit: Vec<Vec<f64>> = norm_f.iter().map(|p| unit_vector(p)).collect();
    let con: Vec<f64> = norm_f.iter().map(|p| convergence(p)).collect();
    let range = if union.len() >= 2 {
        CosineRange::over(&norm_f)?
    } else {
        CosineRange { min: 0.0, max: 0.0 }
    };

    let np = pop.len();
    let mut out = Vec::with_capacity(2 * n);
    let mut log = Vec::with_capacity(2 * n);
    for _ in 0..2 * n {
        let xi = rng.random_range(0..union.len());
        let mut yi = 0;
        let mut best = f64::INFINITY;
        for j in 0..np {
            let c = dot(&unit[xi], &unit[j]).clamp(-1.0, 1.0);
            if c < best {
                best = c;
                yi = j;
            }
        }
        let delta = range.delta(best);
        let u: f64 = rng.random();
        let took_partner = u < delta && con[yi] > con[xi];
        out.push(union.members[if took_partner { yi } else { xi }].clone());
        log.push(MatingDraw {
            drawn: xi,
            partner: yi,
            delta,
            took_partner,
        });
    }
    Ok((Population::new(out), log))
}

pub fn fill_mating_pool<R: Rng + ?Sized>(
    pop: &Population,
    csa: &CornerArchive,
    n: usize,
    ctx: &NormalizationContext,
    rng: &mut R,
) -> Result<Population> {
    mating_draws(pop, csa, n, ctx, rng).map(|(pool, _)| pool)
}

/// Spread factor of SBX for a uniform draw `u`.
pub fn sbx_beta(u: f64, eta_c: f64) -> f64 {
    if u <= 0.5 {
        (2.0 * u).powf(1.0 / (eta_c + 1.0))
    } else {
        (2.0 * (1.0 - u)).powf(-1.0 / (eta_c + 1.0))
    }
}

/// Children `mean ± β (p1 - p2) / 2` per variable, clipped to the bounds.
pub fn sbx_blend(p1: &[f64], p2: &[f64], beta: &[f64], bounds: &[(f64, f64)]) -> (Vec<f64>, Vec<f64>) {
    let mut c1 = Vec::with_capacity(p1.len());
    let mut c2 = Vec::with_capacity(p1.len());
    for i in 0..p1.len() {
        if beta[i] == 1.0 || p1[i] == p2[i] {
            c1.push(p1[i]);
            c2.push(p2[i]);
            continue;
        }
        let mean = 0.5 * (p1[i] + p2[i]);
        let half = 0.5 * beta[i] * (p1[i] - p2[i]);
        let (lo, hi) = bounds[i];
        c1.push((mean + half).clamp(lo, hi));
        c2.push((mean - half).clamp(lo, hi));
    }
    (c1, c2)
}

/// Simulated binary crossover. With probability `1 - p_c` the children are
/// copies of the parents; otherwise each variable is recombined with
/// probability 1/2 using a spread factor drawn with index `eta_c`.
pub fn sbx_crossover<R: Rng + ?Sized>(
    p1: &[f64],
    p2: &[f64],
    params: &VariationParams,
    bounds: &[(f64, f64)],
    rng: &mut R,
) -> (Vec<f64>, Vec<f64>) {
    let d = p1.len();
    let mut beta = vec![1.0; d];
    if rng.random::<f64>() < params.p_c {
        for b in beta.iter_mut() {
            let u: f64 = rng.random();
            let swap: f64 = rng.random();
            if swap < 0.5 {
                *b = sbx_beta(u, params.eta_c);
            }
        }
    }
    sbx_blend(p1, p2, &beta, bounds)
}

pub fn polynomial_mutation<R: Rng + ?Sized>(
    x: &[f64],
    params: &VariationParams,
    bounds: &[(f64, f64)],
    rng: &mut R,
) -> Vec<f64> {
    let pow = 1.0 / (params.eta_m + 1.0);
    x.iter()
        .zip(bounds)
        .map(|(&y, &(lo, hi))| {
            let u_mut: f64 = rng.random();
            let u: f64 = rng.random();
            let span = hi - lo;
            if u_mut >= params.p_m || span <= 0.0 {
                return y;
            }
            let d1 = (y - lo) / span;
            let d2 = (hi - y) / span;
            let dq = if u < 0.5 {
                let v = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - d1).powf(params.eta_m + 1.0);
                v.powf(pow) - 1.0
            } else {
                let v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - d2).powf(params.eta_m + 1.0);
                1.0 - v.powf(pow)
            };
            (y + dq * span).clamp(lo, hi)
        })
        .collect()
}

/// `N` evaluated offspring: random parent pair from the pool, SBX (first
/// child kept), mutation, evaluation.
pub fn variation<R: Rng + ?Sized>(
    pool: &Population,
    n: usize,
    spec: &ProblemSpec,
    params: &VariationParams,
    rng: &mut R,
) -> Result<Population> {
    if pool.is_empty() {
        return Err(contract("variation needs a nonempty mating pool"));
    }
    (0..n)
        .map(|_| {
            let a = &pool.members[rng.random_range(0..pool.len())];
            let b = &pool.members[rng.random_range(0..pool.len())];
            let (child, _) = sbx_crossover(&a.x, &b.x, params, &spec.bounds, rng);
            let x = polynomial_mutation(&child, params, &spec.bounds, rng);
            let f = spec.evaluate(&x)?;
            Ok(Solution::new(x, f))
        })
        .collect()
}
