//! Samplers for the true Pareto fronts, used as IGD reference sets.

use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use super::{maf, shapes, wfg, ProblemKind, ProblemSpec};
use crate::error::{contract, Result};
use crate::pareto::nondominated_indices;
use crate::rng::RngStream;

/// Default reference-set size: 5000 points up to five objectives, 10000 above.
pub fn reference_size(m: usize) -> usize {
    if m <= 5 {
        5000
    } else {
        10000
    }
}

fn unit_sphere_direction(m: usize, rng: &mut RngStream) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..m)
            .map(|_| {
                let g: f64 = StandardNormal.sample(rng);
                g.abs()
            })
            .collect();
        let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|a| a / norm).collect();
        }
    }
}

/// Uniform point on the unit simplex (flat Dirichlet).
fn unit_simplex(m: usize, rng: &mut RngStream) -> Vec<f64> {
    let e: Vec<f64> = (0..m).map(|_| Exp1.sample(rng)).collect();
    let s: f64 = e.iter().sum();
    e.into_iter().map(|v| v / s).collect()
}

fn uniform_positions(m: usize, rng: &mut RngStream) -> Vec<f64> {
    (0..m - 1).map(|_| rng.random::<f64>()).collect()
}

/// Samples drawn from a superset of the front and then reduced to their
/// nondominated part. Oversamples until `n` survivors exist.
fn filtered<F>(n: usize, mut draw: F) -> Vec<Vec<f64>>
where
    F: FnMut() -> Vec<f64>,
{
    let mut pool: Vec<Vec<f64>> = Vec::new();
    let mut batch = n;
    loop {
        pool.extend((0..batch).map(|_| draw()));
        let refs: Vec<&[f64]> = pool.iter().map(Vec::as_slice).collect();
        let keep = nondominated_indices(&refs);
        if keep.len() >= n {
            return keep.into_iter().take(n).map(|i| pool[i].clone()).collect();
        }
        pool = keep.into_iter().map(|i| pool[i].clone()).collect();
        batch = n;
    }
}

/// `n` points on the analytic Pareto front of `spec`, deterministic in `rng`.
///
/// Spherical fronts use normalized absolute Gaussian directions, linear fronts
/// use flat-Dirichlet simplex points, and the remaining fronts are generated
/// from their parametric (position-variable) description. Disconnected or
/// degenerate fronts are reduced to their nondominated part.
pub fn true_pf_sample(spec: &ProblemSpec, n: usize, rng: &mut RngStream) -> Result<Vec<Vec<f64>>> {
    if n == 0 {
        return Err(contract("front sample size must be at least 1"));
    }
    use ProblemKind::*;
    let m = spec.m;
    let kind = spec.kind;
    let pts = match kind {
        Dtlz1 => (0..n)
            .map(|_| unit_simplex(m, rng).into_iter().map(|v| 0.5 * v).collect())
            .collect(),
        Dtlz2 | Dtlz3 | Dtlz4 => (0..n).map(|_| unit_sphere_direction(m, rng)).collect(),
        Idtlz1 => (0..n)
            .map(|_| unit_simplex(m, rng).into_iter().map(|v| 0.5 - 0.5 * v).collect())
            .collect(),
        Idtlz2 => (0..n)
            .map(|_| unit_sphere_direction(m, rng).into_iter().map(|v| 1.0 - v).collect())
            .collect(),
        Maf1 => (0..n)
            .map(|_| unit_simplex(m, rng).into_iter().map(|v| 1.0 - v).collect())
            .collect(),
        Maf2 => (0..n)
            .map(|_| {
                // angles restricted to [π/8, 3π/8]; the optimum has g = 0
                let mut x = uniform_positions(m, rng);
                x.resize(spec.d, 0.5);
                maf::maf2(&x, m)
            })
            .collect(),
        Maf3 => (0..n)
            .map(|_| {
                let mut d = unit_sphere_direction(m, rng);
                for v in &mut d[..m - 1] {
                    *v = v.powi(4);
                }
                d[m - 1] = d[m - 1].powi(2);
                d
            })
            .collect(),
        Maf4 => (0..n)
            .map(|_| {
                unit_sphere_direction(m, rng)
                    .into_iter()
                    .enumerate()
                    .map(|(i, v)| (1.0 - v) * 2f64.powi(i as i32 + 1))
                    .collect()
            })
            .collect(),
        Maf5 => (0..n)
            .map(|_| {
                unit_sphere_direction(m, rng)
                    .into_iter()
                    .enumerate()
                    .map(|(i, v)| v * 2f64.powi((m - i) as i32))
                    .collect()
            })
            .collect(),
        Dtlz5 | Dtlz6 | Maf6 => filtered(n, || {
            let mut theta = vec![std::f64::consts::FRAC_PI_4; m - 1];
            theta[0] = rng.random::<f64>() * std::f64::consts::FRAC_PI_2;
            shapes::sphere(&theta, 1.0)
        }),
        Maf7 => filtered(n, || {
            let mut x = uniform_positions(m, rng);
            x.resize(spec.d, 0.0);
            maf::maf7(&x, m)
        }),
        Wfg2 => filtered(n, || wfg::front_point(kind, &uniform_positions(m, rng))),
        Wfg1 | Wfg3 | Wfg4 | Wfg5 | Wfg6 | Wfg7 | Wfg8 | Wfg9 => (0..n)
            .map(|_| wfg::front_point(kind, &uniform_positions(m, rng)))
            .collect(),
    };
    Ok(pts)
}
