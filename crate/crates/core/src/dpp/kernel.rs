use std::fmt;
use std::str::FromStr;

use crate::csa::CornerArchive;
use crate::error::{config, contract, Error, Result};
use crate::normalize::{normalize, NormalizationContext};
use crate::operators::{convergence, norm, NORM_EPS};
use crate::solution::Population;

/// Similarity used between two solutions in the kernel.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SimilarityMode {
    /// `S(x, y) = cos(x, y)`. Gives a PSD kernel.
    #[default]
    Cos,
    /// `S(x, y) = exp(-cos(x, y))`. Not PSD in general.
    ExpNegCos,
}

impl SimilarityMode {
    pub fn name(self) -> &'static str {
        match self {
            SimilarityMode::Cos => "cos",
            SimilarityMode::ExpNegCos => "expneg",
        }
    }

    fn apply(self, cos: f64) -> f64 {
        match self {
            SimilarityMode::Cos => cos,
            SimilarityMode::ExpNegCos => (-cos).exp(),
        }
    }
}

impl fmt::Display for SimilarityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SimilarityMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "cos" => Ok(SimilarityMode::Cos),
            "expneg" => Ok(SimilarityMode::ExpNegCos),
            other => Err(config("kernel", format!("unknown similarity mode `{other}`"))),
        }
    }
}

/// Dense symmetric `n × n` matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelMatrix {
    n: usize,
    data: Vec<f64>,
    pub mode: SimilarityMode,
}

impl KernelMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(contract("kernel rows must form a square matrix"));
        }
        Ok(Self {
            n,
            data: rows.concat(),
            mode: SimilarityMode::Cos,
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = f(i, j);
            }
        }
        Self {
            n,
            data,
            mode: SimilarityMode::Cos,
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    /// Largest `|L_ij - L_ji|` relative to `max |L|`.
    pub fn asymmetry(&self) -> f64 {
        let scale = self.max_abs();
        if scale == 0.0 {
            return 0.0;
        }
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst / scale
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Qualities of every member from normalized objectives: inside-space
/// members (norm `≤ t`) get `2`, the rest their convergence divided by the
/// population's best convergence.
pub fn qualities(points: &[&[f64]], t: f64) -> Result<Vec<f64>> {
    if points.is_empty() {
        return Err(contract("quality needs a nonempty population"));
    }
    let con: Vec<f64> = points.iter().map(|p| convergence(p)).collect();
    let best = con.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(points
        .iter()
        .zip(&con)
        .map(|(p, c)| if norm(p) <= t { 2.0 } else { c / best })
        .collect())
}

/// Quality of one normalized point `x` relative to population `points`.
pub fn quality(x: &[f64], points: &[&[f64]], t: f64) -> Result<f64> {
    if points.is_empty() {
        return Err(contract("quality needs a nonempty population"));
    }
    if norm(x) <= t {
        return Ok(2.0);
    }
    let best = points.iter().map(|p| convergence(p)).fold(f64::NEG_INFINITY, f64::max);
    Ok(convergence(x) / best)
}

/// `L_xy = q(x) S(x, y) q(y)` from normalized points and given qualities.
pub fn kernel_from_parts(points: &[&[f64]], q: &[f64], mode: SimilarityMode) -> KernelMatrix {
    let n = points.len();
    let unit: Vec<Vec<f64>> = points
        .iter()
        .map(|p| {
            let l = norm(p).max(NORM_EPS);
            p.iter().map(|v| v / l).collect()
        })
        .collect();
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let c: f64 = unit[i].iter().zip(&unit[j]).map(|(a, b)| a * b).sum();
            let c = if i == j { 1.0 } else { c.clamp(-1.0, 1.0) };
            let v = q[i] * mode.apply(c) * q[j];
            data[i * n + j] = v;
            data[j * n + i] = v;
        }
    }
    KernelMatrix { n, data, mode }
}

/// Kernel over `pop` after normalizing it and the archive with `ctx`; the
/// inside/outside threshold comes from the archive.
pub fn build_kernel(
    pop: &Population,
    csa: &CornerArchive,
    ctx: &NormalizationContext,
    mode: SimilarityMode,
) -> Result<KernelMatrix> {
    if pop.is_empty() {
        return Err(contract("kernel of an empty population"));
    }
    let t = csa.threshold(ctx)?;
    let normed = normalize(pop, ctx);
    let pts = normed.normalized_objectives()?;
    let q = qualities(&pts, t)?;
    Ok(kernel_from_parts(&pts, &q, mode))
}
