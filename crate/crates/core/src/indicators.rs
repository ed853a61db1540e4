//! IGD, hypervolume and Das–Dennis reference-point generation.

use rand::Rng;

use crate::error::{contract, Result};

/// Mean distance from each reference point to its nearest member of `a`.
/// Returns `+inf` for an empty approximation set.
pub fn igd(a: &[Vec<f64>], reference: &[Vec<f64>]) -> f64 {
    if a.is_empty() {
        return f64::INFINITY;
    }
    if reference.is_empty() {
        return 0.0;
    }
    let total: f64 = reference
        .iter()
        .map(|r| {
            a.iter()
                .map(|p| squared_distance(p, r))
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        })
        .sum();
    total / reference.len() as f64
}

fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HvMode {
    Exact2D,
    MonteCarlo,
}

pub const DEFAULT_HV_SAMPLES: usize = 1_000_000;

/// Hypervolume of `a` with respect to `ref_point`.
///
/// Points that do not strictly dominate the reference point contribute
/// nothing. `samples` is ignored in exact mode.
pub fn hv<R: Rng + ?Sized>(
    a: &[Vec<f64>],
    ref_point: &[f64],
    mode: HvMode,
    samples: usize,
    rng: &mut R,
) -> Result<f64> {
    let m = ref_point.len();
    if let Some(p) = a.iter().find(|p| p.len() != m) {
        return Err(contract(format!(
            "point of length {} against reference point of length {m}",
            p.len()
        )));
    }
    let inside: Vec<&[f64]> = a
        .iter()
        .filter(|p| p.iter().zip(ref_point).all(|(v, r)| v < r))
        .map(Vec::as_slice)
        .collect();
    if inside.is_empty() {
        return Ok(0.0);
    }
    match mode {
        HvMode::Exact2D => {
            if m != 2 {
                return Err(contract(format!("exact hypervolume needs 2 objectives, got {m}")));
            }
            Ok(hv_2d(&inside, ref_point))
        }
        HvMode::MonteCarlo => {
            if samples == 0 {
                return Err(contract("Monte Carlo hypervolume needs at least one sample"));
            }
            Ok(hv_monte_carlo(&inside, ref_point, samples, rng))
        }
    }
}

fn hv_2d(points: &[&[f64]], r: &[f64]) -> f64 {
    let mut sorted = points.to_vec();
    sorted.sort_by(|p, q| p[0].total_cmp(&q[0]).then(p[1].total_cmp(&q[1])));
    let mut area = 0.0;
    let mut ceiling = r[1];
    for p in sorted {
        if p[1] < ceiling {
            area += (r[0] - p[0]) * (ceiling - p[1]);
            ceiling = p[1];
        }
    }
    area
}

fn hv_monte_carlo<R: Rng + ?Sized>(points: &[&[f64]], r: &[f64], samples: usize, rng: &mut R) -> f64 {
    let m = r.len();
    let lo: Vec<f64> = (0..m)
        .map(|i| points.iter().map(|p| p[i]).fold(f64::INFINITY, f64::min))
        .collect();
    let volume: f64 = lo.iter().zip(r).map(|(l, u)| u - l).product();
    let mut s = vec![0.0; m];
    let mut hits = 0usize;
    for _ in 0..samples {
        for i in 0..m {
            s[i] = lo[i] + rng.random::<f64>() * (r[i] - lo[i]);
        }
        if points.iter().any(|p| p.iter().zip(&s).all(|(a, b)| a <= b)) {
            hits += 1;
        }
    }
    volume * hits as f64 / samples as f64
}

pub const HV_REF_SCALE: f64 = 1.1;

/// Hypervolume after normalizing by the true front's ideal and nadir, with
/// reference point `1.1` in every objective, divided by the reference box
/// volume so the value lies in `[0, 1]`.
pub fn normalized_hv<R: Rng + ?Sized>(
    a: &[Vec<f64>],
    true_front: &[Vec<f64>],
    samples: usize,
    rng: &mut R,
) -> Result<f64> {
    let Some(m) = true_front.first().map(Vec::len) else {
        return Err(contract("normalized hypervolume needs a nonempty true front"));
    };
    let ideal: Vec<f64> = (0..m)
        .map(|i| true_front.iter().map(|p| p[i]).fold(f64::INFINITY, f64::min))
        .collect();
    let nadir: Vec<f64> = (0..m)
        .map(|i| true_front.iter().map(|p| p[i]).fold(f64::NEG_INFINITY, f64::max))
        .collect();
    let scaled: Vec<Vec<f64>> = a
        .iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .map(|(i, v)| (v - ideal[i]) / (nadir[i] - ideal[i]).max(1e-12))
                .collect()
        })
        .collect();
    let ref_point = vec![HV_REF_SCALE; m];
    let mode = if m == 2 { HvMode::Exact2D } else { HvMode::MonteCarlo };
    let volume = hv(&scaled, &ref_point, mode, samples, rng)?;
    Ok(volume / HV_REF_SCALE.powi(m as i32))
}

/// `C(n, k)` in exact integer arithmetic.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Simplex-lattice weight vectors with `p` divisions in `m` dimensions.
/// `p = 0` yields the single centroid.
pub fn das_dennis(m: usize, p: usize) -> Vec<Vec<f64>> {
    if m == 0 {
        return Vec::new();
    }
    if p == 0 {
        return vec![vec![1.0 / m as f64; m]];
    }
    let mut out = Vec::with_capacity(binomial(m + p - 1, p));
    let mut counts = vec![0usize; m];
    lattice(&mut counts, 0, p, p, &mut out);
    out
}

fn lattice(counts: &mut [usize], pos: usize, left: usize, p: usize, out: &mut Vec<Vec<f64>>) {
    if pos + 1 == counts.len() {
        counts[pos] = left;
        out.push(counts.iter().map(|&c| c as f64 / p as f64).collect());
        return;
    }
    for c in (0..=left).rev() {
        counts[pos] = c;
        lattice(counts, pos + 1, left - c, p, out);
    }
}

/// Outer layer with `p1` divisions plus an inner layer with `p2` divisions
/// shrunk halfway toward the centroid.
pub fn two_layer(m: usize, p1: usize, p2: usize) -> Vec<Vec<f64>> {
    let mut points = das_dennis(m, p1);
    if p2 > 0 {
        let centre = 1.0 / m as f64;
        points.extend(
            das_dennis(m, p2)
                .into_iter()
                .map(|w| w.into_iter().map(|v| 0.5 * v + 0.5 * centre).collect::<Vec<f64>>()),
        );
    }
    points
}

pub fn two_layer_size(m: usize, p1: usize, p2: usize) -> usize {
    let inner = if p2 > 0 { binomial(m + p2 - 1, p2) } else { 0 };
    binomial(m + p1 - 1, p1) + inner
}

/// Layer divisions behind the default population size at `m` objectives.
pub fn layer_divisions(m: usize) -> Option<(usize, usize)> {
    match m {
        5 => Some((5, 0)),
        10 => Some((3, 1)),
        15 => Some((2, 2)),
        _ => None,
    }
}

/// Default population size for `m` objectives. 13 objectives borrow the
/// 15-objective size.
pub fn default_pop_size(m: usize) -> Option<usize> {
    match m {
        13 => Some(240),
        _ => layer_divisions(m).map(|(p1, p2)| two_layer_size(m, p1, p2)),
    }
}
