use std::f64::consts::PI;

use super::shapes::{angles, g_multimodal, g_sphere, simplex, sphere};

pub(crate) fn dtlz1(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_multimodal(&x[m - 1..]);
    simplex(&x[..m - 1], 0.5 * (1.0 + g))
}

pub(crate) fn dtlz2(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_sphere(&x[m - 1..]);
    sphere(&angles(x, m), 1.0 + g)
}

pub(crate) fn dtlz3(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_multimodal(&x[m - 1..]);
    sphere(&angles(x, m), 1.0 + g)
}

pub(crate) fn dtlz4(x: &[f64], m: usize) -> Vec<f64> {
    const ALPHA: i32 = 100;
    let g = g_sphere(&x[m - 1..]);
    let theta: Vec<f64> = x[..m - 1].iter().map(|v| v.powi(ALPHA) * PI / 2.0).collect();
    sphere(&theta, 1.0 + g)
}

fn degenerate_angles(x: &[f64], m: usize, g: f64) -> Vec<f64> {
    let mut theta = Vec::with_capacity(m - 1);
    theta.push(x[0] * PI / 2.0);
    for v in &x[1..m - 1] {
        theta.push(PI / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * v));
    }
    theta
}

pub(crate) fn dtlz5(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_sphere(&x[m - 1..]);
    sphere(&degenerate_angles(x, m, g), 1.0 + g)
}

pub(crate) fn dtlz6(x: &[f64], m: usize) -> Vec<f64> {
    let g: f64 = x[m - 1..].iter().map(|v| v.powf(0.1)).sum();
    sphere(&degenerate_angles(x, m, g), 1.0 + g)
}

/// Inverted DTLZ1: `f_i = (1 + g) / 2 - f_i^{DTLZ1}`.
pub(crate) fn idtlz1(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_multimodal(&x[m - 1..]);
    dtlz1(x, m).into_iter().map(|v| 0.5 * (1.0 + g) - v).collect()
}

/// Inverted DTLZ2: `f_i = (1 + g) - f_i^{DTLZ2}`.
pub(crate) fn idtlz2(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_sphere(&x[m - 1..]);
    dtlz2(x, m).into_iter().map(|v| (1.0 + g) - v).collect()
}
