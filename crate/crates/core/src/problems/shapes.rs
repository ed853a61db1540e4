//! Front geometry shared by the DTLZ and MaF families.

use std::f64::consts::FRAC_PI_2;

/// Spherical front of radius `r` from `M - 1` angles (radians):
/// `f_1 = r cos θ_1 … cos θ_{M-1}`, `f_M = r sin θ_1`.
pub(crate) fn sphere(theta: &[f64], r: f64) -> Vec<f64> {
    let m = theta.len() + 1;
    let mut f = vec![r; m];
    for (obj, fo) in f.iter_mut().enumerate() {
        let upto = m - 1 - obj;
        for t in &theta[..upto] {
            *fo *= t.cos();
        }
        if obj > 0 {
            *fo *= theta[upto].sin();
        }
    }
    f
}

/// Angles `x_i π / 2` for the first `M - 1` variables.
pub(crate) fn angles(x: &[f64], m: usize) -> Vec<f64> {
    x[..m - 1].iter().map(|v| v * FRAC_PI_2).collect()
}

/// Linear (simplex) front: `f_1 = y_1 … y_{M-1}`, `f_M = 1 - y_1`, scaled by `r`.
pub(crate) fn simplex(y: &[f64], r: f64) -> Vec<f64> {
    let m = y.len() + 1;
    let mut f = vec![r; m];
    for (obj, fo) in f.iter_mut().enumerate() {
        let upto = m - 1 - obj;
        for v in &y[..upto] {
            *fo *= v;
        }
        if obj > 0 {
            *fo *= 1.0 - y[upto];
        }
    }
    f
}

/// Rastrigin-like distance function of DTLZ1/DTLZ3.
pub(crate) fn g_multimodal(xm: &[f64]) -> f64 {
    let s: f64 = xm
        .iter()
        .map(|v| (v - 0.5).powi(2) - (20.0 * std::f64::consts::PI * (v - 0.5)).cos())
        .sum();
    100.0 * (xm.len() as f64 + s)
}

pub(crate) fn g_sphere(xm: &[f64]) -> f64 {
    xm.iter().map(|v| (v - 0.5).powi(2)).sum()
}
