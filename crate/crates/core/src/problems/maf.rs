//! MaF1–MaF7.

use std::f64::consts::PI;

use super::shapes::{angles, g_multimodal, g_sphere, simplex, sphere};

/// Inverted linear front: `f_i = (1 + g)(1 - simplex_i)`.
pub(crate) fn maf1(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_sphere(&x[m - 1..]);
    simplex(&x[..m - 1], 1.0)
        .into_iter()
        .map(|v| (1.0 + g) * (1.0 - v))
        .collect()
}

/// DTLZ2BZ: variables shifted into `[1/4, 3/4]`, one distance group per objective.
pub(crate) fn maf2(x: &[f64], m: usize) -> Vec<f64> {
    let d = x.len();
    let shift = |v: f64| v / 2.0 + 0.25;
    let chunk = (d - m + 1) / m;
    let theta: Vec<f64> = x[..m - 1].iter().map(|&v| shift(v) * PI / 2.0).collect();
    let mut f = sphere(&theta, 1.0);
    for (obj, fo) in f.iter_mut().enumerate() {
        let start = m - 1 + obj * chunk;
        let end = if obj + 1 < m { start + chunk } else { d };
        let g: f64 = x[start..end].iter().map(|&v| (shift(v) - 0.5).powi(2)).sum();
        *fo *= 1.0 + g;
    }
    f
}

/// Convex DTLZ3.
pub(crate) fn maf3(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_multimodal(&x[m - 1..]);
    let mut f = sphere(&angles(x, m), 1.0 + g);
    for v in &mut f[..m - 1] {
        *v = v.powi(4);
    }
    f[m - 1] = f[m - 1].powi(2);
    f
}

/// Inverted, badly scaled DTLZ3: objective `i` (1-based) scaled by `2^i`.
pub(crate) fn maf4(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_multimodal(&x[m - 1..]);
    sphere(&angles(x, m), 1.0 + g)
        .into_iter()
        .enumerate()
        .map(|(i, v)| ((1.0 + g) - v) * 2f64.powi(i as i32 + 1))
        .collect()
}

/// Biased, badly scaled DTLZ4-like: objective `i` scaled by `2^(M - i + 1)`.
pub(crate) fn maf5(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_sphere(&x[m - 1..]);
    let theta: Vec<f64> = x[..m - 1].iter().map(|v| v.powi(100) * PI / 2.0).collect();
    sphere(&theta, 1.0 + g)
        .into_iter()
        .enumerate()
        .map(|(i, v)| v * 2f64.powi((m - i) as i32))
        .collect()
}

/// DTLZ5(I, M) with `I = 2`.
pub(crate) fn maf6(x: &[f64], m: usize) -> Vec<f64> {
    const I: usize = 2;
    let g = g_sphere(&x[m - 1..]);
    let theta: Vec<f64> = x[..m - 1]
        .iter()
        .enumerate()
        .map(|(j, &v)| {
            let y = if j + 1 >= I {
                (1.0 + 2.0 * g * v) / (2.0 + 2.0 * g)
            } else {
                v
            };
            y * PI / 2.0
        })
        .collect();
    sphere(&theta, 1.0 + 100.0 * g)
}

/// Disconnected front (DTLZ7 form).
pub(crate) fn maf7(x: &[f64], m: usize) -> Vec<f64> {
    let tail = &x[m - 1..];
    let g = 1.0 + 9.0 * tail.iter().sum::<f64>() / tail.len() as f64;
    let mut f: Vec<f64> = x[..m - 1].to_vec();
    let h = m as f64
        - f.iter()
            .map(|&fi| fi / (1.0 + g) * (1.0 + (3.0 * PI * fi).sin()))
            .sum::<f64>();
    f.push((1.0 + g) * h);
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with_tail(m: usize, pos: &[f64], tail: f64) -> Vec<f64> {
        let mut x = vec![tail; m - 1 + 10];
        x[..m - 1].copy_from_slice(pos);
        x
    }

    #[test]
    fn maf1_front_sums_to_m_minus_one() {
        let f = maf1(&with_tail(4, &[0.2, 0.4, 0.6], 0.5), 4);
        assert!((f.iter().sum::<f64>() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn maf2_optimum_is_on_sphere() {
        let f = maf2(&with_tail(5, &[0.0, 0.3, 0.7, 1.0], 0.5), 5);
        assert!((f.iter().map(|v| v * v).sum::<f64>() - 1.0).abs() < 1e-12);
        let worse = maf2(&with_tail(5, &[0.0, 0.3, 0.7, 1.0], 0.9), 5);
        assert!(worse.iter().zip(&f).all(|(a, b)| a >= b));
    }

    #[test]
    fn maf4_maf5_scales() {
        // corners of the inverted sphere: f_1 = 2(1 - cos 0 ... ) etc.
        let f = maf4(&with_tail(3, &[0.0, 0.0], 0.5), 3);
        assert!((f[0] - 0.0).abs() < 1e-12);
        assert!((f[1] - 4.0).abs() < 1e-12);
        assert!((f[2] - 8.0).abs() < 1e-12);
        let f = maf5(&with_tail(3, &[0.0, 0.0], 0.5), 3);
        assert!((f[0] - 8.0).abs() < 1e-12);
    }

    #[test]
    fn maf6_optimum_is_degenerate_curve() {
        let f = maf6(&with_tail(4, &[0.37, 0.1, 0.9], 0.5), 4);
        assert!((f.iter().map(|v| v * v).sum::<f64>() - 1.0).abs() < 1e-12);
        assert!((f[0] - f[1]).abs() < 1e-12);
    }

    #[test]
    fn maf7_at_zero_tail() {
        let f = maf7(&with_tail(3, &[0.0, 0.0], 0.0), 3);
        assert_eq!(f[..2], [0.0, 0.0]);
        assert!((f[2] - 6.0).abs() < 1e-12);
    }
}
