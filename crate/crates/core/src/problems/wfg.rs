//! WFG1–WFG9 built from the toolkit's transformation and shape primitives.
//!
//! With `k = M - 1` position parameters each position group holds exactly one
//! variable. Distance parameters number `l = 10`.

use std::f64::consts::PI;

use super::ProblemKind;

const EPS: f64 = 1e-10;

fn correct_to_01(v: f64) -> f64 {
    if v < 0.0 && v >= -EPS {
        0.0
    } else if v > 1.0 && v <= 1.0 + EPS {
        1.0
    } else {
        v
    }
}

// --- transformations -------------------------------------------------------

pub(crate) fn b_poly(y: f64, alpha: f64) -> f64 {
    correct_to_01(y.powf(alpha))
}

pub(crate) fn b_flat(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let t1 = (y - b).floor().min(0.0) * a * (b - y) / b;
    let t2 = (c - y).floor().min(0.0) * (1.0 - a) * (y - c) / (1.0 - c);
    correct_to_01(a + t1 - t2)
}

pub(crate) fn b_param(y: f64, u: f64, a: f64, b: f64, c: f64) -> f64 {
    let v = a - (1.0 - 2.0 * u) * ((0.5 - u).floor() + a).abs();
    correct_to_01(y.powf(b + (c - b) * v))
}

pub(crate) fn s_linear(y: f64, a: f64) -> f64 {
    correct_to_01((y - a).abs() / ((a - y).floor() + a).abs())
}

pub(crate) fn s_decept(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let t1 = (y - a + b).floor() * (1.0 - c + (a - b) / b) / (a - b);
    let t2 = (a + b - y).floor() * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    correct_to_01(1.0 + ((y - a).abs() - b) * (t1 + t2 + 1.0 / b))
}

pub(crate) fn s_multi(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let tmp = (y - c).abs() / (2.0 * ((c - y).floor() + c));
    correct_to_01(
        (1.0 + ((4.0 * a + 2.0) * PI * (0.5 - tmp)).cos() + 4.0 * b * tmp * tmp) / (b + 2.0),
    )
}

pub(crate) fn r_sum(y: &[f64], w: &[f64]) -> f64 {
    let num: f64 = y.iter().zip(w).map(|(a, b)| a * b).sum();
    correct_to_01(num / w.iter().sum::<f64>())
}

pub(crate) fn r_nonsep(y: &[f64], a: usize) -> f64 {
    let n = y.len();
    let mut num = 0.0;
    for j in 0..n {
        num += y[j];
        for k in 0..a.saturating_sub(1) {
            num += (y[j] - y[(j + k + 1) % n]).abs();
        }
    }
    let half = a.div_ceil(2) as f64;
    let a = a as f64;
    let den = (n as f64 / a) * half * (1.0 + 2.0 * a - 2.0 * half);
    correct_to_01(num / den)
}

// --- shapes (x has M - 1 entries, m is 1-based) -----------------------------

fn linear(x: &[f64], m: usize) -> f64 {
    let big_m = x.len() + 1;
    let mut r: f64 = x[..big_m - m].iter().product();
    if m > 1 {
        r *= 1.0 - x[big_m - m];
    }
    r
}

fn convex(x: &[f64], m: usize) -> f64 {
    let big_m = x.len() + 1;
    let mut r: f64 = x[..big_m - m]
        .iter()
        .map(|v| 1.0 - (v * PI / 2.0).cos())
        .product();
    if m > 1 {
        r *= 1.0 - (x[big_m - m] * PI / 2.0).sin();
    }
    r
}

fn concave(x: &[f64], m: usize) -> f64 {
    let big_m = x.len() + 1;
    let mut r: f64 = x[..big_m - m].iter().map(|v| (v * PI / 2.0).sin()).product();
    if m > 1 {
        r *= (x[big_m - m] * PI / 2.0).cos();
    }
    r
}

fn mixed(x: &[f64], alpha: f64, a: f64) -> f64 {
    let t = 2.0 * a * PI;
    (1.0 - x[0] - (t * x[0] + PI / 2.0).cos() / t).powf(alpha)
}

fn disc(x: &[f64], alpha: f64, beta: f64, a: f64) -> f64 {
    1.0 - x[0].powf(alpha) * (a * x[0].powf(beta) * PI).cos().powi(2)
}

/// Front shape value `h_m` (1-based `m`) for the given family.
pub(crate) fn shape(kind: ProblemKind, x: &[f64], m: usize) -> f64 {
    let big_m = x.len() + 1;
    match kind {
        ProblemKind::Wfg1 if m == big_m => mixed(x, 1.0, 5.0),
        ProblemKind::Wfg2 if m == big_m => disc(x, 1.0, 1.0, 5.0),
        ProblemKind::Wfg1 | ProblemKind::Wfg2 => convex(x, m),
        ProblemKind::Wfg3 => linear(x, m),
        _ => concave(x, m),
    }
}

/// Degeneracy constants `A_1 … A_{M-1}`.
pub(crate) fn degeneracy(kind: ProblemKind, m: usize) -> Vec<f64> {
    let mut a = vec![1.0; m - 1];
    if kind == ProblemKind::Wfg3 {
        for v in a.iter_mut().skip(1) {
            *v = 0.0;
        }
    }
    a
}

/// Maps the reduced vector `t` (length M) onto objectives.
fn objectives(kind: ProblemKind, t: &[f64]) -> Vec<f64> {
    let m = t.len();
    let a = degeneracy(kind, m);
    let tm = t[m - 1];
    let x: Vec<f64> = (0..m - 1)
        .map(|i| tm.max(a[i]) * (t[i] - 0.5) + 0.5)
        .collect();
    (1..=m)
        .map(|obj| tm + 2.0 * obj as f64 * shape(kind, &x, obj))
        .collect()
}

/// Unit-weight `r_sum` over each single-variable position group plus one
/// group over the distance part.
fn reduce_sum(y: &[f64], k: usize, m: usize) -> Vec<f64> {
    let gap = k / (m - 1);
    let mut t: Vec<f64> = (0..m - 1)
        .map(|i| {
            let g = &y[i * gap..(i + 1) * gap];
            r_sum(g, &vec![1.0; g.len()])
        })
        .collect();
    let tail = &y[k..];
    t.push(r_sum(tail, &vec![1.0; tail.len()]));
    t
}

fn reduce_nonsep(y: &[f64], k: usize, m: usize) -> Vec<f64> {
    let gap = k / (m - 1);
    let mut t: Vec<f64> = (0..m - 1)
        .map(|i| r_nonsep(&y[i * gap..(i + 1) * gap], gap))
        .collect();
    let tail = &y[k..];
    t.push(r_nonsep(tail, tail.len()));
    t
}

fn param_weight_a() -> f64 {
    0.98 / 49.98
}

fn mean(v: &[f64]) -> f64 {
    r_sum(v, &vec![1.0; v.len()])
}

pub(crate) fn evaluate(kind: ProblemKind, z: &[f64], m: usize) -> Vec<f64> {
    let n = z.len();
    let k = m - 1;
    let mut y: Vec<f64> = z
        .iter()
        .enumerate()
        .map(|(i, v)| v / (2.0 * (i + 1) as f64))
        .collect();

    let t = match kind {
        ProblemKind::Wfg1 => {
            for v in &mut y[k..] {
                *v = s_linear(*v, 0.35);
            }
            for v in &mut y[k..] {
                *v = b_flat(*v, 0.8, 0.75, 0.85);
            }
            for v in &mut y {
                *v = b_poly(*v, 0.02);
            }
            let gap = k / (m - 1);
            let mut t: Vec<f64> = (0..m - 1)
                .map(|i| {
                    let range = i * gap..(i + 1) * gap;
                    let w: Vec<f64> = range.clone().map(|j| 2.0 * (j + 1) as f64).collect();
                    r_sum(&y[range], &w)
                })
                .collect();
            let w: Vec<f64> = (k..n).map(|j| 2.0 * (j + 1) as f64).collect();
            t.push(r_sum(&y[k..], &w));
            t
        }
        ProblemKind::Wfg2 | ProblemKind::Wfg3 => {
            for v in &mut y[k..] {
                *v = s_linear(*v, 0.35);
            }
            let l = n - k;
            let mut y2: Vec<f64> = y[..k].to_vec();
            for i in 0..l / 2 {
                y2.push(r_nonsep(&y[k + 2 * i..k + 2 * i + 2], 2));
            }
            reduce_sum(&y2, k, m)
        }
        ProblemKind::Wfg4 => {
            for v in &mut y {
                *v = s_multi(*v, 30.0, 10.0, 0.35);
            }
            reduce_sum(&y, k, m)
        }
        ProblemKind::Wfg5 => {
            for v in &mut y {
                *v = s_decept(*v, 0.35, 0.001, 0.05);
            }
            reduce_sum(&y, k, m)
        }
        ProblemKind::Wfg6 => {
            for v in &mut y[k..] {
                *v = s_linear(*v, 0.35);
            }
            reduce_nonsep(&y, k, m)
        }
        ProblemKind::Wfg7 => {
            let orig = y.clone();
            for i in 0..k {
                y[i] = b_param(orig[i], mean(&orig[i + 1..]), param_weight_a(), 0.02, 50.0);
            }
            for v in &mut y[k..] {
                *v = s_linear(*v, 0.35);
            }
            reduce_sum(&y, k, m)
        }
        ProblemKind::Wfg8 => {
            let orig = y.clone();
            for i in k..n {
                y[i] = b_param(orig[i], mean(&orig[..i]), param_weight_a(), 0.02, 50.0);
            }
            for v in &mut y[k..] {
                *v = s_linear(*v, 0.35);
            }
            reduce_sum(&y, k, m)
        }
        ProblemKind::Wfg9 => {
            let orig = y.clone();
            for i in 0..n - 1 {
                y[i] = b_param(orig[i], mean(&orig[i + 1..]), param_weight_a(), 0.02, 50.0);
            }
            for v in &mut y[..k] {
                *v = s_decept(*v, 0.35, 0.001, 0.05);
            }
            for v in &mut y[k..] {
                *v = s_multi(*v, 30.0, 95.0, 0.35);
            }
            reduce_nonsep(&y, k, m)
        }
        _ => unreachable!("not a WFG problem"),
    };
    objectives(kind, &t)
}

/// Objectives of a front point with position parameters `x` (length M - 1,
/// each in `[0, 1]`) and zero distance.
pub(crate) fn front_point(kind: ProblemKind, x: &[f64]) -> Vec<f64> {
    let m = x.len() + 1;
    let a = degeneracy(kind, m);
    let xs: Vec<f64> = x
        .iter()
        .zip(&a)
        .map(|(&v, &ai)| if ai == 0.0 { 0.5 } else { v })
        .collect();
    (1..=m)
        .map(|obj| 2.0 * obj as f64 * shape(kind, &xs, obj))
        .collect()
}
