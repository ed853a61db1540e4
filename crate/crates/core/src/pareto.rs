//! Pareto dominance under minimization.

use crate::error::{contract, Result};
use crate::solution::Population;

/// `true` iff `a` is no worse than `b` everywhere and strictly better somewhere.
pub fn dominates(a: &[f64], b: &[f64]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(contract(format!(
            "objective vectors differ in length ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    Ok(dominates_unchecked(a, b))
}

#[inline]
pub(crate) fn dominates_unchecked(a: &[f64], b: &[f64]) -> bool {
    let mut strictly = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly = true;
        }
    }
    strictly
}

/// Indices of the points not dominated by any other point, in input order.
/// Points with equal objective vectors never dominate each other, so
/// duplicates are all kept.
pub fn nondominated_indices(points: &[&[f64]]) -> Vec<usize> {
    let n = points.len();
    let mut dominated = vec![false; n];
    for i in 0..n {
        if dominated[i] {
            continue;
        }
        for j in (i + 1)..n {
            if dominated[j] {
                continue;
            }
            if dominates_unchecked(points[i], points[j]) {
                dominated[j] = true;
            } else if dominates_unchecked(points[j], points[i]) {
                dominated[i] = true;
                break;
            }
        }
    }
    (0..n).filter(|&i| !dominated[i]).collect()
}

pub fn nondominated_filter(pop: &Population) -> Population {
    let pts: Vec<&[f64]> = pop.iter().map(|s| s.f.as_slice()).collect();
    pop.select(&nondominated_indices(&pts))
}
