//! Corner solution archive.
//!
//! For every objective `i` the archive keeps the first `⌈N/(3M)⌉` solutions
//! sorted by `f_i` and the first `⌈2N/(3M)⌉` solutions sorted by the norm of
//! the remaining `M - 1` objectives. Sorting uses raw objective values. Ties
//! are broken by the full objective norm and then by insertion order, so a
//! stale member cannot block a better converged one with the same key. A solution may appear in several
//! lists and is then stored several times.

use crate::error::{contract, Result};
use crate::normalize::NormalizationContext;
use crate::solution::{Population, Solution};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CornerArchive {
    pub members: Vec<Solution>,
}

/// `(⌈N/(3M)⌉, ⌈2N/(3M)⌉)`.
pub fn quotas(n: usize, m: usize) -> (usize, usize) {
    (n.div_ceil(3 * m), (2 * n).div_ceil(3 * m))
}

fn norm_without(f: &[f64], skip: usize) -> f64 {
    f.iter()
        .enumerate()
        .filter(|&(j, _)| j != skip)
        .map(|(_, v)| v * v)
        .sum::<f64>()
        .sqrt()
}

/// Indices in ascending `keys` order, then ascending `tiebreak`; the sort is
/// stable so remaining ties keep insertion order.
fn ascending(keys: &[f64], tiebreak: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| {
        keys[a]
            .total_cmp(&keys[b])
            .then(tiebreak[a].total_cmp(&tiebreak[b]))
    });
    order
}

pub fn build_csa(source: &Population, n: usize, m: usize) -> CornerArchive {
    let (single, rest) = quotas(n, m);
    let mut members = Vec::with_capacity(m * (single + rest));
    let full: Vec<f64> = source.iter().map(|s| norm_without(&s.f, usize::MAX)).collect();
    for i in 0..m {
        let by_objective: Vec<f64> = source.iter().map(|s| s.f[i]).collect();
        let by_others: Vec<f64> = source.iter().map(|s| norm_without(&s.f, i)).collect();
        for (keys, quota) in [(by_objective, single), (by_others, rest)] {
            members.extend(
                ascending(&keys, &full)
                    .into_iter()
                    .take(quota)
                    .map(|j| source.members[j].clone()),
            );
        }
    }
    CornerArchive { members }
}

/// Rebuilds the archive over `old ∪ offspring`.
pub fn update_csa(old: &CornerArchive, offspring: &Population, n: usize) -> CornerArchive {
    let union = Population::new(old.members.clone()).concat(offspring);
    match union.num_objectives() {
        Some(m) => build_csa(&union, n, m),
        None => CornerArchive::default(),
    }
}

impl CornerArchive {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn as_population(&self) -> Population {
        Population::new(self.members.clone())
    }

    /// Largest Euclidean norm of a normalized archive member: the boundary
    /// between inside and outside space.
    pub fn threshold(&self, ctx: &NormalizationContext) -> Result<f64> {
        if self.members.is_empty() {
            return Err(contract("threshold of an empty corner archive"));
        }
        Ok(self
            .members
            .iter()
            .map(|s| ctx.apply(&s.f).iter().map(|v| v * v).sum::<f64>().sqrt())
            .fold(f64::NEG_INFINITY, f64::max))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_ctx(m: usize) -> NormalizationContext {
        NormalizationContext {
            ideal: vec![0.0; m],
            nadir: vec![1.0; m],
        }
    }

    #[test]
    fn quota_arithmetic() {
        assert_eq!(quotas(126, 5), (9, 17));
        let (a, b) = quotas(126, 5);
        assert_eq!(5 * a + 5 * b, 130);
        assert_eq!(quotas(230, 10), (8, 16));
    }

    #[test]
    fn archive_size_for_large_source() {
        let pts: Vec<Vec<f64>> = (0..300)
            .map(|i| {
                let a = i as f64 / 299.0;
                vec![a, 1.0 - a, (a * 7.0).sin().abs()]
            })
            .collect();
        let csa = build_csa(&Population::from_objectives(pts), 90, 3);
        let (a, b) = quotas(90, 3);
        assert_eq!(csa.len(), 3 * (a + b));
    }

    #[test]
    fn small_source_is_truncated() {
        let src = Population::from_objectives(vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![0.5, 0.5]]);
        let csa = build_csa(&src, 30, 2);
        // each of the four lists holds all three solutions
        assert_eq!(csa.len(), 12);
        for s in &csa.members {
            assert!(src.members.contains(s));
        }
    }

    #[test]
    fn k1_list_is_sorted_and_headed_by_minimizer() {
        let src = Population::from_objectives(vec![
            vec![0.9, 0.2, 0.4],
            vec![0.1, 0.8, 0.3],
            vec![0.5, 0.5, 0.1],
            vec![0.3, 0.1, 0.9],
        ]);
        let csa = build_csa(&src, 18, 3);
        let (single, rest) = quotas(18, 3);
        for i in 0..3 {
            let block = &csa.members[i * (single + rest)..i * (single + rest) + single];
            for w in block.windows(2) {
                assert!(w[0].f[i] <= w[1].f[i]);
            }
        }
        assert_eq!(csa.members[0].f, vec![0.1, 0.8, 0.3]);
    }

    #[test]
    fn update_with_empty_offspring_keeps_threshold() {
        let src = Population::from_objectives(vec![vec![0.2, 0.9], vec![0.8, 0.1], vec![0.6, 0.6]]);
        let csa = build_csa(&src, 6, 2);
        let ctx = identity_ctx(2);
        let again = update_csa(&csa, &Population::default(), 6);
        assert_eq!(csa.threshold(&ctx).unwrap(), again.threshold(&ctx).unwrap());
    }

    #[test]
    fn threshold_examples() {
        let ctx = identity_ctx(2);
        let csa = CornerArchive {
            members: Population::from_objectives(vec![vec![1.0, 0.0], vec![0.0, 1.0]]).members,
        };
        assert_eq!(csa.threshold(&ctx).unwrap(), 1.0);
        let csa = CornerArchive {
            members: Population::from_objectives(vec![vec![0.3, 0.4]]).members,
        };
        assert!((csa.threshold(&ctx).unwrap() - 0.5).abs() < 1e-15);
        assert!(CornerArchive::default().threshold(&ctx).is_err());
    }
}
