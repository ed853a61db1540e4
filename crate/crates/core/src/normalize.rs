//! Ideal/nadir tracking and objective normalization.

use crate::csa::CornerArchive;
use crate::error::{contract, Result};
use crate::solution::Population;

/// Denominator floor for degenerate objective ranges.
pub const RANGE_EPS: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct NormalizationContext {
    pub ideal: Vec<f64>,
    pub nadir: Vec<f64>,
}

impl NormalizationContext {
    /// Ideal and nadir of `pop` (componentwise min and max of raw objectives).
    pub fn from_population(pop: &Population) -> Result<Self> {
        let m = pop
            .num_objectives()
            .ok_or_else(|| contract("cannot initialise normalization from an empty population"))?;
        let mut ideal = vec![f64::INFINITY; m];
        let mut nadir = vec![f64::NEG_INFINITY; m];
        for s in pop {
            for i in 0..m {
                ideal[i] = ideal[i].min(s.f[i]);
                nadir[i] = nadir[i].max(s.f[i]);
            }
        }
        Ok(Self { ideal, nadir })
    }

    pub fn num_objectives(&self) -> usize {
        self.ideal.len()
    }

    /// Maps one raw objective vector into the ideal/nadir box.
    pub fn apply(&self, f: &[f64]) -> Vec<f64> {
        f.iter()
            .zip(self.ideal.iter().zip(&self.nadir))
            .map(|(v, (lo, hi))| (v - lo) / (hi - lo).max(RANGE_EPS))
            .collect()
    }
}

/// Running componentwise minimum; never increases a component.
pub fn update_ideal(ctx: &NormalizationContext, pop: &Population) -> NormalizationContext {
    let mut ideal = ctx.ideal.clone();
    for s in pop {
        for (z, v) in ideal.iter_mut().zip(&s.f) {
            *z = z.min(*v);
        }
    }
    NormalizationContext {
        ideal,
        nadir: ctx.nadir.clone(),
    }
}

/// Recomputes the nadir from scratch as the componentwise max over `pop` and
/// the archive members. The ideal point is carried over.
pub fn update_nadir(
    ctx: &NormalizationContext,
    pop: &Population,
    csa: &CornerArchive,
) -> Result<NormalizationContext> {
    if pop.is_empty() {
        return Err(contract("nadir update needs a nonempty population"));
    }
    let mut nadir = vec![f64::NEG_INFINITY; ctx.num_objectives()];
    for s in pop.iter().chain(csa.members.iter()) {
        for (z, v) in nadir.iter_mut().zip(&s.f) {
            *z = z.max(*v);
        }
    }
    Ok(NormalizationContext {
        ideal: ctx.ideal.clone(),
        nadir,
    })
}

/// Returns a copy of `pop` with `f_norm` filled in from `ctx`.
pub fn normalize(pop: &Population, ctx: &NormalizationContext) -> Population {
    pop.iter()
        .map(|s| {
            let mut s = s.clone();
            s.f_norm = Some(ctx.apply(&s.f));
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(ideal: &[f64], nadir: &[f64]) -> NormalizationContext {
        NormalizationContext {
            ideal: ideal.to_vec(),
            nadir: nadir.to_vec(),
        }
    }

    #[test]
    fn ideal_update_examples() {
        let c = ctx(&[1.0, 1.0], &[2.0, 2.0]);
        let p = Population::from_objectives(vec![vec![0.5, 2.0]]);
        assert_eq!(update_ideal(&c, &p).ideal, vec![0.5, 1.0]);

        let p = Population::from_objectives(vec![vec![1.0, 1.0], vec![3.0, 4.0]]);
        assert_eq!(update_ideal(&c, &p), c);
    }

    #[test]
    fn nadir_update_includes_archive() {
        let c = ctx(&[0.0, 0.0], &[9.0, 9.0]);
        let p = Population::from_objectives(vec![vec![1.0, 3.0], vec![2.0, 2.0]]);
        let empty = CornerArchive::default();
        assert_eq!(update_nadir(&c, &p, &empty).unwrap().nadir, vec![2.0, 3.0]);

        let archive = CornerArchive {
            members: Population::from_objectives(vec![vec![5.0, 0.0]]).members,
            ..Default::default()
        };
        assert_eq!(update_nadir(&c, &p, &archive).unwrap().nadir, vec![5.0, 3.0]);
        assert!(update_nadir(&c, &Population::default(), &archive).is_err());
    }

    #[test]
    fn normalize_examples() {
        let c = ctx(&[0.0, 0.0], &[1.0, 10.0]);
        assert_eq!(c.apply(&[0.5, 5.0]), vec![0.5, 0.5]);
        assert_eq!(c.apply(&[0.0, 0.0]), vec![0.0, 0.0]);

        let degenerate = ctx(&[2.0, 0.0], &[2.0, 1.0]);
        assert_eq!(degenerate.apply(&[2.0, 0.25]), vec![0.0, 0.25]);
        assert!(degenerate.apply(&[2.0, 0.25]).iter().all(|v| v.is_finite()));
    }

    #[test]
    fn values_outside_the_box_are_not_clipped() {
        let c = ctx(&[0.0], &[1.0]);
        assert_eq!(c.apply(&[2.0]), vec![2.0]);
        assert_eq!(c.apply(&[-1.0]), vec![-1.0]);
    }
}
