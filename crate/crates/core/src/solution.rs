//! Solutions and populations.

use crate::error::{contract, Result};

/// One evaluated candidate: decision vector, raw objectives and, once a
/// normalization context has been applied, the normalized objectives.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub x: Vec<f64>,
    pub f: Vec<f64>,
    pub f_norm: Option<Vec<f64>>,
}

impl Solution {
    pub fn new(x: Vec<f64>, f: Vec<f64>) -> Self {
        Self { x, f, f_norm: None }
    }

    /// Builds a solution that only lives in objective space (reference
    /// points, unit tests of the selection machinery).
    pub fn from_objectives(f: Vec<f64>) -> Self {
        Self::new(Vec::new(), f)
    }

    pub fn num_objectives(&self) -> usize {
        self.f.len()
    }

    pub fn normalized(&self) -> Result<&[f64]> {
        self.f_norm
            .as_deref()
            .ok_or_else(|| contract("solution has not been normalized"))
    }
}

/// Ordered multiset of solutions sharing the same `M` and `D`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Population {
    pub members: Vec<Solution>,
}

impl Population {
    pub fn new(members: Vec<Solution>) -> Self {
        Self { members }
    }

    pub fn from_objectives<I>(points: I) -> Self
    where
        I: IntoIterator<Item = Vec<f64>>,
    {
        Self::new(points.into_iter().map(Solution::from_objectives).collect())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Solution> {
        self.members.iter()
    }

    pub fn objectives(&self) -> Vec<Vec<f64>> {
        self.members.iter().map(|s| s.f.clone()).collect()
    }

    /// Number of objectives, `None` for an empty population.
    pub fn num_objectives(&self) -> Option<usize> {
        self.members.first().map(Solution::num_objectives)
    }

    pub fn concat(&self, other: &Population) -> Population {
        let mut members = Vec::with_capacity(self.len() + other.len());
        members.extend_from_slice(&self.members);
        members.extend_from_slice(&other.members);
        Population { members }
    }

    /// Population restricted to `indices`, in the given order.
    pub fn select(&self, indices: &[usize]) -> Population {
        Population::new(indices.iter().map(|&i| self.members[i].clone()).collect())
    }

    pub fn normalized_objectives(&self) -> Result<Vec<&[f64]>> {
        self.members.iter().map(Solution::normalized).collect()
    }
}

impl FromIterator<Solution> for Population {
    fn from_iter<T: IntoIterator<Item = Solution>>(iter: T) -> Self {
        Population::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Population {
    type Item = &'a Solution;
    type IntoIter = std::slice::Iter<'a, Solution>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
