//! Subset selection from a kernel: greedy DPP selection, k-DPP sampling and
//! the uniform baseline.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;

use super::eigen::{eigendecompose_with, EigenMethod, EigenSystem};
use super::layers::{layered_spectrum, LayeredSpectrum};
use super::KernelMatrix;
use crate::error::{config, contract, Error, Result};

/// Eigenvalues at or below this are outside the k-DPP support.
pub const SUPPORT_EPS: f64 = 1e-10;

/// How environmental selection picks survivors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SelectionStrategy {
    /// Top-`k` eigenvectors, greedy index choice.
    #[default]
    Dpp,
    /// Eigenvectors and indices sampled from the k-DPP.
    KDpp,
    /// `k` indices uniformly without replacement.
    Uniform,
}

impl SelectionStrategy {
    pub fn name(self) -> &'static str {
        match self {
            SelectionStrategy::Dpp => "dpp",
            SelectionStrategy::KDpp => "kdpp",
            SelectionStrategy::Uniform => "uniform",
        }
    }
}

impl fmt::Display for SelectionStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SelectionStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dpp" => Ok(SelectionStrategy::Dpp),
            "kdpp" => Ok(SelectionStrategy::KDpp),
            "uniform" => Ok(SelectionStrategy::Uniform),
            other => Err(config("strategies", format!("unknown selection strategy `{other}`"))),
        }
    }
}

/// Orthonormal set of column vectors of length `n`, shrunk one coordinate
/// at a time.
struct Basis {
    n: usize,
    cols: Vec<Vec<f64>>,
}

impl Basis {
    fn from_eigen(eig: &EigenSystem, which: &[usize]) -> Self {
        Self {
            n: eig.dim(),
            cols: which.iter().map(|&r| eig.vector(r).to_vec()).collect(),
        }
    }

    fn from_layers(spec: &LayeredSpectrum, which: &[usize]) -> Self {
        Self {
            n: spec.n,
            cols: which.iter().map(|&r| spec.vectors[r].clone()).collect(),
        }
    }

    /// `Σ_v (vᵀ e_i)²` for every `i`.
    fn scores(&self) -> Vec<f64> {
        let mut s = vec![0.0; self.n];
        for c in &self.cols {
            for (si, v) in s.iter_mut().zip(c) {
                *si += v * v;
            }
        }
        s
    }

    /// Replaces the basis by one of `span(V) ∩ e_i⊥`, one vector shorter.
    ///
    /// A Householder reflection in coefficient space maps the row
    /// `a = Vᵀ e_i` onto the first axis; the remaining reflected columns span
    /// the wanted subspace and stay orthonormal.
    fn eliminate(&mut self, i: usize) {
        let k = self.cols.len();
        if k == 0 {
            return;
        }
        let a: Vec<f64> = self.cols.iter().map(|c| c[i]).collect();
        let alpha = a.iter().map(|v| v * v).sum::<f64>().sqrt();
        if alpha == 0.0 {
            // e_i is already orthogonal; drop the weakest direction
            self.cols.pop();
            return;
        }
        let sign = if a[0] >= 0.0 { 1.0 } else { -1.0 };
        let mut w = a;
        w[0] += sign * alpha;
        let ww: f64 = w.iter().map(|v| v * v).sum();

        // y = V w
        let mut y = vec![0.0; self.n];
        for (c, &wr) in self.cols.iter().zip(&w) {
            if wr != 0.0 {
                for (yj, cj) in y.iter_mut().zip(c) {
                    *yj += wr * cj;
                }
            }
        }
        let mut next = Vec::with_capacity(k - 1);
        for (r, mut c) in self.cols.drain(..).enumerate().skip(1) {
            let f = 2.0 * w[r] / ww;
            for (cj, yj) in c.iter_mut().zip(&y) {
                *cj -= f * yj;
            }
            c[i] = 0.0;
            next.push(c);
        }
        self.cols = next;
    }

    #[cfg(test)]
    fn orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.cols.len() {
            for s in r..self.cols.len() {
                let d: f64 = self.cols[r].iter().zip(&self.cols[s]).map(|(a, b)| a * b).sum();
                worst = worst.max((d - if r == s { 1.0 } else { 0.0 }).abs());
            }
        }
        worst
    }
}

/// Projection loop shared by greedy and sampled selection. `pick` receives
/// the current scores (selected indices zeroed) and returns the next index.
fn project_and_pick<F>(mut basis: Basis, mut pick: F) -> Vec<usize>
where
    F: FnMut(&[f64]) -> usize,
{
    let mut selected = Vec::with_capacity(basis.cols.len());
    let mut taken = vec![false; basis.n];
    while !basis.cols.is_empty() {
        let mut scores = basis.scores();
        for (s, &t) in scores.iter_mut().zip(&taken) {
            if t {
                *s = 0.0;
            }
        }
        let i = pick(&scores);
        taken[i] = true;
        selected.push(i);
        basis.eliminate(i);
    }
    selected
}

fn argmax_lowest(scores: &[f64]) -> usize {
    let mut best = 0;
    for (i, &s) in scores.iter().enumerate() {
        if s > scores[best] {
            best = i;
        }
    }
    best
}

/// Greedy selection from an existing decomposition.
pub fn greedy_from_eigen(eig: &EigenSystem, k: usize) -> Result<Vec<usize>> {
    if k == 0 || k > eig.dim() {
        return Err(contract(format!("subset size {k} outside 1..={}", eig.dim())));
    }
    let top: Vec<usize> = (0..k).collect();
    Ok(project_and_pick(Basis::from_eigen(eig, &top), argmax_lowest))
}

/// Greedy DPP selection of `k` indices. The `k` eigenvectors with the largest
/// eigenvalues span the start subspace; each step takes the index with the
/// largest squared projection (lowest index on ties) and removes that
/// coordinate from the subspace. Returned in selection order.
///
/// When `k` exceeds the rank of `l`, the zero eigenvalue is shared and the
/// missing eigenvectors come from [`layered_spectrum`].
pub fn dpp_select_greedy(l: &KernelMatrix, k: usize) -> Result<Vec<usize>> {
    dpp_select_greedy_with(l, k, EigenMethod::default())
}

pub fn dpp_select_greedy_with(l: &KernelMatrix, k: usize, method: EigenMethod) -> Result<Vec<usize>> {
    if k == 0 || k > l.size() {
        return Err(contract(format!("subset size {k} outside 1..={}", l.size())));
    }
    let spec = layered_spectrum(l, k, method)?;
    let top: Vec<usize> = (0..k).collect();
    Ok(project_and_pick(Basis::from_layers(&spec, &top), argmax_lowest))
}

fn log_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// `log e_l(λ_1..λ_j)` for `l ≤ k`, `j ≤ n`, as a `(k + 1) × (n + 1)` table.
fn log_esp_table(lambda: &[f64], k: usize) -> Vec<Vec<f64>> {
    let n = lambda.len();
    let mut e = vec![vec![f64::NEG_INFINITY; n + 1]; k + 1];
    e[0].iter_mut().for_each(|v| *v = 0.0);
    for l in 1..=k {
        for j in 1..=n {
            let take = if lambda[j - 1] > 0.0 {
                lambda[j - 1].ln() + e[l - 1][j - 1]
            } else {
                f64::NEG_INFINITY
            };
            e[l][j] = log_add(e[l][j - 1], take);
        }
    }
    e
}

/// Elementary symmetric polynomials `e_0 … e_k` of `lambda`.
pub fn elementary_symmetric(lambda: &[f64], k: usize) -> Vec<f64> {
    let t = log_esp_table(lambda, k);
    (0..=k).map(|l| t[l][lambda.len()].exp()).collect()
}

/// Draws a `k`-subset of eigenvector indices with probability proportional
/// to the product of their eigenvalues.
fn sample_eigen_subset<R: Rng + ?Sized>(lambda: &[f64], k: usize, rng: &mut R) -> Vec<usize> {
    let e = log_esp_table(lambda, k);
    let mut chosen = Vec::with_capacity(k);
    let mut l = k;
    for j in (1..=lambda.len()).rev() {
        if l == 0 {
            break;
        }
        if j == l {
            // every remaining eigenvector is needed
            chosen.extend((0..j).rev());
            break;
        }
        let p = if lambda[j - 1] > 0.0 {
            (lambda[j - 1].ln() + e[l - 1][j - 1] - e[l][j]).exp()
        } else {
            0.0
        };
        if rng.random::<f64>() < p {
            chosen.push(j - 1);
            l -= 1;
        }
    }
    chosen.sort_unstable();
    chosen
}

fn sample_proportional<R: Rng + ?Sized>(scores: &[f64], rng: &mut R) -> usize {
    let total: f64 = scores.iter().sum();
    let mut u = rng.random::<f64>() * total;
    let mut last = 0;
    for (i, &s) in scores.iter().enumerate() {
        if s <= 0.0 {
            continue;
        }
        last = i;
        if u < s {
            return i;
        }
        u -= s;
    }
    last
}

fn clamped_spectrum(eig: &EigenSystem) -> Vec<f64> {
    eig.values
        .iter()
        .map(|&v| if v > SUPPORT_EPS { v } else { 0.0 })
        .collect()
}

/// Exact k-DPP sample of `k` distinct indices.
///
/// Errors when fewer than `k` eigenvalues exceed [`SUPPORT_EPS`].
pub fn kdpp_sample<R: Rng + ?Sized>(l: &KernelMatrix, k: usize, rng: &mut R) -> Result<Vec<usize>> {
    kdpp_sample_with(l, k, EigenMethod::default(), rng)
}

pub fn kdpp_sample_with<R: Rng + ?Sized>(
    l: &KernelMatrix,
    k: usize,
    method: EigenMethod,
    rng: &mut R,
) -> Result<Vec<usize>> {
    if k == 0 || k > l.size() {
        return Err(contract(format!("subset size {k} outside 1..={}", l.size())));
    }
    let eig = eigendecompose_with(l, method)?;
    let lambda = clamped_spectrum(&eig);
    let rank = lambda.iter().filter(|&&v| v > 0.0).count();
    if rank < k {
        return Err(contract(format!("kernel rank {rank} is below subset size {k}")));
    }
    let subset = sample_eigen_subset(&lambda, k, rng);
    Ok(project_and_pick(Basis::from_eigen(&eig, &subset), |s| {
        sample_proportional(s, rng)
    }))
}

/// k-DPP sampling that also accepts `k` above the kernel rank.
///
/// Eigenvectors come from [`layered_spectrum`]. Whole levels are kept while
/// they fit in `k`; the level that overflows contributes a subset drawn with
/// probability proportional to the product of its eigenvalues. This is the
/// k-DPP of the perturbed kernel in the limit `ε → 0`, and plain
/// [`kdpp_sample`] when the rank of `l` is at least `k`.
pub fn kdpp_sample_layered<R: Rng + ?Sized>(
    l: &KernelMatrix,
    k: usize,
    method: EigenMethod,
    rng: &mut R,
) -> Result<Vec<usize>> {
    if k == 0 || k > l.size() {
        return Err(contract(format!("subset size {k} outside 1..={}", l.size())));
    }
    let spec = layered_spectrum(l, k, method)?;
    let mut subset = Vec::with_capacity(k);
    for range in spec.level_ranges() {
        let need = k - subset.len();
        if need == 0 {
            break;
        }
        if range.len() <= need {
            subset.extend(range);
        } else if spec.levels[range.start] == 0 {
            subset.extend(index::sample(rng, range.len(), need).iter().map(|j| range.start + j));
        } else {
            let lambda = &spec.values[range.clone()];
            subset.extend(sample_eigen_subset(lambda, need, rng).into_iter().map(|j| range.start + j));
        }
    }
    Ok(project_and_pick(Basis::from_layers(&spec, &subset), |s| {
        sample_proportional(s, rng)
    }))
}

/// `k` distinct indices from `0..n`, uniformly without replacement, sorted.
pub fn uniform_sample<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Vec<usize>> {
    if k > n {
        return Err(contract(format!("cannot draw {k} of {n} indices")));
    }
    let mut v = index::sample(rng, n, k).into_vec();
    v.sort_unstable();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dpp::eigen::eigendecompose;
    use crate::rng::RngStream;

    fn diag(values: &[f64]) -> KernelMatrix {
        KernelMatrix::from_fn(values.len(), |i, j| if i == j { values[i] } else { 0.0 })
    }

    #[test]
    fn identity_tie_break() {
        for n in [2, 5, 9] {
            let mut s = dpp_select_greedy(&diag(&vec![1.0; n]), 2).unwrap();
            s.sort_unstable();
            assert_eq!(s, vec![0, 1]);
        }
    }

    #[test]
    fn top_eigenvector_decides_single_pick() {
        assert_eq!(dpp_select_greedy(&diag(&[4.0, 1.0]), 1).unwrap(), vec![0]);
        assert_eq!(dpp_select_greedy(&diag(&[1.0, 4.0]), 1).unwrap(), vec![1]);
    }

    #[test]
    fn size_errors() {
        let l = diag(&[1.0, 1.0]);
        assert!(dpp_select_greedy(&l, 3).is_err());
        assert!(dpp_select_greedy(&l, 0).is_err());
        let mut rng = RngStream::new(1);
        assert!(uniform_sample(3, 4, &mut rng).is_err());
        assert!(kdpp_sample(&diag(&[1.0, 0.0, 0.0]), 2, &mut rng).is_err());
    }

    #[test]
    fn elimination_keeps_basis_orthonormal_and_zeroes_coordinate() {
        let l = KernelMatrix::from_fn(12, |i, j| {
            let a = (i as f64 * 0.7).sin() + (j as f64 * 0.7).sin();
            (-(i as f64 - j as f64).powi(2) / 8.0).exp() + 0.01 * a * a * if i == j { 1.0 } else { 0.0 }
        });
        let eig = eigendecompose(&l).unwrap();
        let mut basis = Basis::from_eigen(&eig, &(0..6).collect::<Vec<_>>());
        let mut removed = Vec::new();
        while !basis.cols.is_empty() {
            let i = argmax_lowest(&basis.scores());
            basis.eliminate(i);
            removed.push(i);
            assert!(basis.orthonormality_error() < 1e-10);
            for c in &basis.cols {
                for &r in &removed {
                    assert!(c[r].abs() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn esp_matches_direct_expansion() {
        let lambda = [0.5, 1.5, 2.0, 0.25];
        let e = elementary_symmetric(&lambda, 4);
        assert!((e[0] - 1.0).abs() < 1e-14);
        assert!((e[1] - 4.25).abs() < 1e-12);
        let e2: f64 = (0..4)
            .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
            .map(|(i, j)| lambda[i] * lambda[j])
            .sum();
        assert!((e[2] - e2).abs() < 1e-12);
        assert!((e[4] - lambda.iter().product::<f64>()).abs() < 1e-12);
    }

    #[test]
    fn kdpp_identity_full_support() {
        let mut rng = RngStream::new(4);
        for _ in 0..20 {
            let mut s = kdpp_sample(&diag(&[1.0, 1.0, 1.0]), 3, &mut rng).unwrap();
            s.sort_unstable();
            assert_eq!(s, vec![0, 1, 2]);
        }
    }

    #[test]
    fn kdpp_negligible_eigenvalue() {
        let mut rng = RngStream::new(8);
        for _ in 0..200 {
            assert_eq!(kdpp_sample(&diag(&[1.0, 1e-30]), 1, &mut rng).unwrap(), vec![0]);
        }
    }

    #[test]
    fn layered_kdpp_handles_rank_deficiency() {
        // rank-2 kernel, k = 4
        let pts = [[1.0, 0.0], [0.0, 1.0], [0.7, 0.7], [0.9, 0.1], [0.2, 0.8]];
        let l = KernelMatrix::from_fn(5, |i, j| pts[i][0] * pts[j][0] + pts[i][1] * pts[j][1]);
        let mut rng = RngStream::new(2);
        let s = kdpp_sample_layered(&l, 4, EigenMethod::Jacobi, &mut rng).unwrap();
        let mut u = s.clone();
        u.sort_unstable();
        u.dedup();
        assert_eq!(u.len(), 4);
    }

    #[test]
    fn uniform_full_set() {
        let mut rng = RngStream::new(9);
        assert_eq!(uniform_sample(4, 4, &mut rng).unwrap(), vec![0, 1, 2, 3]);
        let a = uniform_sample(10, 3, &mut RngStream::new(5)).unwrap();
        let b = uniform_sample(10, 3, &mut RngStream::new(5)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn strategy_names() {
        for s in [SelectionStrategy::Dpp, SelectionStrategy::KDpp, SelectionStrategy::Uniform] {
            assert_eq!(s.name().parse::<SelectionStrategy>().unwrap(), s);
        }
        assert!("random".parse::<SelectionStrategy>().is_err());
    }
}
