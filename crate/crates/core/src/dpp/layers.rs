//! Tie-breaking for rank-deficient kernels.
//!
//! A cosine kernel over `M` objectives has rank at most `M`, so for `k > M`
//! the eigenvalue 0 is shared by `n - M` eigenvectors and "the `k` largest"
//! is not determined by `L`. Here that tie is broken by the limit `ε → 0` of
//!
//! ```text
//! L_ε = Σ_j ε^(j-1) · L ∘ C^(∘(j-1)),    C_xy = L_xy / sqrt(L_xx L_yy)
//! ```
//!
//! which equals `L` at `ε = 0` and stays PSD (Schur product). Level 1 is the
//! support of `L` itself; level `j` adds the support of `L ∘ C^(∘(j-1))`
//! projected away from all earlier levels. In cosine mode `C` is the cosine
//! matrix, so every level is still an angular similarity.

use nalgebra::DMatrix;

use super::eigen::{eigendecompose_with, EigenMethod, EigenSystem};
use super::KernelMatrix;
use crate::error::Result;

/// Eigenvalues at or below this fraction of the level's trace count as zero.
pub const NULL_REL_EPS: f64 = 1e-10;
/// Hard cap on refinement levels.
pub const MAX_LEVELS: usize = 32;

/// Orthonormal eigenvectors ordered by (level, eigenvalue descending).
#[derive(Clone, Debug)]
pub struct LayeredSpectrum {
    pub n: usize,
    pub vectors: Vec<Vec<f64>>,
    pub values: Vec<f64>,
    /// Level of each vector, 1-based; `0` marks the arbitrary completion of
    /// directions no level separates (exact duplicates).
    pub levels: Vec<usize>,
}

impl LayeredSpectrum {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Index ranges of consecutive vectors sharing a level.
    pub fn level_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.levels.len() {
            if i == self.levels.len() || self.levels[i] != self.levels[start] {
                out.push(start..i);
                start = i;
            }
        }
        out
    }
}

fn support(eig: &EigenSystem, tol: f64) -> Vec<usize> {
    (0..eig.values.len()).filter(|&r| eig.values[r] > tol).collect()
}

fn to_kernel(m: &DMatrix<f64>) -> KernelMatrix {
    let n = m.nrows();
    KernelMatrix::from_fn(n, |i, j| 0.5 * (m[(i, j)] + m[(j, i)]))
}

/// Removes from `v` its components along `basis`, twice for stability, and
/// normalizes. Returns `None` if nothing is left.
fn orthogonalize(mut v: Vec<f64>, basis: &[Vec<f64>]) -> Option<Vec<f64>> {
    for _ in 0..2 {
        for b in basis {
            let d: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
            for (x, y) in v.iter_mut().zip(b) {
                *x -= d * y;
            }
        }
    }
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    (norm > 1e-8).then(|| v.into_iter().map(|x| x / norm).collect())
}

/// Pivoted Cholesky factor `H` (n × r) with `K ≈ H Hᵀ`, stopping once every
/// residual diagonal entry is at most `delta` or the rank reaches `max_rank`.
fn pivoted_cholesky(n: usize, entry: impl Fn(usize, usize) -> f64, delta: f64, max_rank: usize) -> DMatrix<f64> {
    let mut resid: Vec<f64> = (0..n).map(|i| entry(i, i)).collect();
    let mut cols: Vec<Vec<f64>> = Vec::new();
    while cols.len() < max_rank {
        let (p, &dp) = resid
            .iter()
            .enumerate()
            .fold((0, &f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best });
        if dp <= delta {
            break;
        }
        let root = dp.sqrt();
        let mut col: Vec<f64> = (0..n).map(|i| entry(i, p)).collect();
        for c in &cols {
            let cp = c[p];
            for (x, ci) in col.iter_mut().zip(c) {
                *x -= ci * cp;
            }
        }
        col.iter_mut().for_each(|x| *x /= root);
        for (r, c) in resid.iter_mut().zip(&col) {
            *r -= c * c;
        }
        resid[p] = 0.0;
        cols.push(col);
    }
    DMatrix::from_fn(n, cols.len(), |i, c| cols[c][i])
}

/// Largest `|K_ij - (H Hᵀ)_ij|`.
fn residual(n: usize, entry: impl Fn(usize, usize) -> f64, h: &DMatrix<f64>) -> f64 {
    let hht = h * h.transpose();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            worst = worst.max((entry(i, j) - hht[(i, j)]).abs());
        }
    }
    worst
}

/// Left singular vectors of `(I - QQᵀ) H` with squared singular value above
/// `tol`, largest first.
fn projected_support(h: &DMatrix<f64>, basis: &[Vec<f64>], tol: f64) -> Vec<(f64, Vec<f64>)> {
    let n = h.nrows();
    if h.ncols() == 0 {
        return Vec::new();
    }
    let mut ph = h.clone();
    if !basis.is_empty() {
        let q = DMatrix::from_fn(n, basis.len(), |i, c| basis[c][i]);
        ph -= &q * (q.transpose() * h);
    }
    let svd = ph.svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let mut found: Vec<(f64, Vec<f64>)> = svd
        .singular_values
        .iter()
        .enumerate()
        .map(|(c, s)| (s * s, u.column(c).iter().copied().collect()))
        .filter(|(v, _)| *v > tol)
        .collect();
    found.sort_by(|a, b| b.0.total_cmp(&a.0));
    found
}

fn push_level(out: &mut LayeredSpectrum, found: Vec<(f64, Vec<f64>)>, level: usize) {
    for (value, v) in found {
        if let Some(v) = orthogonalize(v, &out.vectors) {
            out.vectors.push(v);
            out.values.push(value);
            out.levels.push(level);
        }
    }
}

fn correlation(l: &KernelMatrix) -> impl Fn(usize, usize) -> f64 + '_ {
    move |i, j| {
        if i == j {
            return 1.0;
        }
        let d = (l.get(i, i) * l.get(j, j)).sqrt();
        if d > 0.0 {
            l.get(i, j) / d
        } else {
            0.0
        }
    }
}

/// At least `k` layered eigenvectors of `l` (all of level 1, then whole
/// refinement levels until `k` is reached, completed if needed).
///
/// Kernels that factor as `H Hᵀ` with rank below `k` are handled through
/// pivoted Cholesky factors of each level and thin SVDs, never forming a
/// dense `n × n` eigenproblem; anything else goes through `method`.
pub fn layered_spectrum(l: &KernelMatrix, k: usize, method: EigenMethod) -> Result<LayeredSpectrum> {
    let n = l.size();
    let trace: f64 = (0..n).map(|i| l.get(i, i).max(0.0)).sum();
    let tol = NULL_REL_EPS * trace;
    let mut out = LayeredSpectrum {
        n,
        vectors: Vec::new(),
        values: Vec::new(),
        levels: Vec::new(),
    };

    let entry = |i: usize, j: usize| l.get(i, j);
    let h = pivoted_cholesky(n, entry, tol / n as f64, k);
    let low_rank = h.ncols() < k && residual(n, entry, &h) <= tol;
    if low_rank {
        push_level(&mut out, projected_support(&h, &[], tol), 1);
        let corr = correlation(l);
        let mut level = 2;
        while out.len() < k && level <= MAX_LEVELS {
            let power = (level - 1) as i32;
            let level_entry = |i: usize, j: usize| l.get(i, j) * corr(i, j).powi(power);
            let level_tol = NULL_REL_EPS * (0..n).map(|i| level_entry(i, i).max(0.0)).sum::<f64>();
            let h = pivoted_cholesky(n, level_entry, level_tol / n as f64, n);
            let before = out.len();
            let found = projected_support(&h, &out.vectors, level_tol);
            push_level(&mut out, found, level);
            if out.len() == before {
                break;
            }
            level += 1;
        }
    } else {
        dense_layers(l, k, method, tol, &mut out)?;
    }

    // directions no level separates: coordinate axes projected out, in index order
    let mut i = 0;
    while out.len() < k && i < n {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        if let Some(v) = orthogonalize(e, &out.vectors) {
            out.vectors.push(v);
            out.values.push(0.0);
            out.levels.push(0);
        }
        i += 1;
    }
    Ok(out)
}

fn dense_layers(l: &KernelMatrix, k: usize, method: EigenMethod, tol: f64, out: &mut LayeredSpectrum) -> Result<()> {
    let n = l.size();
    let eig = eigendecompose_with(l, method)?;
    for r in support(&eig, tol) {
        out.vectors.push(eig.vector(r).to_vec());
        out.values.push(eig.values[r]);
        out.levels.push(1);
    }
    if out.len() >= k {
        return Ok(());
    }
    let corr = correlation(l);
    let corr = DMatrix::from_fn(n, n, |i, j| corr(i, j));
    let mut level_kernel = DMatrix::from_row_slice(n, n, l.as_slice());
    for level in 2..=MAX_LEVELS {
        level_kernel.component_mul_assign(&corr);
        let q = DMatrix::from_fn(n, out.len(), |i, c| out.vectors[c][i]);
        let kq = &level_kernel * &q;
        let qtkq = q.transpose() * &kq;
        let projected = &level_kernel - &q * kq.transpose() - &kq * q.transpose() + &q * qtkq * q.transpose();
        let eig = eigendecompose_with(&to_kernel(&projected), method)?;
        let level_tol = NULL_REL_EPS * level_kernel.diagonal().iter().map(|v| v.max(0.0)).sum::<f64>();
        let found = support(&eig, level_tol)
            .into_iter()
            .map(|r| (eig.values[r], eig.vector(r).to_vec()))
            .collect();
        let before = out.len();
        push_level(out, found, level);
        if out.len() >= k || out.len() == before {
            break;
        }
    }
    Ok(())
}
