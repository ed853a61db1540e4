//! Symmetric eigendecomposition.
//!
//! Two solvers share one result type. [`EigenMethod::Jacobi`] is a cyclic
//! Jacobi iteration written here; [`EigenMethod::Tridiagonal`] reduces to
//! tridiagonal form and runs implicit QR (backed by `nalgebra`), which is
//! roughly an order of magnitude faster on the kernel sizes met inside the
//! evolutionary loop.

use nalgebra::DMatrix;

use super::KernelMatrix;
use crate::error::{contract, Result};

/// Relative asymmetry tolerated on input.
pub const SYMMETRY_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum EigenMethod {
    Jacobi,
    #[default]
    Tridiagonal,
}

/// Eigenvalues in descending order with matching orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    n: usize,
    pub values: Vec<f64>,
    /// Eigenvector `r` occupies `vectors[r * n..(r + 1) * n]`.
    vectors: Vec<f64>,
}

impl EigenSystem {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn vector(&self, r: usize) -> &[f64] {
        &self.vectors[r * self.n..(r + 1) * self.n]
    }

    /// `‖L − V Λ Vᵀ‖_F`.
    pub fn reconstruction_error(&self, l: &KernelMatrix) -> f64 {
        let n = self.n;
        let mut err = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut v = 0.0;
                for r in 0..n {
                    v += self.values[r] * self.vector(r)[i] * self.vector(r)[j];
                }
                err += (l.get(i, j) - v).powi(2);
            }
        }
        err.sqrt()
    }

    /// Largest `|⟨v_r, v_s⟩ − δ_rs|`.
    pub fn orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.n {
            for s in r..self.n {
                let d: f64 = self.vector(r).iter().zip(self.vector(s)).map(|(a, b)| a * b).sum();
                let target = if r == s { 1.0 } else { 0.0 };
                worst = worst.max((d - target).abs());
            }
        }
        worst
    }

    /// Sorts by descending eigenvalue; equal values keep solver order.
    fn sorted(n: usize, values: Vec<f64>, vectors: Vec<f64>) -> Self {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
        let mut vs = Vec::with_capacity(n * n);
        for &r in &order {
            vs.extend_from_slice(&vectors[r * n..(r + 1) * n]);
        }
        Self {
            n,
            values: order.iter().map(|&r| values[r]).collect(),
            vectors: vs,
        }
    }
}

/// Cyclic Jacobi decomposition of `l`.
pub fn eigendecompose(l: &KernelMatrix) -> Result<EigenSystem> {
    eigendecompose_with(l, EigenMethod::Jacobi)
}

pub fn eigendecompose_with(l: &KernelMatrix, method: EigenMethod) -> Result<EigenSystem> {
    if l.asymmetry() > SYMMETRY_TOL {
        return Err(contract(format!(
            "eigendecomposition needs a symmetric matrix (relative asymmetry {:e})",
            l.asymmetry()
        )));
    }
    Ok(match method {
        EigenMethod::Jacobi => jacobi(l),
        EigenMethod::Tridiagonal => tridiagonal(l),
    })
}

fn jacobi(l: &KernelMatrix) -> EigenSystem {
    let n = l.size();
    let mut a = l.as_slice().to_vec();
    // rows of `vt` are the eigenvector estimates
    let mut vt = vec![0.0; n * n];
    for i in 0..n {
        vt[i * n + i] = 1.0;
    }
    let total = l.frobenius();
    let stop = OFF_DIAGONAL_TOL * total;

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        if off.sqrt() <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[p * n + k];
                    let akq = a[q * n + k];
                    a[p * n + k] = c * akp - s * akq;
                    a[q * n + k] = s * akp + c * akq;
                }
                for k in 0..n {
                    a[k * n + p] = a[p * n + k];
                    a[k * n + q] = a[q * n + k];
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for k in 0..n {
                    let vp = vt[p * n + k];
                    let vq = vt[q * n + k];
                    vt[p * n + k] = c * vp - s * vq;
                    vt[q * n + k] = s * vp + c * vq;
                }
            }
        }
    }
    let values = (0..n).map(|i| a[i * n + i]).collect();
    EigenSystem::sorted(n, values, vt)
}

fn tridiagonal(l: &KernelMatrix) -> EigenSystem {
    let n = l.size();
    let m = DMatrix::from_row_slice(n, n, l.as_slice());
    let eig = m.symmetric_eigen();
    let mut vectors = Vec::with_capacity(n * n);
    for r in 0..n {
        vectors.extend(eig.eigenvectors.column(r).iter());
    }
    EigenSystem::sorted(n, eig.eigenvalues.iter().copied().collect(), vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(l: &KernelMatrix) -> [EigenSystem; 2] {
        [
            eigendecompose_with(l, EigenMethod::Jacobi).unwrap(),
            eigendecompose_with(l, EigenMethod::Tridiagonal).unwrap(),
        ]
    }

    #[test]
    fn identity_spectrum() {
        let l = KernelMatrix::from_fn(3, |i, j| if i == j { 1.0 } else { 0.0 });
        for e in both(&l) {
            assert_eq!(e.values, vec![1.0, 1.0, 1.0]);
        }
    }

    #[test]
    fn diagonal_spectrum() {
        let l = KernelMatrix::from_rows(&[vec![1.0, 0.0], vec![0.0, 3.0]]).unwrap();
        for e in both(&l) {
            assert!((e.values[0] - 3.0).abs() < 1e-15 && (e.values[1] - 1.0).abs() < 1e-15);
            assert!((e.vector(0)[1].abs() - 1.0).abs() < 1e-15);
            assert!(e.vector(0)[0].abs() < 1e-15);
        }
    }

    #[test]
    fn two_by_two_rotation() {
        let l = KernelMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        for e in both(&l) {
            assert!((e.values[0] - 3.0).abs() < 1e-14);
            assert!((e.values[1] - 1.0).abs() < 1e-14);
            assert!(e.reconstruction_error(&l) < 1e-14);
        }
    }

    #[test]
    fn rejects_asymmetric_input() {
        let l = KernelMatrix::from_rows(&[vec![1.0, 0.5], vec![0.4, 1.0]]).unwrap();
        assert!(eigendecompose(&l).is_err());
    }
}
