//! Symmetric eigensolver, eigenvalue multiplicities of `ℋ^(N)` and Gram
//! diagnostics for the folded eigenvector families.

use crate::error::{Error, Result};
use crate::hermite::SusyIndex;
use crate::matrix::Matrix;
use crate::mehta::{verify_hartley_eigen, EigenvectorFamily, TruncationPolicy};
use crate::transform::{dht_matrix, dht_naive, RealSequence};

pub const MAX_SWEEPS: usize = 100;
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;
/// Eigenvalues within this distance of ±1 are counted as ±1.
pub const MULTIPLICITY_TOLERANCE: f64 = 1e-8;
/// Eigenvalues farther than this from ±1 indicate a broken kernel.
pub const SPECTRUM_ERROR_TOLERANCE: f64 = 1e-6;
pub const DEFAULT_THRESHOLD_FACTOR: f64 = 10.0;

/// `A = V Λ Vᵀ` with eigenvalues descending and eigenvectors as columns of `V`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Matrix,
    pub max_offdiag: f64,
}

impl SymmetricEigenDecomposition {
    /// `V Λ Vᵀ`.
    pub fn reconstruct(&self) -> Matrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        Matrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| v[(i, k)] * self.eigenvalues[k] * v[(j, k)])
                .sum()
        })
    }
}

fn off_diagonal_max(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut m = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m = m.max(a[(i, j)].abs());
            }
        }
    }
    m
}

/// Cyclic Jacobi rotations until the largest off-diagonal entry drops below
/// `tol·‖A‖_F`.
pub fn jacobi_eigen(a: &Matrix, tol: f64) -> Result<SymmetricEigenDecomposition> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if a.data().iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("matrix entry"));
    }
    let asym = a.max_asymmetry();
    if asym > SYMMETRY_TOLERANCE * a.max_abs().max(1.0) {
        return Err(Error::NotSymmetric(asym));
    }
    let n = a.rows();
    let mut w = Matrix::from_fn(n, n, |i, j| 0.5 * (a[(i, j)] + a[(j, i)]));
    let mut v = Matrix::identity(n);
    let target = tol * a.frobenius_norm();

    let mut sweeps = 0;
    let mut off = off_diagonal_max(&w);
    while off >= target && off > 0.0 {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_diagonal: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = w[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let app = w[(p, p)];
                let aqq = w[(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let wkp = w[(k, p)];
                    let wkq = w[(k, q)];
                    w[(k, p)] = c * wkp - s * wkq;
                    w[(k, q)] = s * wkp + c * wkq;
                }
                for k in 0..n {
                    let wpk = w[(p, k)];
                    let wqk = w[(q, k)];
                    w[(p, k)] = c * wpk - s * wqk;
                    w[(q, k)] = s * wpk + c * wqk;
                }
                w[(p, q)] = 0.0;
                w[(q, p)] = 0.0;
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
        sweeps += 1;
        off = off_diagonal_max(&w);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| w[(j, j)].total_cmp(&w[(i, i)]));
    let eigenvalues = order.iter().map(|&i| w[(i, i)]).collect();
    let eigenvectors = Matrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(SymmetricEigenDecomposition {
        eigenvalues,
        eigenvectors,
        max_offdiag: off,
    })
}

/// Multiplicities of the eigenvalues `+1` and `−1` of `ℋ^(N)`.
pub fn dht_spectrum(n: usize) -> Result<(usize, usize)> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let eig = jacobi_eigen(&dht_matrix(n), 1e-15)?;
    let mut plus = 0;
    let mut minus = 0;
    for &lambda in &eig.eigenvalues {
        let dp = (lambda - 1.0).abs();
        let dm = (lambda + 1.0).abs();
        if dp.min(dm) > SPECTRUM_ERROR_TOLERANCE {
            return Err(Error::NotAnInvolution(dp.min(dm)));
        }
        if dp <= MULTIPLICITY_TOLERANCE {
            plus += 1;
        } else if dm <= MULTIPLICITY_TOLERANCE {
            minus += 1;
        } else {
            return Err(Error::NotAnInvolution(dp.min(dm)));
        }
    }
    Ok((plus, minus))
}

/// Gram-matrix diagnostics of a family of vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct GramReport {
    pub size: usize,
    /// Descending.
    pub gram_eigenvalues: Vec<f64>,
    pub rank: usize,
    pub rank_threshold: f64,
    /// Smallest angle between two distinct members, in degrees.
    pub min_angle_deg: f64,
    /// Gram matrix of the normalized columns.
    pub gram: Matrix,
}

impl GramReport {
    /// Largest `|⟨uᵢ, uⱼ⟩|` over `i ≠ j`.
    pub fn max_offdiagonal(&self) -> f64 {
        off_diagonal_max(&self.gram)
    }
}

/// Gram matrix of the normalized vectors of `vectors`, its spectrum and
/// numerical rank with threshold `threshold_factor·N·ε·λ_max`.
pub fn gram_report(vectors: &[RealSequence], threshold_factor: f64) -> Result<GramReport> {
    if vectors.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = vectors[0].len();
    let mut columns = Vec::with_capacity(vectors.len());
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        let norm = v.norm2();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        columns.push(v.values().iter().map(|x| x / norm).collect::<Vec<_>>());
    }
    let size = columns.len();
    let mut gram = Matrix::zeros(size, size);
    for i in 0..size {
        for j in i..size {
            let g = if i == j {
                1.0
            } else {
                columns[i].iter().zip(&columns[j]).map(|(a, b)| a * b).sum()
            };
            gram[(i, j)] = g;
            gram[(j, i)] = g;
        }
    }
    let eig = jacobi_eigen(&gram, 1e-15)?;
    let lambda_max = eig.eigenvalues[0].max(0.0);
    let rank_threshold = threshold_factor * n as f64 * f64::EPSILON * lambda_max;
    let rank = eig
        .eigenvalues
        .iter()
        .filter(|&&l| l > rank_threshold)
        .count();
    let mut min_angle_deg = f64::INFINITY;
    for i in 0..size {
        for j in i + 1..size {
            let c = gram[(i, j)].abs().min(1.0);
            min_angle_deg = min_angle_deg.min(c.acos().to_degrees());
        }
    }
    if size == 1 {
        min_angle_deg = 90.0;
    }
    Ok(GramReport {
        size,
        gram_eigenvalues: eig.eigenvalues,
        rank,
        rank_threshold,
        min_angle_deg,
        gram,
    })
}

pub fn gram_rank(family: &EigenvectorFamily, threshold_factor: f64) -> Result<GramReport> {
    gram_report(family.vectors(), threshold_factor)
}

/// One row of a Hartley eigen-residual sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualRow {
    pub nu: SusyIndex,
    pub lambda: f64,
    /// Relative residual.
    pub residual: f64,
    /// `‖G_ν‖_∞`.
    pub norm: f64,
}

/// `verify_hartley_eigen` for each index, in the given order.
pub fn residual_table(
    n: usize,
    nu_list: &[SusyIndex],
    policy: &TruncationPolicy,
) -> Result<Vec<ResidualRow>> {
    nu_list
        .iter()
        .map(|&nu| {
            let report = verify_hartley_eigen(n, nu, policy)?;
            Ok(ResidualRow {
                nu,
                lambda: report.eigenvalue.re,
                residual: report.relative_residual(),
                norm: report.norm_sup,
            })
        })
        .collect()
}

/// `‖P_λ v − v‖₂ / ‖v‖₂` with `P_λ = ½(I + λℋ^(N))`.
pub fn eigenspace_membership(n: usize, v: &RealSequence, lambda: f64) -> Result<f64> {
    if lambda != 1.0 && lambda != -1.0 {
        return Err(Error::InvalidEigenvalue(lambda));
    }
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    let norm = v.norm2();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let hv = dht_naive(v);
    let diff: f64 = v
        .values()
        .iter()
        .zip(hv.values())
        .map(|(x, h)| {
            let projected = 0.5 * (x + lambda * h);
            (projected - x).powi(2)
        })
        .sum();
    Ok(diff.sqrt() / norm)
}

/// `½(I + λℋ^(N))` as a matrix.
pub fn spectral_projector(n: usize, lambda: f64) -> Result<Matrix> {
    if lambda != 1.0 && lambda != -1.0 {
        return Err(Error::InvalidEigenvalue(lambda));
    }
    let h = dht_matrix(n);
    Ok(Matrix::from_fn(n, n, |i, j| {
        0.5 * (if i == j { 1.0 } else { 0.0 } + lambda * h[(i, j)])
    }))
}
