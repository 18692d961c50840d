//! The cas kernel, the finite Hartley and Fourier transforms, and the
//! quadrature-based continuous Hartley transform.
//!
//! The finite Hartley transform of a length-`N` sequence is
//!
//! ```text
//! (ℋf)(j) = 1/√N Σ_k f(k) cas(2πjk/N),   cas(x) = cos(x) − sin(x)
//! ```
//!
//! It is real, symmetric and its own inverse. Kernel arguments are reduced
//! modulo `N` in integer arithmetic before any trig call, so the matrix is
//! bit-stable for large `N`.

use crate::error::{Error, Result};
use crate::fft::{RealFft, Sign};
use crate::matrix::Matrix;
use crate::quadrature::QuadratureGrid;
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

pub use crate::quadrature::QuadratureRule;

/// `cos(x) − sin(x)`.
#[inline]
pub fn cas(x: f64) -> f64 {
    x.cos() - x.sin()
}

/// Partial sum `Σ_{n<terms} (−1)^{n(n+1)/2} xⁿ/n!` of the power series of cas.
pub fn cas_series(x: f64, terms: usize) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0; // xⁿ/n!
    for n in 0..terms {
        if n > 0 {
            power *= x / n as f64;
        }
        // Signs + − − + repeating from n = 0.
        let sign = if matches!(n % 4, 0 | 3) { 1.0 } else { -1.0 };
        sum += sign * power;
    }
    sum
}

/// cas(2πm/N) with `m` reduced mod `N` first.
#[inline]
fn cas_turn(m: usize, n: usize) -> f64 {
    cas(TAU * (m % n) as f64 / n as f64)
}

/// A finite, non-empty, real sequence of samples on ℤ/Nℤ.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSequence {
    values: Vec<f64>,
}

impl RealSequence {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("sequence"));
        }
        Ok(Self { values })
    }

    pub(crate) fn from_trusted(values: Vec<f64>) -> Self {
        debug_assert!(!values.is_empty());
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Sample at an arbitrary integer index, read N-periodically.
    pub fn periodic(&self, j: i64) -> f64 {
        let n = self.values.len() as i64;
        self.values[j.rem_euclid(n) as usize]
    }

    pub fn norm2(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn norm_sup(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Naive,
    Fast,
}

/// A transform length and method, with the cas kernel table `cas(2πm/N)`
/// for `m = 0..N` cached.
#[derive(Debug, Clone)]
pub struct TransformPlan {
    len: usize,
    method: Method,
    kernel: Vec<f64>,
    fft: Option<RealFft>,
}

impl TransformPlan {
    pub fn new(len: usize, method: Method) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptySequence);
        }
        if method == Method::Fast && !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(len));
        }
        let kernel = (0..len).map(|m| cas_turn(m, len)).collect();
        let fft = (method == Method::Fast && len >= 2).then(|| RealFft::new(len, Sign::Positive));
        Ok(Self {
            len,
            method,
            kernel,
            fft,
        })
    }

    /// Fast when `len` is a power of two, naive otherwise.
    pub fn auto(len: usize) -> Result<Self> {
        let method = if len.is_power_of_two() {
            Method::Fast
        } else {
            Method::Naive
        };
        Self::new(len, method)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn kernel(&self) -> &[f64] {
        &self.kernel
    }
}

/// The N×N matrix with entries `cas(2πrs/N)/√N`.
pub fn dht_matrix(n: usize) -> Matrix {
    let scale = 1.0 / (n as f64).sqrt();
    let kernel: Vec<f64> = (0..n).map(|m| cas_turn(m, n) * scale).collect();
    Matrix::from_fn(n, n, |r, s| kernel[(r * s) % n])
}

/// Applies the finite Hartley transform with the plan's method.
pub fn dht_apply(plan: &TransformPlan, f: &RealSequence) -> Result<RealSequence> {
    if plan.len != f.len() {
        return Err(Error::DimensionMismatch {
            expected: plan.len,
            found: f.len(),
        });
    }
    let values = match plan.method {
        Method::Naive => naive_dht(&plan.kernel, f.values()),
        Method::Fast => fast_dht(plan.fft.as_ref(), f.values()),
    };
    Ok(RealSequence::from_trusted(values))
}

/// Fast transform for power-of-two lengths.
pub fn dht_fast(f: &RealSequence) -> Result<RealSequence> {
    let plan = TransformPlan::new(f.len(), Method::Fast)?;
    dht_apply(&plan, f)
}

/// The O(N²) reference transform, for any length.
pub fn dht_naive(f: &RealSequence) -> RealSequence {
    let n = f.len();
    let kernel: Vec<f64> = (0..n).map(|m| cas_turn(m, n)).collect();
    RealSequence::from_trusted(naive_dht(&kernel, f.values()))
}

fn naive_dht(kernel: &[f64], f: &[f64]) -> Vec<f64> {
    let n = f.len();
    let scale = 1.0 / (n as f64).sqrt();
    (0..n)
        .map(|j| {
            let mut idx = 0usize;
            let mut acc = 0.0;
            for &v in f {
                acc += v * kernel[idx];
                idx += j;
                if idx >= n {
                    idx -= n;
                }
            }
            acc * scale
        })
        .collect()
}

// ℋf = Re(Φf) − Im(Φf) where Φ has kernel exp(+2πi rs/N).
fn fast_dht(fft: Option<&RealFft>, f: &[f64]) -> Vec<f64> {
    let n = f.len();
    let Some(fft) = fft else {
        return f.to_vec();
    };
    let scale = 1.0 / (n as f64).sqrt();
    fft.process(f)
        .into_iter()
        .map(|z| (z.re - z.im) * scale)
        .collect()
}

/// Unitary DFT with kernel `exp(+2πi rs/N)/√N`.
pub fn dft_apply(f: &[Complex64]) -> Vec<Complex64> {
    let n = f.len();
    if n == 0 {
        return Vec::new();
    }
    let scale = 1.0 / (n as f64).sqrt();
    let roots: Vec<Complex64> = (0..n)
        .map(|m| Complex64::from_polar(1.0, TAU * m as f64 / n as f64))
        .collect();
    (0..n)
        .map(|r| {
            let mut idx = 0usize;
            let mut acc = Complex64::new(0.0, 0.0);
            for &v in f {
                acc += v * roots[idx];
                idx += r;
                if idx >= n {
                    idx -= n;
                }
            }
            acc * scale
        })
        .collect()
}

/// Continuous Hartley transform `(ℋψ)(λ) = 1/√(2π) ∫ ψ(x) cas(λx) dx`
/// evaluated by quadrature at each `λ`.
pub fn hartley_continuous(
    f: impl Fn(f64) -> f64,
    lambdas: &[f64],
    grid: &QuadratureGrid,
) -> Result<Vec<f64>> {
    let nodes = grid.nodes();
    let weights = grid.plain_weights();
    let weighted: Vec<f64> = nodes
        .iter()
        .zip(&weights)
        .map(|(&x, w)| {
            let v = f(x);
            if v.is_finite() {
                Ok(w * v)
            } else {
                Err(Error::NonFinite("integrand"))
            }
        })
        .collect::<Result<_>>()?;
    let scale = 1.0 / (2.0 * PI).sqrt();
    Ok(lambdas
        .iter()
        .map(|&lambda| {
            nodes
                .iter()
                .zip(&weighted)
                .map(|(&x, wf)| wf * cas(lambda * x))
                .sum::<f64>()
                * scale
        })
        .collect())
}

/// `max_{k,k'} |Σ_j cas(2πjk/N) cas(2πjk'/N) − N δ_{kk'}|`.
pub fn cas_orthogonality_check(n: usize) -> f64 {
    let kernel: Vec<f64> = (0..n).map(|m| cas_turn(m, n)).collect();
    let mut worst = 0.0f64;
    for k in 0..n {
        for kp in k..n {
            let s: f64 = (0..n)
                .map(|j| kernel[(j * k) % n] * kernel[(j * kp) % n])
                .sum();
            let target = if k == kp { n as f64 } else { 0.0 };
            worst = worst.max((s - target).abs());
        }
    }
    worst
}
