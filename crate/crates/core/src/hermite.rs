//! Classical Hermite polynomials and functions, Kummer's ₁F₁, and the
//! supersymmetric Hermite polynomials
//!
//! ```text
//! ℋ_{±n}(x) = H_{2n}(x) ± 2√n H_{2n−1}(x)
//! ```
//!
//! whose Gaussian-weighted versions `e^{−x²/2} ℋ_ν` are eigenfunctions of the
//! supercharge `Q = (∂_x R + x)/√2` (eigenvalue `±√(2n)`) and of the
//! continuous Hartley transform (eigenvalue `(−1)^n`).

use crate::error::{Error, Result};
use crate::quadrature::QuadratureGrid;
use std::f64::consts::{LN_2, PI};
use std::fmt;

/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence.
pub fn hermite_eval(n: u32, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * x;
    for m in 1..n {
        let next = 2.0 * x * cur - 2.0 * m as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

// Rescale threshold for the normalized recurrences.
const BIG: f64 = 1e150;

/// Hermite function `ψ_n(x) = e^{−x²/2} H_n(x) / √(2ⁿ n! √π)`.
///
/// Runs the orthonormal recurrence on `ψ_k e^{x²/2}` and carries a separate
/// log-scale, so nothing overflows or underflows before the final exponential.
pub fn hermite_function(n: u32, x: f64) -> f64 {
    let (p, log_scale) = orthonormal_pair(n, x).0;
    finish(p, log_scale, x)
}

/// `(ψ_n(x), ψ_{n−1}(x))`, with `ψ_{−1} = 0`.
pub(crate) fn hermite_function_pair(n: u32, x: f64) -> (f64, f64) {
    let ((p, ls), prev) = orthonormal_pair(n, x);
    (finish(p, ls, x), finish(prev, ls, x))
}

fn finish(p: f64, log_scale: f64, x: f64) -> f64 {
    if p == 0.0 {
        return 0.0;
    }
    let log_mag = p.abs().ln() + log_scale - 0.5 * x * x - 0.25 * PI.ln();
    p.signum() * log_mag.exp()
}

// Returns ((p_n, log_scale), p_{n−1}) where ψ_k = p_k · exp(log_scale − x²/2) · π^{−1/4}.
fn orthonormal_pair(n: u32, x: f64) -> ((f64, f64), f64) {
    let mut prev = 0.0;
    let mut cur = 1.0;
    let mut log_scale = 0.0;
    for k in 0..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > BIG {
            prev /= BIG;
            cur /= BIG;
            log_scale += BIG.ln();
        }
    }
    ((cur, log_scale), prev)
}

/// `ln(n!)` by direct summation (exact to rounding for the sizes used here).
pub fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// `e^{−x²/2} H_n(x)`, evaluated through ψ_n so large `|x|` underflows to 0
/// instead of producing `0·∞`.
pub fn gaussian_hermite(n: u32, x: f64) -> f64 {
    let log_c = 0.5 * (n as f64 * LN_2 + ln_factorial(n as u64) + 0.5 * PI.ln());
    hermite_function(n, x) * log_c.exp()
}

/// Kummer's confluent hypergeometric function `₁F₁(a; b; z)`.
///
/// Terminating series are summed exactly when `a` is a non-positive integer;
/// otherwise terms are accumulated until they drop below `1e−16` of the sum.
pub fn kummer_1f1(a: f64, b: f64, z: f64) -> Result<f64> {
    const MAX_TERMS: usize = 100_000;
    let b_pole = b <= 0.0 && b == b.round();
    let terminating = a <= 0.0 && a == a.round();
    if terminating {
        let last = (-a) as usize;
        // (b)_n vanishes at n = 1 − b; a pole is hit if that happens before the series stops.
        if b_pole && ((-b) as usize) < last {
            return Err(Error::HypergeometricPole { b });
        }
        let mut term = 1.0;
        let mut sum = 1.0;
        for n in 0..last {
            let nf = n as f64;
            term *= (a + nf) * z / ((b + nf) * (nf + 1.0));
            sum += term;
        }
        return Ok(sum);
    }
    if b_pole {
        return Err(Error::HypergeometricPole { b });
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let ratio = (a + nf) * z / ((b + nf) * (nf + 1.0));
        term *= ratio;
        sum += term;
        if term.abs() <= 1e-16 * sum.abs() && ratio.abs() < 1.0 {
            return Ok(sum);
        }
        if !sum.is_finite() {
            return Err(Error::NonFinite("1F1 series"));
        }
    }
    Err(Error::SeriesNotConverged(MAX_TERMS))
}

/// Signed index ν = ±n of a supersymmetric Hermite polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SusyIndex(i64);

impl SusyIndex {
    pub const ZERO: SusyIndex = SusyIndex(0);

    pub fn new(nu: i64) -> Self {
        SusyIndex(nu)
    }

    pub fn plus(n: u32) -> Self {
        SusyIndex(n as i64)
    }

    pub fn minus(n: u32) -> Self {
        SusyIndex(-(n as i64))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    /// `n = |ν|`.
    pub fn order(self) -> u32 {
        self.0.unsigned_abs() as u32
    }

    /// `+1`, `−1`, or `0` for ν = 0 where both branches coincide.
    pub fn branch(self) -> i64 {
        self.0.signum()
    }

    /// The Hartley eigenvalue `(−1)^{|ν|}`.
    pub fn hartley_eigenvalue(self) -> f64 {
        if self.order().is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    /// The supercharge eigenvalue `sign(ν)·√(2|ν|)`.
    pub fn supercharge_eigenvalue(self) -> f64 {
        self.branch() as f64 * (2.0 * self.order() as f64).sqrt()
    }

    /// Coefficient `±2√n` of `H_{2n−1}`; zero for ν = 0.
    fn odd_coefficient(self) -> f64 {
        self.branch() as f64 * 2.0 * (self.order() as f64).sqrt()
    }

    /// All indices with `|ν| ≤ n`, ordered `−n, …, 0, …, n`.
    pub fn symmetric_range(n: u32) -> Vec<SusyIndex> {
        (-(n as i64)..=n as i64).map(SusyIndex).collect()
    }
}

impl From<i64> for SusyIndex {
    fn from(nu: i64) -> Self {
        SusyIndex(nu)
    }
}

impl fmt::Display for SusyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `ℋ_ν(x) = H_{2n}(x) ± 2√n H_{2n−1}(x)`; `ℋ_0 = 1`.
pub fn susy_hermite(nu: SusyIndex, x: f64) -> f64 {
    let n = nu.order();
    if n == 0 {
        return 1.0;
    }
    hermite_eval(2 * n, x) + nu.odd_coefficient() * hermite_eval(2 * n - 1, x)
}

/// `e^{−x²/2} ℋ_ν(x)`, computed through Hermite functions.
pub fn gaussian_susy_hermite(nu: SusyIndex, x: f64) -> f64 {
    let n = nu.order();
    if n == 0 {
        return (-0.5 * x * x).exp();
    }
    // e^{−x²/2}H_{2n} = c ψ_{2n} and 2√n e^{−x²/2}H_{2n−1} = c ψ_{2n−1},
    // with c = √(2^{2n}(2n)!√π).
    let m = 2 * n;
    let log_c = 0.5 * (m as f64 * LN_2 + ln_factorial(m as u64) + 0.5 * PI.ln());
    let (even, odd) = hermite_function_pair(m, x);
    (even + nu.branch() as f64 * odd) * log_c.exp()
}

/// Normalization constant κ_n of `ψ̂_{±n} = κ_n^{−1} e^{−x²/2} ℋ_{±n}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormConstant {
    pub n: u32,
    pub kappa: f64,
    pub ln_kappa: f64,
}

/// `κ_n = π^{1/4} 2^{n+1/2} √((2n)!)` for `n ≥ 1`, and `κ_0 = π^{1/4}`.
///
/// For `n ≥ 1`, `κ_n² = ∫ ℋ_{±n}² e^{−x²} dx = √π 2^{2n+1} (2n)!`. At `n = 0`
/// the polynomial is the constant 1 (only one branch), so `κ_0² = √π`.
pub fn susy_norm_const(n: u32) -> Result<NormConstant> {
    let ln_kappa = if n == 0 {
        0.25 * PI.ln()
    } else {
        0.25 * PI.ln() + (n as f64 + 0.5) * LN_2 + 0.5 * ln_factorial(2 * n as u64)
    };
    let kappa = ln_kappa.exp();
    if !kappa.is_finite() {
        return Err(Error::NormOverflow(n));
    }
    Ok(NormConstant { n, kappa, ln_kappa })
}

/// The normalized eigenfunction `ψ̂_ν(x) = κ^{−1} e^{−x²/2} ℋ_ν(x)`.
///
/// Equal to `(ψ_{2n} ± ψ_{2n−1})/√2` for `n ≥ 1` and `ψ_0` for `n = 0`; this
/// form never builds κ or the polynomial explicitly.
pub fn susy_wavefunction(nu: SusyIndex, x: f64) -> f64 {
    let n = nu.order();
    if n == 0 {
        return hermite_function(0, x);
    }
    let (even, odd) = hermite_function_pair(2 * n, x);
    (even + nu.branch() as f64 * odd) * std::f64::consts::FRAC_1_SQRT_2
}

/// `∫ ℋ_ν(x) ℋ_μ(x) e^{−x²} dx` by quadrature, for indices on the same branch.
pub fn susy_orthogonality_integral(
    nu: SusyIndex,
    mu: SusyIndex,
    grid: &QuadratureGrid,
) -> Result<f64> {
    if nu.branch() * mu.branch() < 0 {
        return Err(Error::BranchMismatch(nu.value(), mu.value()));
    }
    Ok(grid.integrate_weighted(|x| susy_hermite(nu, x) * susy_hermite(mu, x)))
}

/// `∫ ψ̂_ν ψ̂_μ dx` by quadrature, any branches.
pub fn susy_inner_product(nu: SusyIndex, mu: SusyIndex, grid: &QuadratureGrid) -> Result<f64> {
    let kn = susy_norm_const(nu.order())?;
    let km = susy_norm_const(mu.order())?;
    let scale = (-(kn.ln_kappa + km.ln_kappa)).exp();
    Ok(grid.integrate_weighted(|x| susy_hermite(nu, x) * susy_hermite(mu, x)) * scale)
}

/// Residuals of the ₁F₁ expressions for the even and odd Hermite polynomials:
///
/// ```text
/// H_{2n}(x)   = (−1)^n (2n)!/n!   ₁F₁(−n; 1/2; x²)
/// H_{2n+1}(x) = (−1)^n (2n+1)!/n! 2x ₁F₁(−n; 3/2; x²)
/// ```
pub fn hermite_1f1_crosscheck(n: u32, x: f64) -> Result<(f64, f64)> {
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let nf = n as f64;
    let even_ratio: f64 = ((n + 1)..=(2 * n)).map(|k| k as f64).product();
    let odd_ratio = even_ratio * (2.0 * nf + 1.0);
    let z = x * x;
    let even = sign * even_ratio * kummer_1f1(-nf, 0.5, z)?;
    let odd = sign * odd_ratio * 2.0 * x * kummer_1f1(-nf, 1.5, z)?;
    Ok((
        (hermite_eval(2 * n, x) - even).abs(),
        (hermite_eval(2 * n + 1, x) - odd).abs(),
    ))
}
