//! Mehta-type analytic eigenvectors of the finite Hartley and Fourier
//! transforms.
//!
//! The folding map sends a rapidly decaying `f` to the N-periodic sequence
//!
//! ```text
//! (M_N f)(j) = Σ_k f(√(2π/N)(kN + j))
//! ```
//!
//! and intertwines the continuous and finite Hartley transforms. Folding the
//! Hartley eigenfunctions `e^{−x²/2} ℋ_ν` gives vectors `G_ν` with
//! `ℋ^(N) G_ν = (−1)^{|ν|} G_ν`; folding `e^{−x²/2} H_n` gives Mehta's
//! Fourier eigenvectors `F_n` with `Φ^(N) F_n = iⁿ F_n`.

use crate::error::{Error, Result};
use crate::hermite::{gaussian_hermite, gaussian_susy_hermite, SusyIndex};
use crate::transform::{cas, dft_apply, dht_naive, RealSequence};
use num_complex::Complex64;
use std::f64::consts::{LN_2, PI};
use std::fmt;

/// A folded vector is treated as identically zero when its sup-norm is below
/// this fraction of the largest absolute summand sum.
pub const DEGENERACY_RATIO: f64 = 1e-12;

/// Tolerance and summation cutoff for the folded sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    epsilon: f64,
    k_max: usize,
}

impl TruncationPolicy {
    pub fn new(epsilon: f64, k_max: usize) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::EpsilonOutOfRange(epsilon));
        }
        if k_max == 0 {
            return Err(Error::InvalidArgument(
                "summation cutoff must be at least 1".into(),
            ));
        }
        Ok(Self { epsilon, k_max })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// Policy covering `G_ν` for `|ν| ≤ order`.
    pub fn for_hartley(n: usize, order: u32, epsilon: f64) -> Result<Self> {
        truncation_bound(n, order, epsilon)
    }

    /// Policy covering `F_m` (degree `m`).
    pub fn for_fourier(n: usize, degree: u32, epsilon: f64) -> Result<Self> {
        truncation_bound(n, degree.div_ceil(2), epsilon)
    }
}

/// Smallest `K ≥ 1` with
///
/// ```text
/// exp(−π/N ((K−1)N)²) · (1 + (√(2π/N) K N)^{2 n_max}) · 2^{2 n_max} < ε
/// ```
///
/// evaluated in the log domain.
pub fn truncation_bound(n: usize, n_max: u32, epsilon: f64) -> Result<TruncationPolicy> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let nf = n as f64;
    let degree = 2.0 * n_max as f64;
    let log_eps = epsilon.ln();
    let mut k = 1usize;
    loop {
        let kf = k as f64;
        let gauss = -PI / nf * ((kf - 1.0) * nf).powi(2);
        let y = (2.0 * PI / nf).sqrt() * kf * nf;
        let log_poly = degree * y.ln();
        // ln(1 + y^degree)
        let log_one_plus = if log_poly > 40.0 {
            log_poly
        } else {
            log_poly.exp().ln_1p()
        };
        if gauss + log_one_plus + degree * LN_2 < log_eps {
            return TruncationPolicy::new(epsilon, k);
        }
        k += 1;
    }
}

/// Summation indices `m ≡ j (mod N)`, `|m| ≤ bound`, in descending `|m|`,
/// with `+m` and `−m` paired when both belong to the class.
fn class_terms(n: usize, j: usize, bound: usize) -> Vec<(usize, bool, bool)> {
    let positive_start = j % n;
    let negative_start = (n - j % n) % n;
    let top = |start: usize| {
        if start > bound {
            None
        } else {
            Some(start + (bound - start) / n * n)
        }
    };
    let mut pos = top(positive_start);
    let mut neg = top(negative_start);
    let mut out = Vec::new();
    loop {
        match (pos, neg) {
            (None, None) => break,
            (Some(p), Some(q)) if p == q => {
                out.push((p, true, p != 0));
                pos = p.checked_sub(n);
                neg = q.checked_sub(n);
            }
            (Some(p), q) if q.is_none_or(|q| p > q) => {
                out.push((p, true, false));
                pos = p.checked_sub(n);
            }
            (_, Some(q)) => {
                out.push((q, false, true));
                neg = q.checked_sub(n);
            }
            (Some(_), None) => unreachable!(),
        }
    }
    out
}

/// Folded values and, per entry, the sum of absolute summands.
fn fold_with_scale(
    f: &impl Fn(f64) -> f64,
    n: usize,
    policy: &TruncationPolicy,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let step = (2.0 * PI / n as f64).sqrt();
    let bound = (policy.k_max + 1) * n - 1;
    let mut values = Vec::with_capacity(n);
    let mut scales = Vec::with_capacity(n);
    for j in 0..n {
        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        for (t, plus, minus) in class_terms(n, j, bound) {
            let x = step * t as f64;
            let mut pair = 0.0;
            if plus {
                let v = f(x);
                abs_sum += v.abs();
                pair += v;
            }
            if minus {
                let v = f(-x);
                abs_sum += v.abs();
                pair += v;
            }
            if !pair.is_finite() {
                return Err(Error::NonFinite("folded summand"));
            }
            sum += pair;
        }
        values.push(sum);
        scales.push(abs_sum);
    }
    Ok((values, scales))
}

/// The folding map `M_N f`, summed smallest terms first.
pub fn fold(f: impl Fn(f64) -> f64, n: usize, policy: &TruncationPolicy) -> Result<RealSequence> {
    let (values, _) = fold_with_scale(&f, n, policy)?;
    Ok(RealSequence::from_trusted(values))
}

/// `(M_N f)(j)` for any integer `j`; N-periodic in `j`.
pub fn fold_entry(
    f: impl Fn(f64) -> f64,
    n: usize,
    j: i64,
    policy: &TruncationPolicy,
) -> Result<f64> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let class = j.rem_euclid(n as i64) as usize;
    let step = (2.0 * PI / n as f64).sqrt();
    let bound = (policy.k_max + 1) * n - 1;
    let mut sum = 0.0;
    for (t, plus, minus) in class_terms(n, class, bound) {
        let x = step * t as f64;
        let pair = if plus { f(x) } else { 0.0 } + if minus { f(-x) } else { 0.0 };
        if !pair.is_finite() {
            return Err(Error::NonFinite("folded summand"));
        }
        sum += pair;
    }
    Ok(sum)
}

/// `G_ν(r) = Σ_k e^{−π/N (kN+r)²} ℋ_ν(√(2π/N)(kN + r))`.
pub fn mehta_hartley_vector(
    n: usize,
    nu: SusyIndex,
    policy: &TruncationPolicy,
) -> Result<RealSequence> {
    fold(|x| gaussian_susy_hermite(nu, x), n, policy)
}

/// Mehta's `F_m(r) = Σ_k e^{−π/N (kN+r)²} H_m(√(2π/N)(kN + r))`.
pub fn mehta_fourier_vector(
    n: usize,
    degree: u32,
    policy: &TruncationPolicy,
) -> Result<RealSequence> {
    fold(|x| gaussian_hermite(degree, x), n, policy)
}

/// Which analytic family a vector belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyIndex {
    Hartley(SusyIndex),
    Fourier(u32),
}

impl fmt::Display for FamilyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyIndex::Hartley(nu) => write!(f, "G[{nu}]"),
            FamilyIndex::Fourier(m) => write!(f, "F[{m}]"),
        }
    }
}

/// A set of folded eigenvectors for one `N`, one column per index.
#[derive(Debug, Clone)]
pub struct EigenvectorFamily {
    n: usize,
    indices: Vec<FamilyIndex>,
    vectors: Vec<RealSequence>,
    policy: TruncationPolicy,
}

impl EigenvectorFamily {
    pub fn hartley(n: usize, indices: &[SusyIndex], policy: TruncationPolicy) -> Result<Self> {
        let vectors = indices
            .iter()
            .map(|&nu| mehta_hartley_vector(n, nu, &policy))
            .collect::<Result<_>>()?;
        Ok(Self {
            n,
            indices: indices.iter().map(|&nu| FamilyIndex::Hartley(nu)).collect(),
            vectors,
            policy,
        })
    }

    pub fn fourier(n: usize, degrees: &[u32], policy: TruncationPolicy) -> Result<Self> {
        let vectors = degrees
            .iter()
            .map(|&m| mehta_fourier_vector(n, m, &policy))
            .collect::<Result<_>>()?;
        Ok(Self {
            n,
            indices: degrees.iter().map(|&m| FamilyIndex::Fourier(m)).collect(),
            vectors,
            policy,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn indices(&self) -> &[FamilyIndex] {
        &self.indices
    }

    pub fn vectors(&self) -> &[RealSequence] {
        &self.vectors
    }

    pub fn policy(&self) -> &TruncationPolicy {
        &self.policy
    }
}

/// `iⁿ` as an exact quarter turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuarterTurn(u8);

impl QuarterTurn {
    pub fn of(power: u32) -> Self {
        QuarterTurn((power % 4) as u8)
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }
}

/// Eigen-residual of one folded vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenReport {
    pub n: usize,
    pub index: FamilyIndex,
    pub eigenvalue: Complex64,
    /// `‖T v − λ v‖_∞`.
    pub residual_sup: f64,
    /// `‖v‖_∞`.
    pub norm_sup: f64,
    /// `max_r Σ_k |summand|`, the magnitude the fold was computed at.
    pub scale: f64,
    /// The vector vanishes to rounding; the eigenrelation holds trivially.
    pub degenerate: bool,
}

impl EigenReport {
    fn new(
        n: usize,
        index: FamilyIndex,
        eigenvalue: Complex64,
        residual_sup: f64,
        norm_sup: f64,
        scale: f64,
    ) -> Self {
        let degenerate = norm_sup < 1e-300 || norm_sup <= DEGENERACY_RATIO * scale;
        Self {
            n,
            index,
            eigenvalue,
            residual_sup,
            norm_sup,
            scale,
            degenerate,
        }
    }

    /// Residual relative to `‖v‖_∞`, or to the summand scale for degenerate vectors.
    pub fn relative_residual(&self) -> f64 {
        let denom = if self.degenerate {
            self.scale
        } else {
            self.norm_sup
        };
        if self.residual_sup == 0.0 {
            0.0
        } else {
            self.residual_sup / denom.max(f64::MIN_POSITIVE)
        }
    }
}

/// Checks `ℋ^(N) G_ν = (−1)^{|ν|} G_ν`.
pub fn verify_hartley_eigen(
    n: usize,
    nu: SusyIndex,
    policy: &TruncationPolicy,
) -> Result<EigenReport> {
    let f = |x| gaussian_susy_hermite(nu, x);
    let (values, scales) = fold_with_scale(&f, n, policy)?;
    let g = RealSequence::from_trusted(values);
    let image = dht_naive(&g);
    let lambda = nu.hartley_eigenvalue();
    let residual = image
        .values()
        .iter()
        .zip(g.values())
        .fold(0.0f64, |m, (h, v)| m.max((h - lambda * v).abs()));
    let scale = scales.iter().fold(0.0f64, |m, &s| m.max(s));
    Ok(EigenReport::new(
        n,
        FamilyIndex::Hartley(nu),
        Complex64::new(lambda, 0.0),
        residual,
        g.norm_sup(),
        scale,
    ))
}

/// Checks `Φ^(N) F_m = i^m F_m`.
pub fn verify_fourier_eigen(
    n: usize,
    degree: u32,
    policy: &TruncationPolicy,
) -> Result<EigenReport> {
    let f = |x| gaussian_hermite(degree, x);
    let (values, scales) = fold_with_scale(&f, n, policy)?;
    let complex: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let image = dft_apply(&complex);
    let lambda = QuarterTurn::of(degree).to_complex();
    let residual = image
        .iter()
        .zip(&complex)
        .fold(0.0f64, |m, (h, v)| m.max((h - lambda * v).norm()));
    let norm = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let scale = scales.iter().fold(0.0f64, |m, &s| m.max(s));
    Ok(EigenReport::new(
        n,
        FamilyIndex::Fourier(degree),
        lambda,
        residual,
        norm,
        scale,
    ))
}

/// Both sides of the Hartley–Poisson summation formula
///
/// ```text
/// ab Σ_r f(b(ar + x)) = √(2π) Σ_m (ℋf)(2πm/(ab)) cas(2πmx/a)
/// ```
///
/// truncated to `|r|, |m| ≤ terms`. `hf` is the continuous Hartley transform of `f`.
pub fn poisson_check(
    f: impl Fn(f64) -> f64,
    hf: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    x: f64,
    terms: usize,
) -> Result<(f64, f64)> {
    if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidArgument(
            "Poisson periods a, b must be positive".into(),
        ));
    }
    if !x.is_finite() {
        return Err(Error::NonFinite("Poisson shift"));
    }
    let mut lhs = 0.0;
    let mut rhs = 0.0;
    let freq = 2.0 * PI / (a * b);
    for t in (0..=terms as i64).rev() {
        let rs: &[i64] = if t == 0 { &[0] } else { &[t, -t] };
        for &r in rs {
            let l = f(b * (a * r as f64 + x));
            let h = hf(freq * r as f64) * cas(2.0 * PI * r as f64 * x / a);
            if !(l.is_finite() && h.is_finite()) {
                return Err(Error::NonFinite("Poisson summand"));
            }
            lhs += l;
            rhs += h;
        }
    }
    Ok((a * b * lhs, (2.0 * PI).sqrt() * rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn policy(n: usize, order: u32) -> TruncationPolicy {
        truncation_bound(n, order, 1e-16).unwrap()
    }

    #[test]
    fn class_terms_cover_symmetric_range() {
        for n in 1..9usize {
            let bound = 3 * n - 1;
            let mut seen = Vec::new();
            for j in 0..n {
                let terms = class_terms(n, j, bound);
                assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
                for (t, p, m) in terms {
                    if p {
                        assert_eq!(t % n, j);
                        seen.push(t as i64);
                    }
                    if m {
                        assert_eq!((n - t % n) % n, j);
                        seen.push(-(t as i64));
                    }
                }
            }
            seen.sort();
            let expected: Vec<i64> = (-(bound as i64)..=bound as i64).collect();
            assert_eq!(seen, expected, "n={n}");
        }
    }

    #[test]
    fn truncation_examples() {
        assert!(truncation_bound(8, 0, 1e-16).unwrap().k_max() <= 4);
        let k1 = truncation_bound(1, 0, 1e-16).unwrap().k_max();
        assert!((4..=5).contains(&k1), "{k1}");
        for n in [1, 3, 8, 30] {
            for order in [0, 3, 12] {
                let loose = truncation_bound(n, order, 1e-8).unwrap().k_max();
                let tight = truncation_bound(n, order, 1e-16).unwrap().k_max();
                assert!(loose <= tight);
            }
        }
        assert_eq!(
            truncation_bound(4, 0, 0.0),
            Err(Error::EpsilonOutOfRange(0.0))
        );
        assert_eq!(
            truncation_bound(4, 0, 1.0),
            Err(Error::EpsilonOutOfRange(1.0))
        );
    }

    #[test]
    fn fold_examples() {
        let p = policy(4, 0);
        let zero = fold(|_| 0.0, 4, &p).unwrap();
        assert!(zero.values().iter().all(|&v| v == 0.0));

        // N = 1: Σ_k e^{−πk²}, against a 50-term direct sum.
        let p1 = policy(1, 0);
        let v = fold(|x| (-0.5 * x * x).exp(), 1, &p1).unwrap().values()[0];
        let direct: f64 = (-50..=50).map(|k: i64| (-PI * (k * k) as f64).exp()).sum();
        assert!((v - direct).abs() < 1e-15);

        let g = fold(|x| (-0.5 * x * x).exp(), 4, &p).unwrap();
        assert!(g.values()[0] > g.values()[2] && g.values()[2] > 0.0);
    }

    #[test]
    fn fold_is_periodic() {
        let p = policy(7, 3);
        let f = |x: f64| gaussian_susy_hermite(SusyIndex::plus(3), x);
        let step = (2.0 * PI / 7.0).sqrt();
        for j in 0..7i64 {
            let a = fold_entry(f, 7, j, &p).unwrap();
            assert_eq!(a, fold_entry(f, 7, j + 7, &p).unwrap());
            assert_eq!(a, fold_entry(f, 7, j - 14, &p).unwrap());
            // Direct shifted sum Σ_{|k|≤K+2} f(step (kN + j + N)).
            let k = p.k_max() as i64 + 2;
            let shifted: f64 = (-k..=k).map(|kk| f(step * (kk * 7 + j + 7) as f64)).sum();
            assert!((a - shifted).abs() < 1e-15 * a.abs().max(1.0), "j={j}");
        }
    }

    #[test]
    fn odd_folds_are_exactly_antisymmetric() {
        let p = policy(2, 4);
        let odd = fold(|x| gaussian_hermite(3, x), 2, &p).unwrap();
        assert_eq!(odd.values(), &[0.0, 0.0]);
        let p = policy(9, 4);
        let odd = fold(|x| gaussian_hermite(5, x), 9, &p).unwrap();
        for r in 1..9 {
            assert_eq!(odd.values()[r], -odd.values()[9 - r]);
        }
    }

    #[test]
    fn hartley_vector_examples() {
        let p = policy(6, 0);
        let g0 = mehta_hartley_vector(6, SusyIndex::ZERO, &p).unwrap();
        assert!(g0.values().iter().all(|&v| v > 0.0));
        let r = verify_hartley_eigen(8, SusyIndex::plus(1), &policy(8, 1)).unwrap();
        assert_eq!(r.eigenvalue, Complex64::new(-1.0, 0.0));
        assert!(r.relative_residual() < 1e-10);
        let r = verify_hartley_eigen(5, SusyIndex::plus(2), &policy(5, 2)).unwrap();
        assert_eq!(r.eigenvalue.re, 1.0);
        assert!(r.relative_residual() < 1e-10);
    }

    #[test]
    fn hartley_vector_matches_direct_definition() {
        let n = 5;
        let nu = SusyIndex::minus(2);
        let p = policy(n, 2);
        let g = mehta_hartley_vector(n, nu, &p).unwrap();
        let step = (2.0 * PI / n as f64).sqrt();
        for r in 0..n {
            let direct: f64 = (-10i64..=10)
                .map(|k| {
                    let m = (k * n as i64 + r as i64) as f64;
                    (-PI / n as f64 * m * m).exp() * crate::hermite::susy_hermite(nu, step * m)
                })
                .sum();
            assert!(
                (g.values()[r] - direct).abs() < 1e-12 * direct.abs().max(1.0),
                "r={r}"
            );
        }
    }

    #[test]
    fn fourier_vector_examples() {
        let r = verify_fourier_eigen(6, 0, &TruncationPolicy::for_fourier(6, 0, 1e-16).unwrap())
            .unwrap();
        assert!(r.relative_residual() < 1e-12);
        let f = mehta_fourier_vector(6, 0, &TruncationPolicy::for_fourier(6, 0, 1e-16).unwrap())
            .unwrap();
        assert!(f.values().iter().all(|&v| v > 0.0));
        let r = verify_fourier_eigen(8, 1, &TruncationPolicy::for_fourier(8, 1, 1e-16).unwrap())
            .unwrap();
        assert_eq!(r.eigenvalue, Complex64::new(0.0, 1.0));
        assert!(r.relative_residual() < 1e-10);
        let r = verify_fourier_eigen(7, 3, &TruncationPolicy::for_fourier(7, 3, 1e-16).unwrap())
            .unwrap();
        assert_eq!(r.eigenvalue, Complex64::new(0.0, -1.0));
        assert!(r.relative_residual() < 1e-10);
    }

    #[test]
    fn verify_examples() {
        let r = verify_hartley_eigen(4, SusyIndex::ZERO, &policy(4, 0)).unwrap();
        assert!(r.relative_residual() < 1e-12 && r.eigenvalue.re == 1.0);
        let r = verify_hartley_eigen(16, SusyIndex::minus(3), &policy(16, 3)).unwrap();
        assert!(r.relative_residual() < 1e-10 && r.eigenvalue.re == -1.0);
        let r = verify_hartley_eigen(5, SusyIndex::plus(5), &policy(5, 5)).unwrap();
        assert!(r.relative_residual() < 1e-8 && r.eigenvalue.re == -1.0);

        let fp = |n, m| TruncationPolicy::for_fourier(n, m, 1e-16).unwrap();
        assert!(
            verify_fourier_eigen(3, 0, &fp(3, 0))
                .unwrap()
                .relative_residual()
                < 1e-12
        );
        let r = verify_fourier_eigen(8, 2, &fp(8, 2)).unwrap();
        assert!(r.relative_residual() < 1e-10 && r.eigenvalue.re == -1.0);
        let r = verify_fourier_eigen(8, 4, &fp(8, 4)).unwrap();
        assert!(r.relative_residual() < 1e-10 && r.eigenvalue.re == 1.0);
    }

    #[test]
    fn degenerate_vectors_are_flagged() {
        let fp = |n, m| TruncationPolicy::for_fourier(n, m, 1e-16).unwrap();
        for (n, m) in [(2, 1), (3, 3), (4, 3)] {
            let r = verify_fourier_eigen(n, m, &fp(n, m)).unwrap();
            assert!(r.degenerate, "N={n} m={m}");
            assert!(r.relative_residual() < 1e-8);
        }
        assert!(!verify_fourier_eigen(8, 7, &fp(8, 7)).unwrap().degenerate);
    }

    #[test]
    fn branch_difference_is_an_eigenvector() {
        for (n, order) in [(7usize, 2u32), (12, 3), (16, 4)] {
            let p = policy(n, order);
            let plus = mehta_hartley_vector(n, SusyIndex::plus(order), &p).unwrap();
            let minus = mehta_hartley_vector(n, SusyIndex::minus(order), &p).unwrap();
            let odd = fold(|x| gaussian_hermite(2 * order - 1, x), n, &p).unwrap();
            let scale = 4.0 * (order as f64).sqrt();
            let diff: Vec<f64> = plus
                .values()
                .iter()
                .zip(minus.values())
                .map(|(a, b)| a - b)
                .collect();
            for (d, o) in diff.iter().zip(odd.values()) {
                assert!((d - scale * o).abs() < 1e-10 * scale * odd.norm_sup().max(1e-300));
            }
            let d = RealSequence::new(diff).unwrap();
            let image = dht_naive(&d);
            let lambda = if order % 2 == 0 { 1.0 } else { -1.0 };
            let res = image
                .values()
                .iter()
                .zip(d.values())
                .fold(0.0f64, |m, (h, v)| m.max((h - lambda * v).abs()));
            assert!(res < 1e-8 * d.norm_sup(), "N={n}");
        }
    }

    #[test]
    fn fourier_hartley_consistency_for_even_degrees() {
        // For real F_m with Φ F_m = i^m F_m, ℋF_m = Re(ΦF_m) − Im(ΦF_m) = (−1)^{m/2} F_m for even m.
        let n = 9;
        for m in [0u32, 2, 4] {
            let p = TruncationPolicy::for_fourier(n, m, 1e-16).unwrap();
            let f = mehta_fourier_vector(n, m, &p).unwrap();
            let h = dht_naive(&f);
            let phi = dft_apply(
                &f.values()
                    .iter()
                    .map(|&v| Complex64::new(v, 0.0))
                    .collect::<Vec<_>>(),
            );
            let sign = if (m / 2) % 2 == 0 { 1.0 } else { -1.0 };
            for ((hv, z), fv) in h.values().iter().zip(&phi).zip(f.values()) {
                assert!((hv - (z.re - z.im)).abs() < 1e-12 * f.norm_sup());
                assert!((hv - sign * fv).abs() < 1e-10 * f.norm_sup());
            }
        }
    }

    #[test]
    fn poisson_examples() {
        let gauss = |x: f64| (-0.5 * x * x).exp();
        let (lhs, rhs) = poisson_check(gauss, gauss, 1.0, 1.0, 0.0, 100).unwrap();
        let l_oracle: f64 = (-100i64..=100).map(|r| (-0.5 * (r * r) as f64).exp()).sum();
        let r_oracle: f64 = (2.0 * PI).sqrt()
            * (-100i64..=100)
                .map(|m| (-0.5 * (2.0 * PI * m as f64).powi(2)).exp())
                .sum::<f64>();
        assert!((lhs - l_oracle).abs() < 1e-13 && (rhs - r_oracle).abs() < 1e-13);
        assert!((lhs - rhs).abs() < 1e-12);

        let f = |x: f64| gaussian_susy_hermite(SusyIndex::plus(1), x);
        let hf = |x: f64| -gaussian_susy_hermite(SusyIndex::plus(1), x);
        let (lhs, rhs) = poisson_check(f, hf, 2.0, PI.sqrt(), 0.3, 100).unwrap();
        assert!((lhs - rhs).abs() < 1e-10);
    }

    #[test]
    fn poisson_specializes_to_folding() {
        // a = N, b = √(2π/N), x = j: N·b·(M_N f)(j) = √(2π) Σ_m (ℋf)(b m) cas(2πmj/N).
        let n = 6usize;
        let nu = SusyIndex::plus(2);
        let f = |x: f64| gaussian_susy_hermite(nu, x);
        let b = (2.0 * PI / n as f64).sqrt();
        let p = policy(n, 2);
        let folded = mehta_hartley_vector(n, nu, &p).unwrap();
        let transformed = dht_naive(&folded);
        for j in 0..n {
            let (lhs, rhs) = poisson_check(f, f, n as f64, b, j as f64, 60).unwrap();
            assert!((lhs - n as f64 * b * folded.values()[j]).abs() < 1e-10);
            // ℋf = f here, so the right side is √N·(ℋ^(N) M_N f)(j)·b·√N.
            let expected = n as f64 * b * transformed.values()[j];
            assert!((rhs - expected).abs() < 1e-9, "j={j}");
        }
    }

    #[test]
    fn poisson_rejects_bad_input() {
        let g = |x: f64| (-x * x).exp();
        assert!(poisson_check(g, g, 0.0, 1.0, 0.0, 10).is_err());
        assert_eq!(
            poisson_check(|_| f64::NAN, g, 1.0, 1.0, 0.0, 3),
            Err(Error::NonFinite("Poisson summand"))
        );
    }

    #[test]
    fn quarter_turns() {
        assert_eq!(QuarterTurn::of(5).to_complex(), Complex64::new(0.0, 1.0));
        assert_eq!(QuarterTurn::of(6).to_complex(), Complex64::new(-1.0, 0.0));
        assert_eq!(QuarterTurn::of(12), QuarterTurn::of(0));
    }
}
