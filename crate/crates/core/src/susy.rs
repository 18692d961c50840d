//! Grid realizations of the reflection `R`, the supercharge
//! `Q = (∂_x R + x)/√2`, the Hamiltonian `H = Q² = −½∂² + ½x² − ½R`, and the
//! gauge-transformed supercharge `Q̃ = ψ_0^{−1} Q ψ_0`, plus residuals for the
//! first-order system satisfied by the even and odd parts of `Q̃`'s
//! eigenfunctions.
//!
//! Derivatives are fourth-order finite differences. Residual norms are taken
//! over the interior `|x| ≤ 0.9 L`, away from the one-sided boundary stencils.

use crate::error::{Error, Result};
use crate::hermite::kummer_1f1;
use std::f64::consts::FRAC_1_SQRT_2;

/// Fraction of the half-width used for residual norms.
pub const INTERIOR_FRACTION: f64 = 0.9;

/// Default half-width and step for operator checks.
pub const DEFAULT_HALF_WIDTH: f64 = 10.0;
pub const DEFAULT_STEP: f64 = 0.01;

/// Samples on the symmetric grid `x_i = −L + i·2L/(M−1)`, `M` odd.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    half_width: f64,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn from_values(half_width: f64, values: Vec<f64>) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidGrid("half-width must be positive and finite"));
        }
        if values.len().is_multiple_of(2) {
            return Err(Error::GridNotOdd(values.len()));
        }
        if values.len() < 3 {
            return Err(Error::GridTooSmall {
                required: 3,
                found: values.len(),
            });
        }
        Ok(Self { half_width, values })
    }

    pub fn sample(half_width: f64, points: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let probe = Self::from_values(half_width, vec![0.0; points])?;
        let values = (0..points).map(|i| f(probe.x(i))).collect();
        Ok(Self { values, ..probe })
    }

    /// Grid with half-width `half_width` and step as close to `step` as an
    /// odd point count allows.
    pub fn sample_with_step(half_width: f64, step: f64, f: impl Fn(f64) -> f64) -> Result<Self> {
        let half_points = (half_width / step).round().max(1.0) as usize;
        Self::sample(half_width, 2 * half_points + 1, f)
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
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

    pub fn step(&self) -> f64 {
        self.half_width / self.center() as f64
    }

    fn center(&self) -> usize {
        (self.values.len() - 1) / 2
    }

    /// Grid abscissa; `x(M−1−i) == −x(i)` exactly.
    pub fn x(&self, i: usize) -> f64 {
        let c = self.center();
        let offset = i as f64 - c as f64;
        offset * self.half_width / c as f64
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.x(i)).collect()
    }

    fn with_values(&self, values: Vec<f64>) -> Self {
        Self {
            half_width: self.half_width,
            values,
        }
    }

    fn same_grid(&self, other: &GridFunction) -> bool {
        self.half_width == other.half_width && self.values.len() == other.values.len()
    }

    /// Indices with `|x| ≤ 0.9 L`.
    pub fn interior(&self) -> impl Iterator<Item = usize> + '_ {
        let limit = INTERIOR_FRACTION * self.half_width;
        (0..self.len()).filter(move |&i| self.x(i).abs() <= limit)
    }

    /// Sup-norm over the interior.
    pub fn interior_sup(&self) -> f64 {
        self.interior()
            .fold(0.0, |m, i| m.max(self.values[i].abs()))
    }

    pub fn map(&self, f: impl Fn(f64, f64) -> f64) -> Self {
        let values = (0..self.len())
            .map(|i| f(self.x(i), self.values[i]))
            .collect();
        self.with_values(values)
    }

    pub fn zip_with(&self, other: &GridFunction, f: impl Fn(f64, f64, f64) -> f64) -> Result<Self> {
        if !self.same_grid(other) {
            return Err(Error::GridMismatch);
        }
        let values = (0..self.len())
            .map(|i| f(self.x(i), self.values[i], other.values[i]))
            .collect();
        Ok(self.with_values(values))
    }

    fn require(&self, points: usize) -> Result<()> {
        if self.len() < points {
            return Err(Error::GridTooSmall {
                required: points,
                found: self.len(),
            });
        }
        Ok(())
    }
}

/// Outcome of testing `Op(g) = λg` on a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorResidual {
    pub lambda: f64,
    pub residual_sup: f64,
    pub norm_sup: f64,
}

impl OperatorResidual {
    pub fn relative(&self) -> f64 {
        self.residual_sup / self.norm_sup.max(f64::EPSILON)
    }
}

/// Interior sup of `applied − λ·g` and of `g`.
pub fn eigen_residual(
    applied: &GridFunction,
    g: &GridFunction,
    lambda: f64,
) -> Result<OperatorResidual> {
    let diff = applied.zip_with(g, |_, a, v| a - lambda * v)?;
    Ok(OperatorResidual {
        lambda,
        residual_sup: diff.interior_sup(),
        norm_sup: g.interior_sup(),
    })
}

/// `(Rg)(x) = g(−x)`.
pub fn reflect(g: &GridFunction) -> GridFunction {
    let mut values = g.values.clone();
    values.reverse();
    g.with_values(values)
}

/// Fourth-order first derivative.
pub fn derivative(g: &GridFunction) -> Result<GridFunction> {
    g.require(5)?;
    let f = &g.values;
    let m = f.len();
    let inv = 1.0 / (12.0 * g.step());
    let mut out = vec![0.0; m];
    for i in 2..m - 2 {
        out[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * inv;
    }
    out[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * inv;
    out[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * inv;
    let l = m - 1;
    out[l] = -(-25.0 * f[l] + 48.0 * f[l - 1] - 36.0 * f[l - 2] + 16.0 * f[l - 3] - 3.0 * f[l - 4])
        * inv;
    out[l - 1] =
        -(-3.0 * f[l] - 10.0 * f[l - 1] + 18.0 * f[l - 2] - 6.0 * f[l - 3] + f[l - 4]) * inv;
    Ok(g.with_values(out))
}

/// Fourth-order second derivative in the interior (third-order at the two
/// boundary bands).
pub fn second_derivative(g: &GridFunction) -> Result<GridFunction> {
    g.require(5)?;
    let f = &g.values;
    let m = f.len();
    let h = g.step();
    let inv = 1.0 / (12.0 * h * h);
    let mut out = vec![0.0; m];
    for i in 2..m - 2 {
        out[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * inv;
    }
    out[0] = (35.0 * f[0] - 104.0 * f[1] + 114.0 * f[2] - 56.0 * f[3] + 11.0 * f[4]) * inv;
    out[1] = (11.0 * f[0] - 20.0 * f[1] + 6.0 * f[2] + 4.0 * f[3] - f[4]) * inv;
    let l = m - 1;
    out[l] = (35.0 * f[l] - 104.0 * f[l - 1] + 114.0 * f[l - 2] - 56.0 * f[l - 3]
        + 11.0 * f[l - 4])
        * inv;
    out[l - 1] = (11.0 * f[l] - 20.0 * f[l - 1] + 6.0 * f[l - 2] + 4.0 * f[l - 3] - f[l - 4]) * inv;
    Ok(g.with_values(out))
}

/// `Qg = (1/√2)(d/dx[g(−x)] + x g(x))`.
pub fn supercharge_apply(g: &GridFunction) -> Result<GridFunction> {
    let d_reflected = derivative(&reflect(g))?;
    d_reflected.zip_with(g, |x, dr, v| FRAC_1_SQRT_2 * (dr + x * v))
}

/// `Hg = −½g″ + ½x²g − ½g(−x)`.
pub fn hamiltonian_apply(g: &GridFunction) -> Result<GridFunction> {
    let d2 = second_derivative(g)?;
    let r = reflect(g);
    let kinetic_potential = d2.zip_with(g, |x, d2v, v| -0.5 * d2v + 0.5 * x * x * v)?;
    kinetic_potential.zip_with(&r, |_, kp, rv| kp - 0.5 * rv)
}

/// `Q̃g = (1/√2)(d/dx[g(−x)] + x(g(x) − g(−x)))`.
pub fn gauge_supercharge_apply(g: &GridFunction) -> Result<GridFunction> {
    let r = reflect(g);
    let d_reflected = derivative(&r)?;
    let odd_twice = g.zip_with(&r, |_, v, rv| v - rv)?;
    d_reflected.zip_with(&odd_twice, |x, dr, d| FRAC_1_SQRT_2 * (dr + x * d))
}

/// `(g_e, g_o)` with `g_e(x) = ½(g(x) + g(−x))`, `g_o = ½(g(x) − g(−x))`.
pub fn even_odd_split(g: &GridFunction) -> (GridFunction, GridFunction) {
    let r = reflect(g);
    let even = g
        .values
        .iter()
        .zip(&r.values)
        .map(|(a, b)| 0.5 * (a + b))
        .collect();
    let odd = g
        .values
        .iter()
        .zip(&r.values)
        .map(|(a, b)| 0.5 * (a - b))
        .collect();
    (g.with_values(even), g.with_values(odd))
}

/// Interior sup-norms of
///
/// ```text
/// u_e′ − λ√2 u_o          and          u_o′ − 2x u_o + λ√2 u_e
/// ```
pub fn system_residual(u_e: &GridFunction, u_o: &GridFunction, lambda: f64) -> Result<(f64, f64)> {
    if !u_e.same_grid(u_o) {
        return Err(Error::GridMismatch);
    }
    let c = lambda * std::f64::consts::SQRT_2;
    let de = derivative(u_e)?;
    let dodd = derivative(u_o)?;
    let first = de.zip_with(u_o, |_, d, o| d - c * o)?;
    let lhs = dodd.zip_with(u_o, |x, d, o| d - 2.0 * x * o)?;
    let second = lhs.zip_with(u_e, |_, l, e| l + c * e)?;
    Ok((first.interior_sup(), second.interior_sup()))
}

/// Interior sup of `u_e″ − 2x u_e′ + 2λ² u_e`.
pub fn even_equation_residual(u_e: &GridFunction, lambda: f64) -> Result<f64> {
    let d1 = derivative(u_e)?;
    let d2 = second_derivative(u_e)?;
    let partial = d2.zip_with(&d1, |x, a, b| a - 2.0 * x * b)?;
    let res = partial.zip_with(u_e, |_, p, v| p + 2.0 * lambda * lambda * v)?;
    Ok(res.interior_sup())
}

/// General solution of `Q̃u = λu`:
///
/// ```text
/// u(x) = A ₁F₁(−λ²/2; 1/2; x²) − A√2 λ x ₁F₁(1 − λ²/2; 3/2; x²)
/// ```
///
/// When `λ²/2` is within `1e−12` (relative) of an integer `n`, the parameters
/// are taken as exactly `−n` and `1 − n`, so `λ = √(2n)` in floating point
/// still produces the terminating polynomial.
pub fn general_solution(lambda: f64, amplitude: f64, x: f64) -> Result<f64> {
    let half_sq = 0.5 * lambda * lambda;
    let rounded = half_sq.round();
    let half_sq = if (half_sq - rounded).abs() <= 1e-12 * rounded.max(1.0) {
        rounded
    } else {
        half_sq
    };
    let z = x * x;
    let even = kummer_1f1(-half_sq, 0.5, z)?;
    let odd = if lambda == 0.0 {
        0.0
    } else {
        std::f64::consts::SQRT_2 * lambda * x * kummer_1f1(1.0 - half_sq, 1.5, z)?
    };
    Ok(amplitude * (even - odd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::{
        hermite_eval, hermite_function, susy_hermite, susy_wavefunction, SusyIndex,
    };

    fn grid(f: impl Fn(f64) -> f64) -> GridFunction {
        GridFunction::sample_with_step(DEFAULT_HALF_WIDTH, DEFAULT_STEP, f).unwrap()
    }

    #[test]
    fn grid_is_symmetric() {
        let g = GridFunction::sample(1.0, 101, |x| x).unwrap();
        for i in 0..101 {
            assert_eq!(g.x(100 - i), -g.x(i));
        }
        assert_eq!(g.x(50), 0.0);
        assert_eq!(g.x(0), -1.0);
        assert!(matches!(
            GridFunction::sample(1.0, 100, |x| x),
            Err(Error::GridNotOdd(100))
        ));
        let g = grid(|x| x);
        assert_eq!(g.len(), 2001);
        assert!((g.step() - 0.01).abs() < 1e-15);
    }

    #[test]
    fn reflection() {
        let even = GridFunction::sample(2.0, 41, |x| x * x).unwrap();
        assert_eq!(reflect(&even), even);
        let odd = GridFunction::sample(2.0, 41, |x| x).unwrap();
        assert_eq!(reflect(&odd), odd.map(|_, v| -v));
        let e = GridFunction::sample(1.0, 101, f64::exp).unwrap();
        let r = reflect(&e);
        assert_eq!(r.values()[0], e.values()[100]);
        assert_eq!(reflect(&r), e);
    }

    #[test]
    fn derivative_exactness_and_accuracy() {
        let g = GridFunction::sample(3.0, 61, |x| x * x).unwrap();
        let d = derivative(&g).unwrap();
        for i in 0..g.len() {
            assert!((d.values()[i] - 2.0 * g.x(i)).abs() < 1e-10);
        }
        let s = GridFunction::sample(std::f64::consts::PI, 2001, f64::sin).unwrap();
        let ds = derivative(&s).unwrap();
        for i in s.interior() {
            assert!((ds.values()[i] - s.x(i).cos()).abs() < 1e-10);
        }
        let c = GridFunction::sample(1.0, 21, |_| 3.0).unwrap();
        assert!(derivative(&c)
            .unwrap()
            .values()
            .iter()
            .all(|v| v.abs() < 1e-13));
        let tiny = GridFunction::from_values(1.0, vec![0.0; 3]).unwrap();
        assert!(matches!(
            derivative(&tiny),
            Err(Error::GridTooSmall {
                required: 5,
                found: 3
            })
        ));
    }

    #[test]
    fn second_derivative_exact_on_quartics() {
        let g = GridFunction::sample(2.0, 41, |x| x.powi(4) - x).unwrap();
        let d2 = second_derivative(&g).unwrap();
        for i in 0..g.len() {
            let x = g.x(i);
            assert!((d2.values()[i] - 12.0 * x * x).abs() < 1e-8, "i={i}");
        }
    }

    #[test]
    fn derivative_anticommutes_with_reflection() {
        let g = grid(|x| (0.3 * x).sin() + x * (-0.1 * x * x).exp());
        let a = derivative(&reflect(&g)).unwrap();
        let b = reflect(&derivative(&g).unwrap()).map(|_, v| -v);
        let diff = a.zip_with(&b, |_, p, q| p - q).unwrap();
        assert!(diff.values().iter().all(|v| v.abs() < 1e-10));
    }

    #[test]
    fn supercharge_examples() {
        let g = grid(|x| hermite_function(0, x));
        let q = supercharge_apply(&g).unwrap();
        assert!(q.interior_sup() < 1e-6);
        for nu in [SusyIndex::plus(1), SusyIndex::minus(1)] {
            let g = grid(|x| susy_wavefunction(nu, x));
            let r = eigen_residual(
                &supercharge_apply(&g).unwrap(),
                &g,
                nu.supercharge_eigenvalue(),
            )
            .unwrap();
            assert!(r.relative() < 1e-5, "nu={nu}: {}", r.relative());
        }
    }

    #[test]
    fn hamiltonian_examples() {
        for (n, e) in [(0, 0.0), (1, 2.0), (2, 2.0)] {
            let g = grid(|x| hermite_function(n, x));
            let r = eigen_residual(&hamiltonian_apply(&g).unwrap(), &g, e).unwrap();
            assert!(r.relative() < 1e-5, "n={n}");
        }
    }

    #[test]
    fn gauge_examples() {
        let one = grid(|_| 1.0);
        assert!(gauge_supercharge_apply(&one)
            .unwrap()
            .values()
            .iter()
            .all(|v| v.abs() < 1e-12));
        for nu in [SusyIndex::plus(1), SusyIndex::minus(1)] {
            let g =
                GridFunction::sample_with_step(3.0, DEFAULT_STEP, |x| susy_hermite(nu, x)).unwrap();
            let r = eigen_residual(
                &gauge_supercharge_apply(&g).unwrap(),
                &g,
                nu.supercharge_eigenvalue(),
            )
            .unwrap();
            assert!(r.relative() < 1e-9, "nu={nu}");
        }
    }

    #[test]
    fn split_examples() {
        let g = GridFunction::sample(2.0, 41, |x| x * x).unwrap();
        let (e, o) = even_odd_split(&g);
        assert_eq!(e, g);
        assert!(o.values().iter().all(|&v| v == 0.0));
        let g = GridFunction::sample(2.0, 41, |x| x.powi(3) + 1.0).unwrap();
        let (e, o) = even_odd_split(&g);
        assert!(e.values().iter().all(|v| (v - 1.0).abs() < 1e-14));
        for i in 0..g.len() {
            assert!((o.values()[i] - g.x(i).powi(3)).abs() < 1e-14);
        }
        let g = GridFunction::sample(2.0, 41, |x| susy_hermite(SusyIndex::plus(1), x)).unwrap();
        let (e, o) = even_odd_split(&g);
        for i in 0..g.len() {
            let x = g.x(i);
            assert!((e.values()[i] - hermite_eval(2, x)).abs() < 1e-13);
            assert!((o.values()[i] - 2.0 * hermite_eval(1, x)).abs() < 1e-13);
        }
    }

    #[test]
    fn system_residual_examples() {
        let e = grid(|_| 1.0);
        let o = grid(|_| 0.0);
        assert_eq!(system_residual(&e, &o, 0.0).unwrap(), (0.0, 0.0));

        let lambda = 2f64.sqrt();
        let u = grid(|x| general_solution(lambda, 1.0, x).unwrap());
        let (ue, uo) = even_odd_split(&u);
        let (r1, r2) = system_residual(&ue, &uo, lambda).unwrap();
        assert!(r1 < 1e-6 && r2 < 1e-6, "{r1} {r2}");

        let (r1, r2) = system_residual(&ue, &uo, lambda + 1.0).unwrap();
        let norm = ue.interior_sup().max(uo.interior_sup());
        assert!(r1.max(r2) > 0.1 * norm);

        let other = GridFunction::sample(1.0, 11, |_| 0.0).unwrap();
        assert_eq!(
            system_residual(&ue, &other, lambda),
            Err(Error::GridMismatch)
        );
    }

    #[test]
    fn general_solution_examples() {
        for x in [-2.0, 0.0, 0.7] {
            assert!((general_solution(0.0, 1.0, x).unwrap() - 1.0).abs() < 1e-15);
        }
        let l = 2f64.sqrt();
        assert!((general_solution(l, 1.0, 1.0).unwrap() + 3.0).abs() < 1e-14);
        assert!((general_solution(-l, 1.0, 1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!(
            (general_solution(l, 1.0, 1.0).unwrap() + susy_hermite(SusyIndex::plus(1), 1.0) / 2.0)
                .abs()
                < 1e-14
        );
    }

    #[test]
    fn general_solution_non_polynomial_branch() {
        // λ² = 1 gives ₁F₁(−1/2; 1/2; x²) − √2 x ₁F₁(1/2; 3/2; x²), still an eigenfunction of Q̃.
        let g = GridFunction::sample_with_step(2.0, DEFAULT_STEP, |x| {
            general_solution(1.0, 1.0, x).unwrap()
        })
        .unwrap();
        let r = eigen_residual(&gauge_supercharge_apply(&g).unwrap(), &g, 1.0).unwrap();
        assert!(r.relative() < 1e-6, "{}", r.relative());
    }
}
