//! Quadrature rules on the real line: composite trapezoid on `[-L, L]` and
//! Gauss–Hermite for integrals against `e^{-x²}`.

use crate::error::{Error, Result};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureRule {
    Trapezoid,
    GaussHermite,
}

/// Integration domain and rule. `half_width` is ignored by Gauss–Hermite.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    half_width: f64,
    points: usize,
    rule: QuadratureRule,
    nodes: Vec<f64>,
    // For trapezoid: plain weights. For Gauss–Hermite: weights w.r.t. e^{-x²}.
    weights: Vec<f64>,
}

impl QuadratureGrid {
    pub fn trapezoid(half_width: f64, points: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidGrid("half-width must be positive and finite"));
        }
        if points < 2 {
            return Err(Error::InvalidGrid("trapezoid rule needs at least 2 points"));
        }
        let h = 2.0 * half_width / (points - 1) as f64;
        let nodes = (0..points).map(|i| -half_width + i as f64 * h).collect();
        let mut weights = vec![h; points];
        weights[0] = 0.5 * h;
        weights[points - 1] = 0.5 * h;
        Ok(Self {
            half_width,
            points,
            rule: QuadratureRule::Trapezoid,
            nodes,
            weights,
        })
    }

    pub fn gauss_hermite(points: usize) -> Result<Self> {
        if points == 0 {
            return Err(Error::InvalidGrid(
                "Gauss-Hermite rule needs at least 1 node",
            ));
        }
        let (nodes, weights) = gauss_hermite_rule(points)?;
        let half_width = nodes.last().copied().unwrap_or(0.0).abs();
        Ok(Self {
            half_width,
            points,
            rule: QuadratureRule::GaussHermite,
            nodes,
            weights,
        })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn rule(&self) -> QuadratureRule {
        self.rule
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Step of the trapezoid rule; `None` for Gauss–Hermite.
    pub fn step(&self) -> Option<f64> {
        match self.rule {
            QuadratureRule::Trapezoid => Some(2.0 * self.half_width / (self.points - 1) as f64),
            QuadratureRule::GaussHermite => None,
        }
    }

    /// Weights for `∫ f(x) dx ≈ Σ wᵢ f(xᵢ)`.
    pub fn plain_weights(&self) -> Vec<f64> {
        match self.rule {
            QuadratureRule::Trapezoid => self.weights.clone(),
            QuadratureRule::GaussHermite => self
                .nodes
                .iter()
                .zip(&self.weights)
                .map(|(x, w)| (w.ln() + x * x).exp())
                .collect(),
        }
    }

    /// `∫ f(x) dx`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(self.plain_weights())
            .map(|(&x, w)| w * f(x))
            .sum()
    }

    /// `∫ g(x) e^{-x²} dx`.
    pub fn integrate_weighted(&self, g: impl Fn(f64) -> f64) -> f64 {
        match self.rule {
            QuadratureRule::GaussHermite => self
                .nodes
                .iter()
                .zip(&self.weights)
                .map(|(&x, w)| w * g(x))
                .sum(),
            QuadratureRule::Trapezoid => self
                .nodes
                .iter()
                .zip(&self.weights)
                .map(|(&x, w)| w * g(x) * (-x * x).exp())
                .sum(),
        }
    }
}

/// Nodes (ascending) and weights of the `n`-point Gauss–Hermite rule,
/// by Newton iteration on the orthonormal Hermite recurrence.
fn gauss_hermite_rule(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    const MAX_ITER: usize = 100;
    let pim4 = PI.powf(-0.25);
    let nf = n as f64;
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let mut z = 0.0f64;

    for i in 0..n.div_ceil(2) {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-0.16667),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut pp = 0.0;
        let mut converged = false;
        for _ in 0..MAX_ITER {
            let (p1, p2) = orthonormal_hermite_pair(n, z, pim4);
            pp = (2.0 * nf).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 * z.abs().max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::SeriesNotConverged(MAX_ITER));
        }
        // Refresh the derivative at the converged node.
        let (_, p2) = orthonormal_hermite_pair(n, z, pim4);
        pp = if p2 != 0.0 {
            (2.0 * nf).sqrt() * p2
        } else {
            pp
        };
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    // Stored descending; flip to ascending.
    x.reverse();
    w.reverse();
    Ok((x, w))
}

/// Returns (p_n(z), p_{n-1}(z)) of the orthonormal Hermite recurrence
/// scaled so the weights come out against e^{-x²}.
fn orthonormal_hermite_pair(n: usize, z: f64, p0: f64) -> (f64, f64) {
    let mut p1 = p0;
    let mut p2 = 0.0;
    for j in 0..n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
    }
    (p1, p2)
}
