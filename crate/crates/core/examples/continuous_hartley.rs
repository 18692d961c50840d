//! Quadrature Hartley transform of e^{-x²/2} ℋ_ν against (−1)^{|ν|} e^{-λ²/2} ℋ_ν(λ).

use mehta_hartley::{gaussian_susy_hermite, hartley_continuous, QuadratureGrid, SusyIndex};

fn main() -> mehta_hartley::Result<()> {
    let grid = QuadratureGrid::trapezoid(14.0, 8001)?;
    let lambdas: Vec<f64> = (0..9).map(|k| -4.0 + k as f64).collect();
    println!("{:>4} {:>12} {:>12}", "nu", "eigenvalue", "max error");
    for nu in SusyIndex::symmetric_range(4) {
        let computed = hartley_continuous(|x| gaussian_susy_hermite(nu, x), &lambdas, &grid)?;
        let sign = nu.hartley_eigenvalue();
        let err = lambdas.iter().zip(&computed).fold(0.0f64, |m, (&l, c)| {
            m.max((c - sign * gaussian_susy_hermite(nu, l)).abs())
        });
        println!("{:>4} {:>12} {:>12.2e}", nu, sign, err);
    }
    Ok(())
}
