//! Both sides of the Hartley-Poisson summation formula for Hartley eigenfunctions.

use mehta_hartley::{gaussian_susy_hermite, poisson_check, SusyIndex};

fn main() -> mehta_hartley::Result<()> {
    println!(
        "{:>4} {:>5} {:>5} {:>6} {:>22} {:>10}",
        "nu", "a", "b", "x", "lhs", "|lhs-rhs|"
    );
    for nu in [SusyIndex::ZERO, SusyIndex::plus(1), SusyIndex::minus(2)] {
        let sign = nu.hartley_eigenvalue();
        for (a, b, x) in [(1.0, 1.0, 0.0), (0.5, 2.0, 0.3), (2.0, 0.5, -1.7)] {
            let (lhs, rhs) = poisson_check(
                |t| gaussian_susy_hermite(nu, t),
                |t| sign * gaussian_susy_hermite(nu, t),
                a,
                b,
                x,
                400,
            )?;
            println!(
                "{:>4} {:>5} {:>5} {:>6} {:>22.15} {:>10.2e}",
                nu,
                a,
                b,
                x,
                lhs,
                (lhs - rhs).abs()
            );
        }
    }
    Ok(())
}
