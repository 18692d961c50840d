//! Supercharge Q, Hamiltonian H = Q² and the ₁F₁ solutions of Q̃u = λu on a grid.

use mehta_hartley::susy::{DEFAULT_HALF_WIDTH, DEFAULT_STEP};
use mehta_hartley::{
    eigen_residual, even_odd_split, general_solution, hamiltonian_apply, hermite_function,
    supercharge_apply, susy_wavefunction, system_residual, GridFunction, SusyIndex,
};

fn main() -> mehta_hartley::Result<()> {
    let sample = |f: &dyn Fn(f64) -> f64| {
        GridFunction::sample_with_step(DEFAULT_HALF_WIDTH, DEFAULT_STEP, f)
    };

    println!("Q psi^_nu = sign(nu) sqrt(2|nu|) psi^_nu");
    for nu in SusyIndex::symmetric_range(3) {
        let g = sample(&|x| susy_wavefunction(nu, x))?;
        let r = eigen_residual(&supercharge_apply(&g)?, &g, nu.supercharge_eigenvalue())?;
        println!(
            "  nu = {nu:>2}  lambda = {:>8.5}  relative residual {:.2e}",
            r.lambda,
            r.relative()
        );
    }

    println!("H psi_n = (n + (1 - (-1)^n)/2) psi_n");
    for n in 0..=5u32 {
        let g = sample(&|x| hermite_function(n, x))?;
        let energy = (n + n % 2) as f64;
        let r = eigen_residual(&hamiltonian_apply(&g)?, &g, energy)?;
        println!(
            "  n = {n}  E = {energy}  relative residual {:.2e}",
            r.relative()
        );
    }

    println!("even/odd system for u = general_solution(lambda)");
    for lambda in [2f64.sqrt(), -2.0, 1.3] {
        let u = sample(&|x| general_solution(lambda, 1.0, x).unwrap_or(f64::NAN))?;
        let (ue, uo) = even_odd_split(&u);
        let (r1, r2) = system_residual(&ue, &uo, lambda)?;
        println!(
            "  lambda = {lambda:>7.4}  residuals {:.2e} {:.2e} (relative to sup|u| = {:.2e})",
            r1 / u.interior_sup(),
            r2 / u.interior_sup(),
            u.interior_sup()
        );
    }
    Ok(())
}
