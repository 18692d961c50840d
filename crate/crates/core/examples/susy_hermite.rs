//! Supersymmetric Hermite polynomials, their norms and orthogonality.

use mehta_hartley::{
    susy_hermite, susy_inner_product, susy_norm_const, susy_orthogonality_integral, QuadratureGrid,
    SusyIndex,
};

fn main() -> mehta_hartley::Result<()> {
    for nu in SusyIndex::symmetric_range(2) {
        let samples: Vec<String> = [-1.0, 0.0, 0.5, 2.0]
            .iter()
            .map(|&x| format!("{:>9.3}", susy_hermite(nu, x)))
            .collect();
        println!("H_{{{nu:>2}}} at -1, 0, 0.5, 2: {}", samples.join(" "));
    }

    let grid = QuadratureGrid::gauss_hermite(40)?;
    println!("\n n  kappa_n^2          integral of H_{{+n}}^2 e^(-x^2)");
    for n in 0..=5u32 {
        let k = susy_norm_const(n)?;
        let nu = SusyIndex::plus(n);
        println!(
            "{n:>2}  {:<18.6e} {:.6e}",
            k.kappa * k.kappa,
            susy_orthogonality_integral(nu, nu, &grid)?
        );
    }

    let cross = susy_inner_product(SusyIndex::plus(2), SusyIndex::minus(2), &grid)?;
    println!("\n<psi_+2, psi_-2> = {cross:.3e}");
    let same = susy_inner_product(SusyIndex::plus(3), SusyIndex::plus(1), &grid)?;
    println!("<psi_+3, psi_+1> = {same:.3e}");
    Ok(())
}
