//! Folded Hermite eigenvectors of the finite Hartley and Fourier transforms.

use mehta_hartley::{
    mehta_hartley_vector, verify_fourier_eigen, verify_hartley_eigen, SusyIndex, TruncationPolicy,
};

fn main() -> mehta_hartley::Result<()> {
    let n = 16;
    let policy = TruncationPolicy::for_hartley(n, 4, 1e-16)?;
    println!("N = {n}, summation cutoff K = {}", policy.k_max());

    let g = mehta_hartley_vector(n, SusyIndex::plus(1), &policy)?;
    println!("G_+1 = {:.4?}", g.values());

    println!("\n  nu  lambda   relative residual");
    for nu in SusyIndex::symmetric_range(4) {
        let r = verify_hartley_eigen(n, nu, &policy)?;
        println!(
            "{:>4}  {:>6}   {:.2e}",
            nu,
            r.eigenvalue.re,
            r.relative_residual()
        );
    }

    println!("\n   m  lambda       relative residual");
    for m in 0..8u32 {
        let p = TruncationPolicy::for_fourier(n, m, 1e-16)?;
        let r = verify_fourier_eigen(n, m, &p)?;
        println!(
            "{:>4}  {:>10}   {:.2e}",
            m,
            format!("{}", r.eigenvalue),
            r.relative_residual()
        );
    }
    Ok(())
}
