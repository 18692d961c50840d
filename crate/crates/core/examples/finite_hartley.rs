//! Finite Hartley transform: naive and fast paths, involution and energy.

use mehta_hartley::{dht_apply, dht_matrix, Method, RealSequence, TransformPlan};

fn main() -> mehta_hartley::Result<()> {
    println!("H^(4) =");
    let h = dht_matrix(4);
    for r in 0..4 {
        println!("  {:?}", h.row(r));
    }

    let n = 1024;
    let f = RealSequence::new((0..n).map(|k| (0.01 * (k * k) as f64).sin()).collect())?;
    let naive = TransformPlan::new(n, Method::Naive)?;
    let fast = TransformPlan::new(n, Method::Fast)?;
    let a = dht_apply(&naive, &f)?;
    let b = dht_apply(&fast, &f)?;
    let diff = a
        .values()
        .iter()
        .zip(b.values())
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    println!("N = {n}: max |naive - fast| = {diff:.2e}");

    let back = dht_apply(&fast, &b)?;
    let err = back
        .values()
        .iter()
        .zip(f.values())
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    println!("max |H(H f) - f| = {err:.2e}");
    println!("|f|_2 = {:.15}, |Hf|_2 = {:.15}", f.norm2(), b.norm2());
    Ok(())
}
