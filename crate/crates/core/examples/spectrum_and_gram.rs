//! Eigenvalue multiplicities of the finite Hartley transform and Gram
//! diagnostics of the folded eigenvector families.

use mehta_hartley::spectral::DEFAULT_THRESHOLD_FACTOR;
use mehta_hartley::{dht_spectrum, gram_rank, EigenvectorFamily, SusyIndex, TruncationPolicy};

fn main() -> mehta_hartley::Result<()> {
    println!(" N  mult(+1)  mult(-1)");
    for n in 1..=12 {
        let (p, m) = dht_spectrum(n)?;
        println!("{n:>2}  {p:>8}  {m:>8}");
    }

    println!("\n N  family         rank  min angle (deg)  max |<u_i,u_j>|");
    for n in [3usize, 5, 7, 9] {
        let indices: Vec<SusyIndex> = (0..n as i64).map(SusyIndex::new).collect();
        let policy = TruncationPolicy::for_hartley(n, n as u32 - 1, 1e-16)?;
        let family = EigenvectorFamily::hartley(n, &indices, policy)?;
        let r = gram_rank(&family, DEFAULT_THRESHOLD_FACTOR)?;
        println!(
            "{n:>2}  G_0..G_{:<6} {:>4}/{:<3} {:>13.3} {:>15.3}",
            n - 1,
            r.rank,
            r.size,
            r.min_angle_deg,
            r.max_offdiagonal()
        );

        let degrees: Vec<u32> = (0..n as u32).collect();
        let policy = TruncationPolicy::for_fourier(n, n as u32 - 1, 1e-16)?;
        let family = EigenvectorFamily::fourier(n, &degrees, policy)?;
        let r = gram_rank(&family, DEFAULT_THRESHOLD_FACTOR)?;
        println!(
            "{n:>2}  F_0..F_{:<6} {:>4}/{:<3} {:>13.3} {:>15.3}",
            n - 1,
            r.rank,
            r.size,
            r.min_angle_deg,
            r.max_offdiagonal()
        );
    }
    Ok(())
}
