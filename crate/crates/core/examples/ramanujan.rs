//! Normalised Ramanujan sums, their average size and the orthogonality relation.

use zomega::expsums::ramanujan::{log_log_slope, orthogonality_check, ramanujan_direct, ramanujan_flat_sum};
use zomega::expsums::ramanujan_closed;
use zomega::Zw;

fn main() -> zomega::Result<()> {
    let r = Zw::c(-2, -3) * Zw::c(4, 3);
    for k in [Zw::zero(), Zw::one(), Zw::c(-2, -3), r] {
        println!("ψ̂_{}({}) = {} ≈ {:.6}", r, k, ramanujan_closed(r, k)?, ramanujan_direct(r, k)?.re);
    }

    let k = Zw::c(4, 3);
    let pts: Vec<(f64, f64)> = (5..=12).map(|e| 2f64.powi(e)).map(|x| (x, ramanujan_flat_sum(x, k).unwrap())).collect();
    for (x, s) in &pts {
        println!("R = {:>5}: Σ|ψ̂_r(k)| = {:.3}", x, s);
    }
    println!("log-log slope {:.3}", log_log_slope(&pts));

    let q = Zw::c(-2, -3);
    for h in [Zw::zero(), Zw::c(1, 0), q * Zw::lambda(), q * Zw::c(-3, 0)] {
        println!("ℓ = 2, q = {}, k − η = {}: {}", q, h, orthogonality_check(2, q, h, Zw::zero())?);
    }
    Ok(())
}
