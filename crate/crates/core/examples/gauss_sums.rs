//! Gauss sums: direct and factored evaluation, |g(c)| and the cube relation.

use zomega::expsums::gauss::{gauss_cube_check, gauss_local_table, gauss_prime};
use zomega::expsums::{gauss_direct, gauss_fast, normalized_gauss};
use zomega::factor::primes_up_to_norm;
use zomega::{DualElement, Zw};

fn main() -> zomega::Result<()> {
    let one = DualElement::integral(Zw::one());
    for c in [Zw::c(-2, -3), Zw::c(7, 0), Zw::c(-2, -3) * Zw::c(4, 3), Zw::c(-2, -3).pow(2)] {
        let d = gauss_direct(one, c)?;
        let f = gauss_fast(one, c)?;
        println!(
            "c = {:>10}  g = {:.6}  |g|/√N = {:.6}  fast - direct = {:.1e}",
            c.to_string(),
            f.value(),
            f.value().norm() / (c.norm() as f64).sqrt(),
            (f.value() - d.value()).norm()
        );
    }

    println!("\ng(ϖ)³ + ϖ²ϖ̄ for the first primes:");
    for w in primes_up_to_norm(100.0) {
        println!("  {:>8} N = {:>3}  residual {:.1e}  g̃ = {:.4}", w.to_string(), w.norm(), gauss_cube_check(w)?, normalized_gauss(w)?);
    }

    let w = Zw::c(-2, -3);
    println!("\ng(ϖ^k, ϖ^ℓ) at ϖ = {}, g(ϖ) = {:.4}", w, gauss_prime(w)?);
    for l in 0..=4 {
        let row: Vec<String> = (0..=4).map(|k| format!("{:>18.3}", gauss_local_table(w, Some(k), l).unwrap())).collect();
        println!("  ℓ = {}: {}", l, row.join(""));
    }
    Ok(())
}
