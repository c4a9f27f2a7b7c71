//! Division with remainder, gcds, primary associates and factorization in Z[ω].

use zomega::factor::{factor, split_prime};
use zomega::{gcd, inverse_mod, Zw};

fn main() -> zomega::Result<()> {
    let x = Zw::c(17, -4);
    let y = Zw::c(3, 5);
    let (q, r) = x.divmod(&y)?;
    println!("{} = ({})({}) + {}   N(r) = {} < N(y) = {}", x, q, y, r, r.norm(), y.norm());

    let g = gcd(&(x * Zw::c(-2, -3)), &(y * Zw::c(-2, -3)))?;
    println!("gcd = {}", g);

    // every λ-free element has exactly one primary associate
    let d = Zw::c(2, 3).primary_decompose()?;
    println!("2+3ω = unit^{} · λ^{} · {}", d.unit.exponent(), d.lambda_exp, d.primary_part);

    for p in [7u64, 13, 1_000_003] {
        let w = split_prime(p)?;
        println!("{} = N({})", p, w);
    }

    let n = Zw::c(-2, -3).pow(2) * Zw::lambda().pow(3) * Zw::c(4, 3);
    let f = factor(&n)?;
    let parts: Vec<String> = f.primes.iter().map(|(w, e)| format!("({})^{}", w, e)).collect();
    println!("{} = unit^{} · λ^{} · {}", n, f.unit.exponent(), f.lambda_exp, parts.join(" · "));

    if let Some(inv) = inverse_mod(&Zw::c(2, 1), &Zw::c(-2, -3)) {
        println!("(2+ω)⁻¹ mod −2−3ω = {}", inv);
    }
    Ok(())
}
