//! Type-I and Type-II sums over a progression with Gauss-sum coefficients.

use num_complex::Complex64;
use zomega::ring::elements_with_norm_in;
use zomega::sieve::{type1_pointwise, type2_bilinear, CoefficientSource, ProgressionConstraint, SmoothWeight};
use zomega::Zw;

fn main() -> zomega::Result<()> {
    let c = ProgressionConstraint::new(Zw::c(6, 0), Zw::c(1, 3))?;
    let src = CoefficientSource::GaussProxy;
    let w = SmoothWeight::default();
    let x = 60.0;
    for a in [Zw::one(), Zw::c(-2, -3), Zw::c(4, 3), Zw::c(-5, -3)] {
        println!("T({}) = {:.5}", a, type1_pointwise(a, x, &c, &src, &w)?);
    }
    let shell = |lo: i64| -> Vec<(Zw, Complex64)> {
        elements_with_norm_in(lo, 2 * lo).into_iter().filter(|z| z.is_primary()).map(|z| (z, Complex64::new(1.0, 0.0))).collect()
    };
    let alpha: Vec<_> = shell(8).into_iter().filter(|(a, _)| zomega::gcd(a, &c.modulus()).map(|g| g.is_one()).unwrap_or(false)).collect();
    println!("type II with N(a) ∼ 8, N(b) ∼ 100: {:.5}", type2_bilinear(&alpha, &shell(100), x, &c, &src, &w)?);
    Ok(())
}
