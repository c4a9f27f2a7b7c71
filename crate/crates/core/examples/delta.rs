//! Detecting q | a with additive characters, all at once and layer by primitive layer.

use zomega::largesieve::{delta_additive, delta_primitive_layer};
use zomega::Zw;

fn main() -> zomega::Result<()> {
    let q = Zw::c(-2, -3) * Zw::c(4, 3);
    for a in [Zw::zero(), Zw::one(), Zw::c(-2, -3), q * Zw::c(5, 1)] {
        let layers = delta_primitive_layer(a, q.norm() as f64)?;
        let total: i64 = layers.iter().filter(|(c, _)| c.divides(&q)).map(|(_, v)| v).sum();
        println!("a = {:>9}: δ = {:.3}, Σ_c|q layers = {} (N(q) = {})", a.to_string(), delta_additive(a, q)?, total, q.norm());
    }
    Ok(())
}
