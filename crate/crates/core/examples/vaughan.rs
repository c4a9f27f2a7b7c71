//! Vaughan's identity pointwise, then the smoothed prime sum split into P₁ and dyadic P₂ cells.

use zomega::ring::elements_with_norm_in;
use zomega::sieve::{
    vaughan_decomposition_check, vaughan_decomposition_general, vaughan_terms, CoefficientSource, DyadicPartition,
    ProgressionConstraint, SmoothWeight,
};

fn main() -> zomega::Result<()> {
    for nu in elements_with_norm_in(0, 60).into_iter().filter(|x| x.is_primary()).take(8) {
        let t = vaughan_terms(nu, 10.0, 10.0)?;
        println!("ν = {:>6}: t1 − t2 + t3 = {:.6}", nu.to_string(), t.combined());
    }

    let c = ProgressionConstraint::trivial();
    let w = SmoothWeight::default();
    let x = 200.0;
    let s = x / 20_000.0;
    let rep = vaughan_decomposition_check(x, 1e5 * x / s, s, &c, &CoefficientSource::GaussProxy, &w, &DyadicPartition)?;
    println!("\nX = {}: lhs = {:.6}, P1 = {:.6}, residual {:.1e}", x, rep.lhs, rep.p1, rep.residual);

    let rep = vaughan_decomposition_general(150.0, 10.0, 30.0, &c, &CoefficientSource::constant(1.0), &w, &DyadicPartition)?;
    println!("R = 10, S = 30: {} P2 cells, third sum {:.4}, residual {:.1e}", rep.p2_cells.len(), rep.third, rep.residual);
    for cell in rep.p2_cells.iter().take(6) {
        println!("  M = 2^({}/2) N = 2^({}/2): {:.4}", cell.m_index, cell.n_index, cell.value);
    }
    Ok(())
}
