//! Cubic Kloosterman sums at both cusp pairs against 2^ω(c) N((m,n,c)) √N(c).

use zomega::expsums::kloosterman::{weil_bound, Cusp, KloostermanKernel};
use zomega::{DualElement, Zw};

fn show(cusp: Cusp, c: Zw, pairs: &[(Zw, Zw)]) -> zomega::Result<()> {
    let kernel = KloostermanKernel::new(cusp, c, 10_000_000)?;
    for &(m, n) in pairs {
        let (m, n) = (DualElement::integral(m), DualElement::integral(n));
        let k = kernel.eval(m, n)?;
        let b = weil_bound(m, n, c)?;
        println!("{:?} c = {:>8} m = {:>6} n = {:>6}  |K| = {:>9.3}  bound = {:>8.3}  ratio = {:.3}",
            cusp, c.to_string(), m.num.to_string(), n.num.to_string(), k.value().norm(), b, k.value().norm() / b);
    }
    Ok(())
}

fn main() -> zomega::Result<()> {
    let pairs = [(Zw::one(), Zw::c(2, 1)), (Zw::c(5, -3), Zw::c(1, 1)), (Zw::c(6, -7), Zw::c(-1, -6))];
    for c in [Zw::c(-2, -3), Zw::c(4, 3) * Zw::c(-2, -3), Zw::c(16, 0), Zw::c(-32, 0)] {
        show(Cusp::SigmaXi, c, &pairs)?;
    }
    // (σ, σ) moduli are divisible by 3
    for c in [Zw::c(3, 0), Zw::c(-6, -9), Zw::c(9, 0) * Zw::lambda()] {
        show(Cusp::SigmaSigma, c, &pairs)?;
    }
    Ok(())
}
