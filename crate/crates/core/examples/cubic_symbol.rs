//! Cubic residue symbols, reciprocity and the supplements at ω and λ.

use zomega::symbol::supplement_exponents;
use zomega::{cubic_symbol, Zw};

fn main() -> zomega::Result<()> {
    let a = Zw::c(-2, -3);
    let b = Zw::c(4, 3);
    println!("({}/{})₃ = {}", a, b, cubic_symbol(&a, &b)?);
    println!("({}/{})₃ = {}", b, a, cubic_symbol(&b, &a)?);

    for d in [Zw::c(-2, 0), Zw::c(-2, -3), Zw::c(1, 3), Zw::c(-5, -3)] {
        let e = supplement_exponents(&d)?;
        println!(
            "d = {:>8}: (ω/d) = {:<7} (λ/d) = {:<7} α₂ = {} α₃ = {}",
            d.to_string(),
            cubic_symbol(&Zw::omega(), &d)?.name(),
            cubic_symbol(&Zw::lambda(), &d)?.name(),
            e.alpha2,
            e.alpha3
        );
    }

    // the symbol only sees a mod b
    let m = Zw::c(7, 9);
    let x = Zw::c(5, -1);
    println!("({}/{}) = {}, shifted by 3m: {}", x, m, cubic_symbol(&x, &m)?, cubic_symbol(&(x + m * Zw::c(3, 0)), &m)?);
    Ok(())
}
