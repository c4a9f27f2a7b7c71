//! The dual-side transforms ψ♯_ζ and ψ⋆ of a periodic function ψ, and the
//! identities that turn them into cubic Kloosterman sums.

use num_complex::Complex64;

use super::csum::{e_frac, ComplexSum};
use super::kloosterman::{Cusp, KloostermanKernel};
use crate::error::{domain, Error, Result};
use crate::residue::ResidueSystem;
use crate::ring::{inverse_mod, DualElement, Unit, Zw};
use crate::symbol::symbol_unchecked;

/// Term cap for the direct evaluations below.
pub const DEFAULT_PSI_CAP: i64 = 5_000_000;

/// ψ_{λ^m r}(u)_η = 1_{λ^m r}(u) ě(−ηu/(λ^m r)) for integral η.
pub fn modqeta(m: u32, r: Zw, eta: Zw) -> impl Fn(Zw) -> Complex64 + Sync {
    let n = Zw::lambda().pow(m) * r;
    move |u: Zw| {
        if inverse_mod(&u, &n).is_none() {
            Complex64::new(0.0, 0.0)
        } else {
            e_frac(-(eta * u), n)
        }
    }
}

/// ψ♯_ζ(u) = N(λ^m r)⁻¹ Σ ψ(−ζ⁻¹d) (ζλ^{m−1}r/d)₃ ě(au/(ζλ^m r)), the sum over
/// a, d mod λ^m r with a, d ≡ 1 (mod 3) and ad ≡ 1 (mod λ^m r).
pub fn psi_sharp<F>(psi: F, m: u32, r: Zw, zeta: Unit, u: Zw) -> Result<Complex64>
where
    F: Fn(Zw) -> Complex64,
{
    if m < 2 {
        return domain("ψ♯ needs m ≥ 2 so that a ≡ 1 (mod 3) is defined mod λ^m r");
    }
    if !r.is_primary() {
        return domain(format!("{} is not ≡ 1 (mod 3)", r));
    }
    let n = Zw::lambda().pow(m) * r;
    if n.norm() > DEFAULT_PSI_CAP {
        return Err(Error::Resource(format!("N(λ^m r) = {} exceeds {}", n.norm(), DEFAULT_PSI_CAP)));
    }
    let rs = ResidueSystem::new(n)?;
    let z = zeta.value::<i64>();
    let zinv = zeta.inverse().value::<i64>();
    let top = z * Zw::lambda().pow(m - 1) * r;
    let den = z * n;
    let mut s = ComplexSum::new();
    for a in rs.iter().filter(|a| a.is_primary()) {
        let Some(d) = inverse_mod(&a, &n) else { continue };
        let d = rs.reduce(d);
        let w = psi(rs.reduce(-(zinv * d)));
        if w == Complex64::new(0.0, 0.0) {
            continue;
        }
        s.add(w * symbol_unchecked(&top, &d).to_complex() * e_frac(a * u, den));
    }
    Ok(s.value() / n.norm() as f64)
}

/// ψ⋆(u) = N(r)⁻¹ Σ ψ(−d) (λ^{2m+4}d/r)₃ ě(au/r), the sum over a, d mod r with
/// (λ^{2m+4}a)(λ^{2m+4}d) ≡ 1 (mod r).
pub fn psi_star<F>(psi: F, m: u32, r: Zw, u: Zw) -> Result<Complex64>
where
    F: Fn(Zw) -> Complex64,
{
    if !r.is_primary() {
        return domain(format!("{} is not ≡ 1 (mod 3)", r));
    }
    if r.norm() > DEFAULT_PSI_CAP {
        return Err(Error::Resource(format!("N(r) = {} exceeds {}", r.norm(), DEFAULT_PSI_CAP)));
    }
    let rs = ResidueSystem::new(r)?;
    let l = rs.reduce(Zw::lambda().pow(2 * m + 4));
    let mut s = ComplexSum::new();
    for d in rs.iter() {
        let x = rs.reduce(l * d);
        let Some(xinv) = inverse_mod(&x, &r) else { continue };
        let a = rs.reduce(xinv * inverse_mod(&l, &r).expect("λ is a unit mod r"));
        let w = psi(rs.reduce(-d));
        s.add(w * symbol_unchecked(&x, &r).to_complex() * e_frac(a * u, r));
    }
    Ok(s.value() / r.norm() as f64)
}

/// Both sides of the first unpacking identity at ν₀ = λ³ν:
/// ψ♯ of ψ_{λ^m r}(·)_{λη} at λν₀, and K_ss(ν₀, η, ζλ^{m−1}r) / N(λ^{m+3}r).
pub fn unpack1_sides(m: u32, r: Zw, eta: Zw, nu0: Zw, zeta: Unit) -> Result<(Complex64, Complex64)> {
    let lhs = psi_sharp(modqeta(m, r, Zw::lambda() * eta), m, r, zeta, Zw::lambda() * nu0)?;
    let c = zeta.value::<i64>() * Zw::lambda().pow(m - 1) * r;
    let kernel = KloostermanKernel::new(Cusp::SigmaSigma, c, i64::MAX)?;
    let k = kernel.eval(DualElement::integral(nu0), DualElement::integral(eta))?;
    let scale = (Zw::lambda().pow(m + 3) * r).norm() as f64;
    Ok((lhs, k.value() / scale))
}

/// Both sides of the second unpacking identity at ν₀ = λ^{2m+3}ν:
/// ψ⋆ of ψ_r(·)_{λ^{2m+1}η} at λν₀, and
/// K_sx(inv(λ^{2m+3})ν₀, inv(λ³)η, r) / N(r) with inverses taken mod r.
pub fn unpack2_sides(m: u32, r: Zw, eta: Zw, nu0: Zw) -> Result<(Complex64, Complex64)> {
    let psi = modqeta(0, r, Zw::lambda().pow(2 * m + 1) * eta);
    let lhs = psi_star(psi, m, r, Zw::lambda() * nu0)?;
    let inv = |k: u32| inverse_mod(&Zw::lambda().pow(k), &r).expect("λ is a unit mod r");
    let kernel = KloostermanKernel::new(Cusp::SigmaXi, r, i64::MAX)?;
    let k = kernel.eval(
        DualElement::integral(inv(2 * m + 3) * nu0),
        DualElement::integral(inv(3) * eta),
    )?;
    Ok((lhs, k.value() / r.norm() as f64))
}
