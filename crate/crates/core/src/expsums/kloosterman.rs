//! Cubic Kloosterman sums for Γ₁(3) at the cusp pairs (σ, σ) and (σ, ξ).
//!
//! K_ss(m, n, c) = Σ_{a,d mod 3c; a,d ≡ 1 (3); ad ≡ 1 (c)} (c/d)₃ ě((ma + nd)/c), c ∈ 3Z[ω],
//! K_sx(m, n, c) = Σ_{a,d mod 3c; a,d ≡ 0 (3); ad ≡ 1 (c)} (d/c)₃ ě((ma + nd)/c), c ≡ 1 (3),
//! with m, n ∈ λ⁻³Z[ω].

use num_complex::Complex64;

use super::csum::{chunked_sum, e_frac, ComplexSum};
use crate::arith::omega_count;
use crate::error::{domain, Error, Result};
use crate::residue::ResidueSystem;
use crate::ring::{gcd, inverse_mod, DualElement, Zw};
use crate::symbol::{symbol_unchecked, ROOTS};

pub const DEFAULT_KLOOSTERMAN_CAP: i64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cusp {
    /// (σ, σ) with σ the identity; moduli in 3Z[ω].
    SigmaSigma,
    /// (σ, ξ) with ξ = (0 −1; 1 0); primary moduli.
    SigmaXi,
}

/// Numerator of x ∈ λ⁻³Z[ω] over λ³.
fn over_lambda3(x: DualElement) -> Result<Zw> {
    let x = x.reduced();
    if x.lam_exp > 3 {
        return domain(format!("{} is not in λ⁻³Z[ω]", x));
    }
    Ok(x.num * Zw::lambda().pow(3 - x.lam_exp))
}

/// The (a, d, (·)₃ exponent) triples of a Kloosterman sum. Independent of
/// (m, n), so one kernel serves many evaluations.
#[derive(Clone, Debug)]
pub struct KloostermanKernel {
    pub cusp: Cusp,
    pub modulus: Zw,
    terms: Vec<(Zw, Zw, u8)>,
}

impl KloostermanKernel {
    pub fn new(cusp: Cusp, c: Zw, cap: i64) -> Result<Self> {
        if c.is_zero() {
            return domain("Kloosterman modulus 0");
        }
        let c3 = c * Zw::c(3, 0);
        if c3.norm() > cap {
            return Err(Error::Resource(format!("N(3c) = {} exceeds the cap {}", c3.norm(), cap)));
        }
        let three = Zw::c(3, 0);
        let mut terms = Vec::new();
        match cusp {
            Cusp::SigmaSigma => {
                if !three.divides(&c) {
                    return domain(format!("(σ,σ) modulus {} is not ≡ 0 (mod 3)", c));
                }
                let big = ResidueSystem::new(c3)?;
                let lifts = ResidueSystem::new(three)?;
                for a in big.iter().filter(|a| a.is_primary()) {
                    let Some(d0) = inverse_mod(&a, &c) else { continue };
                    for t in lifts.iter() {
                        let d = big.reduce(d0 + c * t);
                        debug_assert!(d.is_primary());
                        if let Some(e) = symbol_unchecked(&c, &d).exponent() {
                            terms.push((a, d, e));
                        }
                    }
                }
            }
            Cusp::SigmaXi => {
                if !c.is_primary() {
                    return domain(format!("(σ,ξ) modulus {} is not ≡ 1 (mod 3)", c));
                }
                let small = ResidueSystem::new(c)?;
                let big = ResidueSystem::new(c3)?;
                let inv3 = inverse_mod(&three, &c).expect("c is coprime to 3");
                // the lift of x mod c that is ≡ 0 (mod 3)
                let lift = |x: Zw| big.reduce(three * small.reduce(inv3 * x));
                for x in small.iter() {
                    let Some(d0) = inverse_mod(&x, &c) else { continue };
                    if let Some(e) = symbol_unchecked(&d0, &c).exponent() {
                        terms.push((lift(x), lift(d0), e));
                    }
                }
            }
        }
        Ok(KloostermanKernel { cusp, modulus: c, terms })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, m: DualElement, n: DualElement) -> Result<ComplexSum> {
        let (m3, n3) = (over_lambda3(m)?, over_lambda3(n)?);
        let den = Zw::lambda().pow(3) * self.modulus;
        Ok(chunked_sum(self.terms.len(), |i| {
            let (a, d, e) = self.terms[i];
            Some(ROOTS[e as usize] * e_frac(m3 * a + n3 * d, den))
        }))
    }
}

pub fn kloosterman_ss(m: DualElement, n: DualElement, c: Zw) -> Result<ComplexSum> {
    KloostermanKernel::new(Cusp::SigmaSigma, c, DEFAULT_KLOOSTERMAN_CAP)?.eval(m, n)
}

pub fn kloosterman_sx(m: DualElement, n: DualElement, c: Zw) -> Result<ComplexSum> {
    KloostermanKernel::new(Cusp::SigmaXi, c, DEFAULT_KLOOSTERMAN_CAP)?.eval(m, n)
}

/// 2^{ω(c)} N((m, n, c)) N(c)^{1/2}. For m, n ∈ λ⁻³Z[ω] the gcd is the
/// fractional ideal λ⁻³(λ³m, λ³n, λ³c), which is the usual gcd when m and n
/// are integral.
pub fn weil_bound(m: DualElement, n: DualElement, c: Zw) -> Result<f64> {
    let (m3, n3) = (over_lambda3(m)?, over_lambda3(n)?);
    let c3 = Zw::lambda().pow(3) * c;
    let g = gcd(&gcd(&m3, &n3).unwrap_or(Zw::zero()), &c3)?;
    let w = omega_count(&c)? as i32;
    Ok(2f64.powi(w) * g.norm() as f64 / 27.0 * (c.norm() as f64).sqrt())
}

/// |K| / bound for one evaluation.
pub fn weil_ratio(value: Complex64, bound: f64) -> f64 {
    value.norm() / bound
}
