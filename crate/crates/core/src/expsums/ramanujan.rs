//! Normalised Ramanujan sums ψ̂_r(k) and the Fourier transforms of the
//! congruence indicators ψ_{λ^m r}(·)_η.

use num_complex::Complex64;
use num_rational::Rational64;

use super::csum::{e_frac, ComplexSum};
use crate::arith::{divisors, euler_phi, mobius};
use crate::error::{domain, Result};
use crate::residue::ResidueSystem;
use crate::ring::{elements_with_norm_in, gcd, Zw};

/// ψ̂_r(k) = N(r)⁻¹ μ(r/(r,k)) φ(r)/φ(r/(r,k)) for primary r.
pub fn ramanujan_closed(r: Zw, k: Zw) -> Result<Rational64> {
    if !r.is_primary() {
        return domain(format!("Ramanujan modulus {} is not ≡ 1 (mod 3)", r));
    }
    ramanujan_general(r, k)
}

/// The same closed form for any nonzero modulus n, with the character
/// u ↦ ě(ku/(λn)). For primary n this equals ψ̂_n(k).
pub fn ramanujan_general(n: Zw, k: Zw) -> Result<Rational64> {
    if n.is_zero() {
        return domain("modulus 0");
    }
    let g = if k.is_zero() { n.normalized() } else { gcd(&n, &k)? };
    let quot = n.exact_div(&g).expect("gcd divides");
    let num = mobius(&quot)? as i64 * euler_phi(&n)?;
    Ok(Rational64::new(num, euler_phi(&quot)? * n.norm()))
}

/// N(r)⁻¹ Σ_{(x,r)=1} ě(kx/r) by direct summation.
pub fn ramanujan_direct(r: Zw, k: Zw) -> Result<Complex64> {
    let rs = ResidueSystem::new(r)?;
    let mut s = ComplexSum::new();
    for x in rs.iter() {
        if gcd(&x, &r)?.is_one() {
            s.add(e_frac(k * x, r));
        }
    }
    Ok(s.value() / r.norm() as f64)
}

/// Σ_{N(r) ∼ R, r primary} |ψ̂_r(k)|
pub fn ramanujan_flat_sum(big_r: f64, k: Zw) -> Result<f64> {
    if big_r < 1.0 {
        return domain("R must be at least 1");
    }
    let lo = big_r.floor() as i64;
    let hi = (2.0 * big_r).floor() as i64;
    let mut total = 0.0;
    for r in elements_with_norm_in(lo, hi).into_iter().filter(|r| r.is_primary()) {
        let v = ramanujan_closed(r, k)?;
        total += (*v.numer() as f64 / *v.denom() as f64).abs();
    }
    Ok(total)
}

/// Least-squares slope of log y against log x.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x.ln(), b + y.ln()));
    let (mx, my) = (sx / n, sy / n);
    let (mut num, mut den) = (0.0, 0.0);
    for (x, y) in points {
        num += (x.ln() - mx) * (y.ln() - my);
        den += (x.ln() - mx).powi(2);
    }
    num / den
}

/// ψ̂_{λ^m r}(k)_η for k, η ∈ λ⁻¹Z[ω] given by numerators over λ.
///
/// Equals N(λ^m r)⁻¹ Σ_{(u, λ^m r) = 1} ě((k − η)u/(λ^{m+1} r)), evaluated
/// through the closed form.
pub fn fourier_psi(eta: Zw, m: u32, r: Zw, k: Zw) -> Result<Rational64> {
    if !r.is_primary() {
        return domain(format!("{} is not ≡ 1 (mod 3)", r));
    }
    ramanujan_general(Zw::lambda().pow(m) * r, k - eta)
}

/// The same transform by direct summation; `lam_shift` is the λ-denominator
/// of k and η (1 for the dual embedding, 0 for integral arguments).
pub fn fourier_psi_direct(eta: Zw, m: u32, r: Zw, k: Zw, lam_shift: u32) -> Result<Complex64> {
    let n = Zw::lambda().pow(m) * r;
    let rs = ResidueSystem::new(n)?;
    let den = Zw::lambda().pow(lam_shift) * n;
    let h = k - eta;
    let mut s = ComplexSum::new();
    for u in rs.iter() {
        if gcd(&u, &n)?.is_one() {
            s.add(e_frac(h * u, den));
        }
    }
    Ok(s.value() / n.norm() as f64)
}

/// N(λ^ℓq)⁻¹ Σ_{r | q} Σ_{m ≤ ℓ} N(λ^m r) ψ̂_{λ^m r}(k)_η with k, η read in
/// λ⁻¹Z[ω] as k/λ, η/λ. Equals the indicator of k ≡ η (mod λ^ℓ q).
pub fn orthogonality_check(l: u32, q: Zw, k: Zw, eta: Zw) -> Result<Rational64> {
    let table = OrthogonalityTable::new(l, q)?;
    table.eval(k - eta)
}

/// Divisor data of λ^ℓ q, reused across many (k, η).
pub struct OrthogonalityTable {
    l: u32,
    q: Zw,
    // (λ^m r, φ(λ^m r))
    moduli: Vec<(Zw, i64)>,
}

impl OrthogonalityTable {
    pub fn new(l: u32, q: Zw) -> Result<Self> {
        if !q.is_primary() {
            return domain(format!("{} is not ≡ 1 (mod 3)", q));
        }
        let mut moduli = Vec::new();
        for r in divisors(&q)? {
            for m in 0..=l {
                let n = Zw::lambda().pow(m) * r;
                moduli.push((n, euler_phi(&n)?));
            }
        }
        Ok(OrthogonalityTable { l, q, moduli })
    }

    pub fn modulus(&self) -> Zw {
        Zw::lambda().pow(self.l) * self.q
    }

    /// The left side at h = k − η.
    pub fn eval(&self, h: Zw) -> Result<Rational64> {
        let mut total = Rational64::from_integer(0);
        for &(n, phi) in &self.moduli {
            let g = if h.is_zero() { n.normalized() } else { gcd(&n, &h)? };
            let quot = n.exact_div(&g).expect("gcd divides");
            let mu = mobius(&quot)? as i64;
            if mu != 0 {
                // N(n)·ψ̂ = μ(n/g) φ(n)/φ(n/g)
                total += Rational64::new(mu * phi, euler_phi(&quot)?);
            }
        }
        Ok(total / self.modulus().norm())
    }
}
