//! Cubic Gauss sums g(μ, c) = Σ_{d mod c} (d/c)₃ ě(μd/c) for primary c.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_complex::Complex64;

use super::csum::{chunked_sum, e_dual, e_rational, ComplexSum};
use crate::error::{domain, Error, Result};
use crate::factor::{factor, is_prime_u64, pow_mod};
use crate::residue::ResidueSystem;
use crate::ring::{inverse_mod, DualElement, Zw};
use crate::symbol::{symbol_unchecked, CubicSymbolValue, ROOTS};

pub const DEFAULT_NORM_CAP: i64 = 1_000_000;

#[derive(Clone, Copy, Debug)]
pub struct GaussSumResult {
    pub value: ComplexSum,
    pub modulus: Zw,
    pub shift: DualElement,
}

impl GaussSumResult {
    pub fn value(&self) -> Complex64 {
        self.value.value()
    }
}

fn check_modulus(c: Zw, cap: i64) -> Result<()> {
    if !c.is_primary() {
        return domain(format!("Gauss sum modulus {} is not ≡ 1 (mod 3)", c));
    }
    if c.norm() > cap {
        return Err(Error::Resource(format!("N({}) = {} exceeds the cap {}", c, c.norm(), cap)));
    }
    Ok(())
}

fn check_shift(mu: DualElement) -> Result<DualElement> {
    let mu = mu.reduced();
    if mu.lam_exp > 1 {
        return domain(format!("shift {} is not in λ⁻¹Z[ω]", mu));
    }
    Ok(mu)
}

/// g(μ, c) by direct summation over the canonical residues of c.
pub fn gauss_direct(mu: DualElement, c: Zw) -> Result<GaussSumResult> {
    gauss_direct_capped(mu, c, DEFAULT_NORM_CAP)
}

pub fn gauss_direct_capped(mu: DualElement, c: Zw, cap: i64) -> Result<GaussSumResult> {
    Ok(gauss_direct_many(&[mu], c, cap)?.remove(0))
}

/// Direct sums for several shifts sharing one table of symbol values.
pub fn gauss_direct_many(mus: &[DualElement], c: Zw, cap: i64) -> Result<Vec<GaussSumResult>> {
    check_modulus(c, cap)?;
    let mus: Vec<DualElement> = mus.iter().map(|&m| check_shift(m)).collect::<Result<_>>()?;
    let rs = ResidueSystem::new(c)?;
    let chi: Vec<u8> = (0..rs.len())
        .map(|i| symbol_unchecked(&rs.get(i), &c).exponent().unwrap_or(3))
        .collect();
    Ok(mus
        .iter()
        .map(|&mu| {
            let value = chunked_sum(rs.len(), |i| {
                let e = chi[i];
                if e == 3 {
                    return None;
                }
                let d = rs.get(i);
                Some(ROOTS[e as usize] * e_dual(DualElement::new(mu.num * d, mu.lam_exp), c))
            });
            GaussSumResult { value, modulus: c, shift: mu }
        })
        .collect())
}

fn base_cache() -> &'static RwLock<HashMap<Zw, Complex64>> {
    static CACHE: OnceLock<RwLock<HashMap<Zw, Complex64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn primitive_root(p: u64) -> u64 {
    let mut m = p - 1;
    let mut qs = Vec::new();
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            qs.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        qs.push(m);
    }
    (2..p).find(|&g| qs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).expect("p is prime")
}

/// g(ϖ) = g(1, ϖ) for a split primary prime, summed over Z/p.
///
/// With ω ≡ w₀ (mod ϖ), the residues mod ϖ are 0..p−1 and the symbol of the
/// primitive root g is read off g^{(p−1)/3} ∈ {w₀, w₀²}.
fn gauss_split_prime(w: Zw) -> Complex64 {
    let p = w.norm() as u64;
    let (a, b) = (w.a.rem_euclid(p as i64) as u64, w.b.rem_euclid(p as i64) as u64);
    let binv = pow_mod(b, p - 2, p);
    let w0 = ((p - a) % p) * binv % p;
    let g = primitive_root(p);
    let h = pow_mod(g, (p - 1) / 3, p);
    let s = if h == w0 { 1 } else { 2 };
    debug_assert!(h == w0 || h == w0 * w0 % p);
    // tr(d/ϖ) = d(2a − b)/p for rational d
    let t = (2 * w.a - w.b).rem_euclid(p as i64) as u64;
    let mut buckets = [ComplexSum::new(), ComplexSum::new(), ComplexSum::new()];
    let mut x = t;
    for i in 0..(p - 1) {
        buckets[(i % 3) as usize].add(e_rational(x as i128, p as i128));
        x = x * g % p;
    }
    let mut total = ComplexSum::new();
    for (j, bucket) in buckets.iter().enumerate() {
        total.merge(&bucket.scaled(ROOTS[(j * s) % 3]));
    }
    total.value()
}

/// g(ϖ) for a primary prime ϖ, cached.
pub fn gauss_prime(w: Zw) -> Result<Complex64> {
    if let Some(v) = base_cache().read().expect("cache lock").get(&w) {
        return Ok(*v);
    }
    if !w.is_primary() {
        return domain(format!("{} is not primary", w));
    }
    let n = w.norm() as u64;
    let v = if is_prime_u64(n) {
        gauss_split_prime(w)
    } else {
        gauss_direct_capped(DualElement::integral(Zw::one()), w, i64::MAX)?.value()
    };
    base_cache().write().expect("cache lock").insert(w, v);
    Ok(v)
}

/// g(ϖ^k, ϖ^ℓ); `k = None` stands for the shift 0.
pub fn gauss_local_table(w: Zw, k: Option<u32>, l: u32) -> Result<Complex64> {
    let n = w.norm() as f64;
    let k = k.unwrap_or(u32::MAX).min(l);
    if l == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if l <= k {
        return Ok(if l % 3 == 0 {
            Complex64::new(n.powi(l as i32) - n.powi(l as i32 - 1), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        });
    }
    if l == k + 1 {
        let nk = n.powi(k as i32);
        return Ok(match l % 3 {
            0 => Complex64::new(-nk, 0.0),
            1 => gauss_prime(w)? * nk,
            _ => gauss_prime(w)?.conj() * nk,
        });
    }
    Ok(Complex64::new(0.0, 0.0))
}

fn gauss_local(mu: Zw, w: Zw, l: u32) -> Result<Complex64> {
    let q = w.pow(l);
    if q.divides(&mu) {
        return gauss_local_table(w, None, l);
    }
    let mut k = 0;
    let mut rest = mu;
    while let Some(x) = rest.exact_div(&w) {
        rest = x;
        k += 1;
    }
    let chi = symbol_unchecked(&rest, &q).conj();
    Ok(chi.to_complex() * gauss_local_table(w, Some(k), l)?)
}

/// g(μ, c) from the factorization of c, the prime power table and twisted
/// multiplicativity. Only g(ϖ) for ϖ | c is summed.
pub fn gauss_fast(mu: DualElement, c: Zw) -> Result<GaussSumResult> {
    if !c.is_primary() {
        return domain(format!("Gauss sum modulus {} is not ≡ 1 (mod 3)", c));
    }
    let mu = check_shift(mu)?;
    let mut twist = Complex64::new(1.0, 0.0);
    if mu.lam_exp == 1 {
        twist = symbol_unchecked(&Zw::lambda(), &c).to_complex();
    }
    let f = factor(&c)?;
    let mut acc = Zw::one();
    let mut g = twist;
    for &(w, l) in &f.primes {
        let b = w.pow(l);
        g *= symbol_unchecked(&acc, &b).conj().to_complex() * gauss_local(mu.num, w, l)?;
        acc = acc * b;
    }
    let terms = f.primes.len() as u64 + 1;
    Ok(GaussSumResult {
        value: ComplexSum::from_value(g, terms, (c.norm() as f64).sqrt().max(1.0)),
        modulus: c,
        shift: mu,
    })
}

/// Normalised sum g̃(c) = N(c)^{−1/2} g(1, c).
pub fn normalized_gauss(c: Zw) -> Result<Complex64> {
    let g = gauss_fast(DualElement::integral(Zw::one()), c)?.value();
    Ok(g / (c.norm() as f64).sqrt())
}

/// |g(ϖ)³ + ϖ²ϖ̄|
pub fn gauss_cube_check(w: Zw) -> Result<f64> {
    let g = gauss_prime(w)?;
    Ok(cube_residual(w, g))
}

pub fn cube_residual(w: Zw, g: Complex64) -> f64 {
    let target = (w * w * w.conj()).to_complex();
    (g * g * g + target).norm()
}

/// (μ/c)₃ g(1, c) conjugated, the coprime shift law, as a check value.
pub fn coprime_shift_prediction(mu: Zw, c: Zw) -> Result<Complex64> {
    if inverse_mod(&mu, &c).is_none() {
        return domain("shift not coprime to the modulus");
    }
    let g1 = gauss_fast(DualElement::integral(Zw::one()), c)?.value();
    Ok(symbol_unchecked(&mu, &c).conj().to_complex() * g1)
}

pub fn symbol_value(a: Zw, c: Zw) -> CubicSymbolValue {
    symbol_unchecked(&a, &c)
}
