//! Prime sums and Type-I/II sums with a coefficient source in place of ρ_f.
//!
//! Everything is written in n = λ³ν, so N(ν) = N(n)/27 and the condition
//! λ³ν ≡ u (mod v) reads n ≡ u (mod v). Since u ≡ 1 (mod 3), every n that
//! contributes is primary.

use num_complex::Complex64;

use super::constraint::ProgressionConstraint;
use super::source::CoefficientSource;
use super::weight::SmoothWeight;
use crate::arith::mobius;
use crate::error::{domain, Result};
use crate::expsums::csum::ComplexSum;
use crate::factor::primes_up_to_norm_cached;
use crate::ring::{elements_with_norm_in, gcd, Zw};

pub(crate) const NORM_LAMBDA3: f64 = 27.0;

/// The norm window (lo, hi] of n outside of which W(N(n)/(27X)) vanishes.
pub(crate) fn norm_window(x: f64, w: &SmoothWeight) -> (i64, i64) {
    let (s0, s1) = w.support();
    let lo = (NORM_LAMBDA3 * x * s0).floor() as i64;
    let hi = (NORM_LAMBDA3 * x * s1).ceil() as i64;
    (lo.max(0), hi.max(0))
}

pub(crate) fn weight_at(x: f64, w: &SmoothWeight, n: Zw) -> f64 {
    w.eval(n.norm() as f64 / (NORM_LAMBDA3 * x))
}

/// (ϖ^k, log N(ϖ)) for primary primes ϖ and k ≥ 1 with lo < N(ϖ^k) ≤ hi.
pub(crate) fn prime_powers_between(lo: i64, hi: i64) -> Vec<(Zw, u32, f64)> {
    let mut out = Vec::new();
    for w in primes_up_to_norm_cached(hi as f64) {
        let log = (w.norm() as f64).ln();
        let mut q = w;
        let mut k = 1;
        loop {
            let n = q.norm();
            if n > hi {
                break;
            }
            if n > lo {
                out.push((q, k, log));
            }
            q = q * w;
            k += 1;
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrimeSums {
    /// Σ over primes ϖ ≡ u (mod v) with N(λ⁻³ϖ) ≤ X of src(ϖ) log N(ϖ).
    pub primes: Complex64,
    /// Σ over ν with λ³ν ≡ u (mod v) and N(ν) ≤ X of src(λ³ν) Λ(λ³ν).
    pub von_mangoldt: Complex64,
}

impl PrimeSums {
    /// The contribution of proper prime powers ϖ^k, k ≥ 2.
    pub fn prime_power_part(&self) -> Complex64 {
        self.von_mangoldt - self.primes
    }
}

/// The sharp-cutoff prime sum and its Λ-weighted companion.
pub fn prime_sum_sharp(x: f64, constraint: &ProgressionConstraint, src: &CoefficientSource) -> Result<PrimeSums> {
    if !(x >= 0.0) {
        return domain(format!("X must be nonnegative, got {}", x));
    }
    let hi = (NORM_LAMBDA3 * x).floor() as i64;
    let mut primes = ComplexSum::new();
    let mut all = ComplexSum::new();
    for (n, k, log) in prime_powers_between(0, hi) {
        if !constraint.matches(n) {
            continue;
        }
        let t = src.value(n) * log;
        if k == 1 {
            primes.add(t);
        }
        all.add(t);
    }
    Ok(PrimeSums { primes: primes.value(), von_mangoldt: all.value() })
}

/// Σ src(λ³ν) Λ(λ³ν) over lo < N(ν) ≤ hi, λ³ν ≡ u (mod v).
pub fn prime_sum_between(lo: f64, hi: f64, constraint: &ProgressionConstraint, src: &CoefficientSource) -> Complex64 {
    let mut s = ComplexSum::new();
    let (nlo, nhi) = ((NORM_LAMBDA3 * lo).floor() as i64, (NORM_LAMBDA3 * hi).floor() as i64);
    for (n, _, log) in prime_powers_between(nlo, nhi) {
        if constraint.matches(n) {
            s.add(src.value(n) * log);
        }
    }
    s.value()
}

/// Σ src(λ³ν) Λ(λ³ν) W(N(ν)/X) over λ³ν ≡ u (mod v).
pub fn smoothed_prime_sum(
    x: f64,
    constraint: &ProgressionConstraint,
    src: &CoefficientSource,
    w: &SmoothWeight,
) -> Result<Complex64> {
    if !(x > 0.0) {
        return domain(format!("X must be positive, got {}", x));
    }
    let (lo, hi) = norm_window(x, w);
    let mut s = ComplexSum::new();
    for (n, _, log) in prime_powers_between(lo, hi) {
        if constraint.matches(n) {
            s.add(src.value(n) * log * weight_at(x, w, n));
        }
    }
    Ok(s.value())
}

fn check_type_modulus(a: Zw, constraint: &ProgressionConstraint) -> Result<()> {
    if !a.is_primary() {
        return domain(format!("{} is not ≡ 1 (mod 3)", a));
    }
    if !gcd(&a, &constraint.modulus())?.is_one() {
        return domain(format!("{} is not coprime to {}", a, constraint.modulus()));
    }
    Ok(())
}

/// Σ_{b: ab ≡ u (mod v)} src(ab) W(N(λ⁻³ab)/X), b over all of Z[ω].
pub fn type1_pointwise(
    a: Zw,
    x: f64,
    constraint: &ProgressionConstraint,
    src: &CoefficientSource,
    w: &SmoothWeight,
) -> Result<Complex64> {
    check_type_modulus(a, constraint)?;
    let (lo, hi) = norm_window(x, w);
    let na = a.norm();
    let mut s = ComplexSum::new();
    for b in elements_with_norm_in(lo / na, hi / na) {
        let n = a * b;
        if constraint.matches(n) {
            let wt = weight_at(x, w, n);
            if wt != 0.0 {
                s.add(src.value(n) * wt);
            }
        }
    }
    Ok(s.value())
}

/// Σ_a μ²(a) α_a T(a), with T the pointwise Type-I sum.
pub fn type1_average(
    alpha: &[(Zw, Complex64)],
    x: f64,
    constraint: &ProgressionConstraint,
    src: &CoefficientSource,
    w: &SmoothWeight,
) -> Result<Complex64> {
    let mut s = ComplexSum::new();
    for &(a, al) in alpha {
        if mobius(&a)? == 0 {
            continue;
        }
        s.add(al * type1_pointwise(a, x, constraint, src, w)?);
    }
    Ok(s.value())
}

/// Σ_{a,b: ab ≡ u (mod v)} μ²(a) α_a β_b src(ab) W(N(λ⁻³ab)/X).
pub fn type2_bilinear(
    alpha: &[(Zw, Complex64)],
    beta: &[(Zw, Complex64)],
    x: f64,
    constraint: &ProgressionConstraint,
    src: &CoefficientSource,
    w: &SmoothWeight,
) -> Result<Complex64> {
    let mut s = ComplexSum::new();
    for &(a, al) in alpha {
        check_type_modulus(a, constraint)?;
        if mobius(&a)? == 0 {
            continue;
        }
        for &(b, be) in beta {
            let n = a * b;
            if !constraint.matches(n) {
                continue;
            }
            let wt = weight_at(x, w, n);
            if wt != 0.0 {
                s.add(al * be * src.value(n) * wt);
            }
        }
    }
    Ok(s.value())
}
