//! Vaughan's identity over primary divisors.

use crate::arith::{divisors, mobius, von_mangoldt};
use crate::error::{domain, Result};
use crate::ring::Zw;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VaughanTerms {
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
}

impl VaughanTerms {
    /// t1 − t2 + t3, which equals Λ(ν)·[N(ν) > S].
    pub fn combined(&self) -> f64 {
        self.t1 - self.t2 + self.t3
    }
}

/// The three divisor sums of Vaughan's identity for primary ν:
/// t1 = Σ_{a|ν, N(a)≤R} μ(a) log(N(ν)/N(a)),
/// t2 = Σ_{ab|ν, N(a)≤R, N(b)≤S} μ(a)Λ(b),
/// t3 = Σ_{ab|ν, N(a)>R, N(b)>S} μ(a)Λ(b).
pub fn vaughan_terms(nu: Zw, r: f64, s: f64) -> Result<VaughanTerms> {
    if nu.is_zero() || !nu.is_primary() {
        return domain(format!("Vaughan's identity needs ν ≡ 1 (mod 3), got {}", nu));
    }
    if !(r >= 1.0 && s >= 1.0) {
        return domain(format!("Vaughan's identity needs R, S ≥ 1, got R = {}, S = {}", r, s));
    }
    let n = nu.norm() as f64;
    let (mut t1, mut t2, mut t3) = (0.0, 0.0, 0.0);
    for a in divisors(&nu)? {
        let mu = mobius(&a)?;
        if mu == 0 {
            continue;
        }
        let na = a.norm() as f64;
        if na <= r {
            t1 += mu as f64 * (n / na).ln();
        }
        let rest = nu.exact_div(&a).expect("a divides ν");
        for b in divisors(&rest)? {
            let lb = von_mangoldt(&b)?;
            if lb == 0.0 {
                continue;
            }
            let nb = b.norm() as f64;
            if na <= r && nb <= s {
                t2 += mu as f64 * lb;
            } else if na > r && nb > s {
                t3 += mu as f64 * lb;
            }
        }
    }
    Ok(VaughanTerms { t1, t2, t3 })
}
