//! Multiplicative functions on Z[ω].

use crate::error::{domain, Result};
use crate::factor::{factor, Factorization};
use crate::ring::{Coeff, Eisenstein};

fn nonzero<T: Coeff>(c: &Eisenstein<T>, what: &str) -> Result<Factorization<T>> {
    if c.is_zero() {
        return domain(format!("{} of 0", what));
    }
    factor(c)
}

fn norm_f64<T: Coeff>(p: &Eisenstein<T>) -> f64 {
    p.norm().to_f64().unwrap_or(f64::INFINITY)
}

/// Local factors (N(p), e) including λ, whose norm is 3.
fn local_norms<T: Coeff>(f: &Factorization<T>) -> Vec<(T, u32)> {
    let mut v: Vec<(T, u32)> = f.primes.iter().map(|(p, e)| (p.norm(), *e)).collect();
    if f.lambda_exp > 0 {
        v.push((T::from_i64(3).unwrap(), f.lambda_exp));
    }
    v
}

fn ipow<T: Coeff>(b: &T, e: u32) -> T {
    (0..e).fold(T::one(), |acc, _| acc * b.clone())
}

/// #(Z[ω]/c)^×
pub fn euler_phi<T: Coeff>(c: &Eisenstein<T>) -> Result<T> {
    let f = nonzero(c, "euler_phi")?;
    Ok(local_norms(&f)
        .iter()
        .fold(T::one(), |acc, (n, e)| acc * ipow(n, e - 1) * (n.clone() - T::one())))
}

pub fn mobius<T: Coeff>(c: &Eisenstein<T>) -> Result<i32> {
    let f = nonzero(c, "mobius")?;
    let loc = local_norms(&f);
    if loc.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if loc.len() % 2 == 0 { 1 } else { -1 })
}

/// Number of distinct prime divisors, λ included.
pub fn omega_count<T: Coeff>(c: &Eisenstein<T>) -> Result<usize> {
    Ok(nonzero(c, "omega_count")?.omega())
}

/// Product of the distinct prime divisors (λ and primary primes).
pub fn rad<T: Coeff>(c: &Eisenstein<T>) -> Result<Eisenstein<T>> {
    let f = nonzero(c, "rad")?;
    let mut r = if f.lambda_exp > 0 { Eisenstein::lambda() } else { Eisenstein::one() };
    for (p, _) in &f.primes {
        r = r * p.clone();
    }
    Ok(r)
}

/// σ_b(q) = Σ_{d | q} N(d)^b over primary divisors d.
pub fn sigma_b<T: Coeff>(q: &Eisenstein<T>, b: f64) -> Result<f64> {
    if !q.is_primary() {
        return domain(format!("sigma_b needs q ≡ 1 (mod 3), got {}", q));
    }
    let f = nonzero(q, "sigma_b")?;
    Ok(f.primes
        .iter()
        .map(|(p, e)| {
            let t = norm_f64(p).powf(b);
            (0..=*e).map(|k| t.powi(k as i32)).sum::<f64>()
        })
        .product())
}

/// Number of primary r with N(r) ≤ x supported on the primes dividing q.
pub fn count_rad_divisors<T: Coeff>(q: &Eisenstein<T>, x: f64) -> Result<u64> {
    if !q.is_primary() {
        return domain(format!("count_rad_divisors needs q ≡ 1 (mod 3), got {}", q));
    }
    let f = nonzero(q, "count_rad_divisors")?;
    let norms: Vec<f64> = f.primes.iter().map(|(p, _)| norm_f64(p)).collect();
    fn go(norms: &[f64], bound: f64) -> u64 {
        match norms.split_first() {
            None => 1,
            Some((&n, rest)) => {
                let mut total = 0;
                let mut acc = 1.0;
                while acc <= bound * (1.0 + 1e-12) {
                    total += go(rest, bound / acc);
                    acc *= n;
                }
                total
            }
        }
    }
    if x < 1.0 {
        return Ok(0);
    }
    Ok(go(&norms, x))
}

/// log N(ϖ) when ν is a unit times ϖ^k, k ≥ 1; zero otherwise.
pub fn von_mangoldt<T: Coeff>(nu: &Eisenstein<T>) -> Result<f64> {
    let f = nonzero(nu, "von_mangoldt")?;
    Ok(match (f.lambda_exp, f.primes.as_slice()) {
        (0, [(p, _)]) => norm_f64(p).ln(),
        (k, []) if k > 0 => 3f64.ln(),
        _ => 0.0,
    })
}

/// All primary divisors of a primary q, in (norm, a, b) order.
pub fn divisors<T: Coeff>(q: &Eisenstein<T>) -> Result<Vec<Eisenstein<T>>> {
    if !q.is_primary() {
        return domain(format!("divisors needs q ≡ 1 (mod 3), got {}", q));
    }
    let f = nonzero(q, "divisors")?;
    let mut out = vec![Eisenstein::<T>::one()];
    for (p, e) in &f.primes {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut x = d.clone();
            for k in 0..=*e {
                if k > 0 {
                    x = x * p.clone();
                }
                next.push(x.clone());
            }
        }
        out = next;
    }
    out.sort_by(|x, y| (x.norm(), x.clone()).cmp(&(y.norm(), y.clone())));
    Ok(out)
}

/// True when c has no repeated prime factor.
pub fn is_squarefree<T: Coeff>(c: &Eisenstein<T>) -> Result<bool> {
    Ok(mobius(c)? != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Zw;

    #[test]
    fn small_values() {
        let w = Zw::c(-2, -3); // norm 7
        assert_eq!(euler_phi(&w).unwrap(), 6);
        assert_eq!(euler_phi(&Zw::c(3, 0)).unwrap(), 6);
        assert_eq!(sigma_b(&Zw::one(), 0.0).unwrap(), 1.0);
        assert_eq!(sigma_b(&(w * w), 0.0).unwrap(), 3.0);
        assert_eq!(count_rad_divisors(&w, 49.0).unwrap(), 3);
        assert_eq!(count_rad_divisors(&Zw::one(), 1e6).unwrap(), 1);
        assert!((von_mangoldt(&Zw::c(-2, 0)).unwrap() - 4f64.ln()).abs() < 1e-15);
        assert_eq!(von_mangoldt(&Zw::c(0, 1)).unwrap(), 0.0);
        assert_eq!(mobius(&Zw::c(9, 0)).unwrap(), 0);
        assert_eq!(divisors(&(w * Zw::c(-2, 0))).unwrap().len(), 4);
        assert!(euler_phi(&Zw::zero()).is_err());
    }
}
