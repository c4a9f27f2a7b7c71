//! Factorization in Z[ω] via the norm, and enumeration of primary primes.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::ring::{gcd, Coeff, Eisenstein, Unit, Zw};

const TRIAL_LIMIT: u64 = 1_000_000;
const PRIME_FACTOR_LIMIT: u64 = 1_000_000_000_000;

/// unit · λ^lambda_exp · Π ϖ^e, with each ϖ a primary prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<T: Coeff> {
    pub unit: Unit,
    pub lambda_exp: u32,
    pub primes: Vec<(Eisenstein<T>, u32)>,
}

impl<T: Coeff> Factorization<T> {
    pub fn reconstruct(&self) -> Eisenstein<T> {
        let mut x = self.unit.value::<T>() * Eisenstein::lambda().pow(self.lambda_exp);
        for (p, e) in &self.primes {
            x = x * p.pow(*e);
        }
        x
    }

    /// Number of distinct prime divisors, λ included.
    pub fn omega(&self) -> usize {
        self.primes.len() + usize::from(self.lambda_exp > 0)
    }

    /// The primary part Π ϖ^e.
    pub fn primary_part(&self) -> Eisenstein<T> {
        self.primes.iter().fold(Eisenstein::one(), |acc, (p, e)| acc * p.pow(*e))
    }
}

pub(crate) fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| rational_primes_up_to(TRIAL_LIMIT))
}

/// Sieve of Eratosthenes.
pub fn rational_primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64_into(n: u64, out: &mut BTreeMap<u64, u32>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime_u64(n) {
        if n > PRIME_FACTOR_LIMIT {
            return Err(Error::FactorRange(format!("norm has the prime factor {}", n)));
        }
        *out.entry(n).or_default() += 1;
        return Ok(());
    }
    let d = pollard_rho(n);
    factor_u64_into(d, out)?;
    factor_u64_into(n / d, out)
}

/// Factor a positive rational integer: trial division to 10⁶, then
/// Miller–Rabin and Pollard rho on a 64-bit cofactor.
pub fn factor_rational(n: &BigInt) -> Result<BTreeMap<u64, u32>> {
    if n <= &BigInt::zero() {
        return domain("factor_rational needs a positive integer");
    }
    let mut out = BTreeMap::new();
    let mut n = n.clone();
    if let Some(m) = n.to_u64() {
        let mut m = m;
        for &p in small_primes() {
            if p * p > m {
                break;
            }
            while m % p == 0 {
                m /= p;
                *out.entry(p).or_default() += 1;
            }
        }
        if m > 1 {
            if m < TRIAL_LIMIT * TRIAL_LIMIT {
                *out.entry(m).or_default() += 1;
            } else {
                factor_u64_into(m, &mut out)?;
            }
        }
        return Ok(out);
    }
    for &p in small_primes() {
        let bp = BigInt::from(p);
        while (&n % &bp).is_zero() {
            n /= &bp;
            *out.entry(p).or_default() += 1;
        }
        if let Some(m) = n.to_u64() {
            let rest = factor_rational(&BigInt::from(m))?;
            for (q, e) in rest {
                *out.entry(q).or_default() += e;
            }
            return Ok(out);
        }
    }
    Err(Error::FactorRange(format!("cofactor {} is too large", n)))
}

/// A square root of n modulo an odd prime p, if one exists.
pub fn sqrt_mod(n: u64, p: u64) -> Option<u64> {
    let n = n % p;
    if n == 0 {
        return Some(0);
    }
    if pow_mod(n, (p - 1) / 2, p) != 1 {
        return None;
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(n, q, p);
    let mut r = pow_mod(n, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// The primary prime ϖ = a + bω above a rational prime p ≡ 1 (mod 3) with
/// the smaller (a, b) in lexicographic order. The other one is conj(ϖ) up to
/// a unit.
pub fn split_prime(p: u64) -> Result<Zw> {
    if p % 3 != 1 || !is_prime_u64(p) {
        return domain(format!("{} is not a prime ≡ 1 (mod 3)", p));
    }
    let s = sqrt_mod(p - 3, p).expect("−3 is a square mod p ≡ 1 (mod 3)") as i64;
    // λ² = −3, so s − λ has norm s² + 3 ≡ 0 (mod p)
    let g = gcd(&Zw::c(p as i64, 0), &Zw::c(s - 1, -2))?;
    debug_assert_eq!(g.norm(), p as i64);
    let other = g.conj().primary_associate().expect("coprime to λ");
    Ok(g.min(other))
}

pub(crate) fn to_bigint<T: Coeff>(t: &T) -> BigInt {
    match t.to_i128() {
        Some(v) => BigInt::from(v),
        None => t.to_string().parse().expect("decimal integer"),
    }
}

fn divide_out<T: Coeff>(x: &mut Eisenstein<T>, p: &Eisenstein<T>) -> u32 {
    let mut e = 0;
    while let Some(q) = x.exact_div(p) {
        *x = q;
        e += 1;
    }
    e
}

/// Complete factorization of a nonzero element.
pub fn factor<T: Coeff>(x: &Eisenstein<T>) -> Result<Factorization<T>> {
    let dec = x.primary_decompose()?;
    let mut rest = dec.primary_part.clone();
    let norm = to_bigint(&rest.norm());
    let mut primes = Vec::new();
    for (p, _) in factor_rational(&norm)? {
        let cands: Vec<Eisenstein<T>> = if p % 3 == 2 {
            vec![Eisenstein::from_int(T::from_i64(-(p as i64)).expect("fits"))]
        } else {
            let w = split_prime(p)?;
            let w2 = w.conj().primary_associate().expect("coprime to λ");
            let conv = |z: Zw| Eisenstein::new(T::from_i64(z.a).unwrap(), T::from_i64(z.b).unwrap());
            vec![conv(w), conv(w2)]
        };
        for q in cands {
            let e = divide_out(&mut rest, &q);
            if e > 0 {
                primes.push((q, e));
            }
        }
    }
    if !rest.is_one() {
        return Err(Error::Invariant(format!("cofactor {} left after factoring", rest)));
    }
    primes.sort_by(|(p, _), (q, _)| (p.norm(), p.clone()).cmp(&(q.norm(), q.clone())));
    Ok(Factorization { unit: dec.unit, lambda_exp: dec.lambda_exp, primes })
}

/// True when x is a prime element of Z[ω].
pub fn is_prime<T: Coeff>(x: &Eisenstein<T>) -> bool {
    if x.is_zero() {
        return false;
    }
    let n = match x.norm().to_u64() {
        Some(n) => n,
        None => {
            return factor(x)
                .map(|f| f.lambda_exp + f.primes.iter().map(|&(_, e)| e).sum::<u32>() == 1)
                .unwrap_or(false)
        }
    };
    if is_prime_u64(n) {
        return true;
    }
    let r = (n as f64).sqrt().round() as u64;
    r * r == n && r % 3 == 2 && is_prime_u64(r)
}

/// Every primary prime with N(ϖ) ≤ x, sorted by (norm, a, b).
pub fn primes_up_to_norm(x: f64) -> Vec<Zw> {
    if x < 2.0 {
        return Vec::new();
    }
    let xmax = x.floor() as u64;
    let mut out = Vec::new();
    for p in rational_primes_up_to(xmax) {
        match p % 3 {
            1 => {
                let w = split_prime(p).expect("split prime");
                out.push(w);
                out.push(w.conj().primary_associate().expect("coprime to λ"));
            }
            2 if p * p <= xmax => out.push(Zw::c(-(p as i64), 0)),
            _ => {}
        }
    }
    out.sort_by_key(|w| (w.norm(), w.a, w.b));
    out
}

/// Environment variable naming a directory of cached prime lists.
pub const PRIME_CACHE_ENV: &str = "ZOMEGA_PRIME_CACHE";

/// Little-endian u64 count followed by (i64 a, i64 b) pairs.
pub fn write_prime_list(path: &Path, primes: &[Zw]) -> std::io::Result<()> {
    let mut buf = Vec::with_capacity(8 + 16 * primes.len());
    buf.extend_from_slice(&(primes.len() as u64).to_le_bytes());
    for p in primes {
        buf.extend_from_slice(&p.a.to_le_bytes());
        buf.extend_from_slice(&p.b.to_le_bytes());
    }
    std::fs::File::create(path)?.write_all(&buf)
}

pub fn read_prime_list(path: &Path) -> std::io::Result<Vec<Zw>> {
    let mut buf = Vec::new();
    std::fs::File::open(path)?.read_to_end(&mut buf)?;
    let bad = || std::io::Error::new(std::io::ErrorKind::InvalidData, "truncated prime list");
    let word = |i: usize| -> std::io::Result<[u8; 8]> {
        buf.get(i..i + 8).and_then(|s| s.try_into().ok()).ok_or_else(bad)
    };
    let n = u64::from_le_bytes(word(0)?) as usize;
    if buf.len() != 8 + 16 * n {
        return Err(bad());
    }
    (0..n)
        .map(|k| {
            let off = 8 + 16 * k;
            Ok(Zw::c(i64::from_le_bytes(word(off)?), i64::from_le_bytes(word(off + 8)?)))
        })
        .collect()
}

/// `primes_up_to_norm`, reading and filling the cache directory named by
/// `ZOMEGA_PRIME_CACHE` when it is set.
pub fn primes_up_to_norm_cached(x: f64) -> Vec<Zw> {
    let Some(dir) = std::env::var_os(PRIME_CACHE_ENV) else {
        return primes_up_to_norm(x);
    };
    let path = Path::new(&dir).join(format!("primes_{}.bin", x.floor() as u64));
    if let Ok(v) = read_prime_list(&path) {
        return v;
    }
    let v = primes_up_to_norm(x);
    let _ = std::fs::create_dir_all(&dir).and_then(|_| write_prime_list(&path, &v));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_mod_works() {
        for p in [7u64, 13, 19, 31, 37, 43, 97, 1009, 10009] {
            let s = sqrt_mod(p - 3, p).unwrap();
            assert_eq!(mul_mod(s, s, p), p - 3);
        }
    }

    #[test]
    fn rational_factoring() {
        let f = factor_rational(&BigInt::from(2u64 * 2 * 3 * 1_000_003 * 999_983)).unwrap();
        assert_eq!(f.into_iter().collect::<Vec<_>>(), vec![(2, 2), (3, 1), (999_983, 1), (1_000_003, 1)]);
        let big = BigInt::from(1_000_000_000_039u64) * BigInt::from(1_000_000_000_039u64);
        assert!(matches!(factor_rational(&big), Err(Error::FactorRange(_))));
    }

    #[test]
    fn split_primes_have_prime_norm() {
        for p in [7u64, 13, 19, 31, 9973] {
            let w = split_prime(p).unwrap();
            assert_eq!(w.norm() as u64, p);
            assert!(w.is_primary());
        }
        assert!(split_prime(5).is_err());
    }

    #[test]
    fn first_primes() {
        assert!(primes_up_to_norm(3.0).is_empty());
        assert_eq!(primes_up_to_norm(4.0), vec![Zw::c(-2, 0)]);
        let p = primes_up_to_norm(13.0);
        assert_eq!(p.len(), 5);
        assert!(p.iter().all(|w| w.is_primary()));
    }
}
