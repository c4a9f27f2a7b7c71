//! Brute-force oracles that share no code with the library: plain (a, b)
//! pairs, residues from the Hermite basis of cZ[ω], floating phases.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;

pub type P = (i64, i64);

pub fn mul(x: P, y: P) -> P {
    (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0 - x.1 * y.1)
}

pub fn add(x: P, y: P) -> P {
    (x.0 + y.0, x.1 + y.1)
}

pub fn sub(x: P, y: P) -> P {
    (x.0 - y.0, x.1 - y.1)
}

pub fn conj(x: P) -> P {
    (x.0 - x.1, -x.1)
}

pub fn norm(x: P) -> i64 {
    x.0 * x.0 - x.0 * x.1 + x.1 * x.1
}

pub fn divides(c: P, x: P) -> bool {
    let n = norm(c);
    let y = mul(x, conj(c));
    y.0 % n == 0 && y.1 % n == 0
}

pub fn congruent(x: P, y: P, c: P) -> bool {
    divides(c, sub(x, y))
}

fn gcd_i(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i(b, a % b)
    }
}

/// a + bω with 0 ≤ a < N/g, 0 ≤ b < g, g = gcd of the coordinates of c.
pub fn residues(c: P) -> Vec<P> {
    let g = gcd_i(c.0, c.1);
    let a_max = norm(c) / g;
    let mut out = Vec::new();
    for b in 0..g {
        for a in 0..a_max {
            out.push((a, b));
        }
    }
    out
}

pub fn to_complex(x: P) -> Complex64 {
    Complex64::new(x.0 as f64 - 0.5 * x.1 as f64, x.1 as f64 * 3f64.sqrt() / 2.0)
}

/// ě(x/c) = e(2 Re(x/c))
pub fn echeck(x: P, c: P) -> Complex64 {
    let z = to_complex(x) / to_complex(c);
    Complex64::from_polar(1.0, 2.0 * PI * 2.0 * z.re)
}

pub fn is_primary(x: P) -> bool {
    x.0.rem_euclid(3) == 1 && x.1.rem_euclid(3) == 0
}

pub fn powmod(x: P, mut e: i64, c: P) -> P {
    let reduce = |y: P| residues_reduce(y, c);
    let (mut r, mut b) = ((1, 0), reduce(x));
    while e > 0 {
        if e & 1 == 1 {
            r = reduce(mul(r, b));
        }
        b = reduce(mul(b, b));
        e >>= 1;
    }
    r
}

/// Reduce into the Hermite box of `residues(c)`.
pub fn residues_reduce(x: P, c: P) -> P {
    let g = gcd_i(c.0, c.1);
    // a basis vector with second coordinate g: s·c + t·cω for Bezout s, t
    let (cw0, cw1) = mul(c, (0, 1));
    let (s, t) = bezout(c.1, cw1);
    let v = (s * c.0 + t * cw0, g);
    let a_max = norm(c) / g;
    let k = x.1.div_euclid(g);
    let y = (x.0 - k * v.0, x.1 - k * v.1);
    (y.0.rem_euclid(a_max), y.1)
}

fn bezout(a: i64, b: i64) -> (i64, i64) {
    // s·a + t·b = gcd(a, b) ≥ 0
    let (mut r0, mut r1, mut s0, mut s1, mut t0, mut t1) = (a, b, 1i64, 0i64, 0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-s0, -t0)
    } else {
        (s0, t0)
    }
}

/// (a/π)₃ as an exponent k (value ω^k) or None when π | a, from Euler's
/// criterion a^{(N(π)−1)/3} ≡ ω^k (mod π).
pub fn symbol_prime(a: P, pi: P) -> Option<u8> {
    if divides(pi, a) {
        return None;
    }
    let v = powmod(a, (norm(pi) - 1) / 3, pi);
    [(1, 0), (0, 1), (-1, -1)]
        .iter()
        .position(|&w| congruent(v, w, pi))
        .map(|k| k as u8)
}

/// Primary primes of norm ≤ n by trial division of norms.
pub fn primary_primes(n: i64) -> Vec<P> {
    let is_p = |k: i64| k >= 2 && (2..).take_while(|d| d * d <= k).all(|d| k % d != 0);
    let b = ((4 * n / 3) as f64).sqrt() as i64 + 2;
    let mut out = Vec::new();
    for a in -b..=b {
        for bb in -b..=b {
            let x = (a, bb);
            let m = norm(x);
            if m == 0 || m > n || !is_primary(x) {
                continue;
            }
            let r = (m as f64).sqrt().round() as i64;
            if is_p(m) || (r * r == m && is_p(r) && r % 3 == 2) {
                out.push(x);
            }
        }
    }
    out.sort_by_key(|&x| (norm(x), x));
    out
}

/// (a/b)₃ for primary b by factoring b over `primes` and multiplying.
pub fn symbol(a: P, b: P, primes: &[P]) -> Option<u8> {
    let mut rest = b;
    let mut e = 0u8;
    for &p in primes {
        if norm(rest) == 1 {
            break;
        }
        while divides(p, rest) {
            e = (e + symbol_prime(a, p)?) % 3;
            let y = mul(rest, conj(p));
            let n = norm(p);
            rest = (y.0 / n, y.1 / n);
        }
    }
    assert_eq!(norm(rest), 1, "factor base too small for {:?}", b);
    Some(e)
}

pub fn root(e: Option<u8>) -> Complex64 {
    match e {
        None => Complex64::new(0.0, 0.0),
        Some(k) => Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 3.0),
    }
}

/// g(μ, c) = Σ_{x mod c} (x/c)₃ ě(μx/c), μ integral.
pub fn gauss(mu: P, c: P, primes: &[P]) -> Complex64 {
    residues(c).into_iter().map(|x| root(symbol(x, c, primes)) * echeck(mul(mu, x), c)).sum()
}

/// N(r)⁻¹ Σ_{(x, r) = 1} ě(kx/r)
pub fn ramanujan(r: P, k: P, primes: &[P]) -> Complex64 {
    let s: Complex64 = residues(r)
        .into_iter()
        .filter(|&x| symbol(x, r, primes).is_some())
        .map(|x| echeck(mul(k, x), r))
        .sum();
    s / norm(r) as f64
}

/// K_ss(m, n, c) over all pairs (a, d) mod 3c, m and n given as numerators
/// over λ³ (so the phase denominator is λ³c).
pub fn kloosterman_ss(m3: P, n3: P, c: P, primes: &[P]) -> Complex64 {
    let c3 = mul((3, 0), c);
    let den = mul(mul((1, 2), mul((1, 2), (1, 2))), c);
    let rs: Vec<P> = residues(c3).into_iter().filter(|&x| is_primary_mod3(x, (1, 0))).collect();
    let mut s = Complex64::new(0.0, 0.0);
    for &a in &rs {
        for &d in &rs {
            if congruent(mul(a, d), (1, 0), c) {
                s += root(symbol(c, d, primes)) * echeck(add(mul(m3, a), mul(n3, d)), den);
            }
        }
    }
    s
}

/// K_sx(m, n, c), c primary, a and d ≡ 0 (mod 3).
pub fn kloosterman_sx(m3: P, n3: P, c: P, primes: &[P]) -> Complex64 {
    let c3 = mul((3, 0), c);
    let den = mul(mul((1, 2), mul((1, 2), (1, 2))), c);
    let rs: Vec<P> = residues(c3).into_iter().filter(|&x| divides((3, 0), x)).collect();
    let mut s = Complex64::new(0.0, 0.0);
    for &a in &rs {
        for &d in &rs {
            if congruent(mul(a, d), (1, 0), c) {
                s += root(symbol(d, c, primes)) * echeck(add(mul(m3, a), mul(n3, d)), den);
            }
        }
    }
    s
}

fn is_primary_mod3(x: P, class: P) -> bool {
    congruent(x, class, (3, 0))
}
