use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::ring::{DualElement, Zw};

/// Compensated (Neumaier) accumulator for complex exponential sums.
///
/// Error contract: the absolute error of `value()` is at most
/// `terms · 2⁻⁴⁵ · max_magnitude`, reported by [`ComplexSum::tolerance`].
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ComplexSum {
    re: f64,
    im: f64,
    c_re: f64,
    c_im: f64,
    terms: u64,
    max_mag: f64,
}

fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

pub const ERROR_UNIT: f64 = 2.842_170_943_040_400_7e-14; // 2^-45

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// A sum already known in closed form, with a stated term count and scale.
    pub fn from_value(z: Complex64, terms: u64, max_mag: f64) -> Self {
        ComplexSum { re: z.re, im: z.im, c_re: 0.0, c_im: 0.0, terms, max_mag }
    }

    pub fn add(&mut self, z: Complex64) {
        neumaier(&mut self.re, &mut self.c_re, z.re);
        neumaier(&mut self.im, &mut self.c_im, z.im);
        self.terms += 1;
        let m = z.norm();
        if m > self.max_mag {
            self.max_mag = m;
        }
    }

    pub fn merge(&mut self, o: &ComplexSum) {
        neumaier(&mut self.re, &mut self.c_re, o.re);
        neumaier(&mut self.re, &mut self.c_re, o.c_re);
        neumaier(&mut self.im, &mut self.c_im, o.im);
        neumaier(&mut self.im, &mut self.c_im, o.c_im);
        self.terms += o.terms;
        self.max_mag = self.max_mag.max(o.max_mag);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re + self.c_re, self.im + self.c_im)
    }

    pub fn re(&self) -> f64 {
        self.re + self.c_re
    }

    pub fn im(&self) -> f64 {
        self.im + self.c_im
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    pub fn max_magnitude(&self) -> f64 {
        self.max_mag
    }

    pub fn tolerance(&self) -> f64 {
        (self.terms.max(1) as f64) * ERROR_UNIT * self.max_mag.max(1.0)
    }

    pub fn scaled(&self, s: Complex64) -> ComplexSum {
        let v = self.value() * s;
        ComplexSum::from_value(v, self.terms, self.max_mag * s.norm())
    }
}

/// Items per chunk in parallel sums. Fixed so results do not depend on the
/// number of worker threads.
pub const CHUNK: usize = 4096;

/// Σ_{i < n} f(i), computed in fixed chunks that are reduced in index order.
pub fn chunked_sum<F>(n: usize, f: F) -> ComplexSum
where
    F: Fn(usize) -> Option<Complex64> + Sync,
{
    let chunks = n.div_ceil(CHUNK);
    let parts: Vec<ComplexSum> = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut s = ComplexSum::new();
            for i in k * CHUNK..((k + 1) * CHUNK).min(n) {
                if let Some(z) = f(i) {
                    s.add(z);
                }
            }
            s
        })
        .collect();
    let mut total = ComplexSum::new();
    for p in &parts {
        total.merge(p);
    }
    total
}

/// e(t) = e^{2πit} for t = num/den, reduced exactly before the trig call.
pub fn e_rational(num: i128, den: i128) -> Complex64 {
    let mut t = num.rem_euclid(den);
    if 2 * t > den {
        t -= den;
    }
    let (s, c) = (TAU * (t as f64 / den as f64)).sin_cos();
    Complex64::new(c, s)
}

/// ě(z) = e^{2πi(z + z̄)} = e^{4πi Re z}.
pub fn e_check(z: Complex64) -> Complex64 {
    let t = 2.0 * z.re;
    let t = t - t.round();
    let (s, c) = (TAU * t).sin_cos();
    Complex64::new(c, s)
}

/// The exact trace z + z̄ of z = x/c as a fraction (num, N(c)).
pub fn trace_fraction(x: Zw, c: Zw) -> (i128, i128) {
    let (xa, xb, ca, cb) = (x.a as i128, x.b as i128, c.a as i128, c.b as i128);
    // x·conj(c) = P + Qω with conj(c) = (ca − cb) − cb·ω
    let (da, db) = (ca - cb, -cb);
    let p = xa * da - xb * db;
    let q = xa * db + xb * da - xb * db;
    (2 * p - q, ca * ca - ca * cb + cb * cb)
}

/// ě(x/c) for x, c ∈ Z[ω], c ≠ 0.
pub fn e_frac(x: Zw, c: Zw) -> Complex64 {
    let (n, d) = trace_fraction(x, c);
    e_rational(n, d)
}

/// ě(μ/c) for μ ∈ λ^{−k}Z[ω].
pub fn e_dual(mu: DualElement, c: Zw) -> Complex64 {
    e_frac(mu.num, Zw::lambda().pow(mu.lam_exp) * c)
}
