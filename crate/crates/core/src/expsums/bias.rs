//! Partial sums of normalised Gauss sums g̃(ϖ) over primary primes.

use num_complex::Complex64;
use rayon::prelude::*;

use super::csum::ComplexSum;
use super::gauss::gauss_prime;
use crate::error::{Error, Result};
use crate::factor::primes_up_to_norm_cached;

pub const DEFAULT_BIAS_CAP: f64 = 1e6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BiasRow {
    pub x: f64,
    /// Number of primary primes with N(ϖ) ≤ X.
    pub count: u64,
    pub sum: Complex64,
    /// |Σ g̃(ϖ)| / count, 0 when count = 0.
    pub ratio: f64,
}

/// One row per X of the schedule, sorted ascending. The primes are summed in
/// norm order so every row is a prefix of the next.
pub fn bias_rows(schedule: &[f64]) -> Result<Vec<BiasRow>> {
    let mut xs: Vec<f64> = schedule.to_vec();
    if xs.iter().any(|x| !x.is_finite()) {
        return Err(Error::Domain("schedule entries must be finite".into()));
    }
    xs.sort_by(f64::total_cmp);
    let Some(&top) = xs.last() else { return Ok(Vec::new()) };
    if top > DEFAULT_BIAS_CAP {
        return Err(Error::Resource(format!("X = {} exceeds {}", top, DEFAULT_BIAS_CAP)));
    }
    let primes = primes_up_to_norm_cached(top);
    let values: Vec<Complex64> = primes
        .par_iter()
        .map(|&w| gauss_prime(w).map(|g| g / (w.norm() as f64).sqrt()))
        .collect::<Result<_>>()?;
    let mut acc = ComplexSum::new();
    let mut i = 0;
    let mut rows = Vec::with_capacity(xs.len());
    for x in xs {
        while i < primes.len() && primes[i].norm() as f64 <= x {
            acc.add(values[i]);
            i += 1;
        }
        let sum = acc.value();
        let ratio = if i == 0 { 0.0 } else { sum.norm() / i as f64 };
        rows.push(BiasRow { x, count: i as u64, sum, ratio });
    }
    Ok(rows)
}
