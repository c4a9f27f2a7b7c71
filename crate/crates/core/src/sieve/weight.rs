//! Smooth weights W_{K,M} supported in [1, 2] and the smooth step they share
//! with the dyadic partition.

use crate::error::{domain, Result};

fn f(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        (-1.0 / t).exp()
    }
}

/// C∞ step: 0 for t ≤ 0, 1 for t ≥ 1.
pub fn smooth_step(t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    if t >= 1.0 {
        return 1.0;
    }
    let (a, b) = (f(t), f(1.0 - t));
    a / (a + b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightProfile {
    /// exp(4 + 1/((x−1)(x−2))) on (1, 2), peak value 1 at x = 3/2.
    Bump,
    /// 1 on [5/4, 7/4], supported in [5/4 − 1/K, 7/4 + 1/K].
    Plateau,
}

/// Bounds |W^{(j)}| ≤ C_j·M·K^j for j = 0..=3, calibrated against both
/// profiles (bump maxima about 1, 4.2, 32, 457) with some headroom.
pub const DERIVATIVE_CONSTANTS: [f64; 4] = [1.0, 5.0, 40.0, 600.0];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SmoothWeight {
    pub k: f64,
    pub m: f64,
    pub profile: WeightProfile,
}

impl Default for SmoothWeight {
    fn default() -> Self {
        SmoothWeight { k: 1.0, m: 1.0, profile: WeightProfile::Bump }
    }
}

impl SmoothWeight {
    pub fn bump(k: f64, m: f64) -> Result<Self> {
        if !(k >= 1.0 && m >= 1.0) {
            return domain(format!("weight needs K, M ≥ 1, got K = {}, M = {}", k, m));
        }
        Ok(SmoothWeight { k, m, profile: WeightProfile::Bump })
    }

    /// The plateau weight with transition width 1/K; K ≥ 4 keeps it in [1, 2].
    pub fn plateau(k: f64) -> Result<Self> {
        if !(k >= 4.0) {
            return domain(format!("plateau weight needs K ≥ 4, got {}", k));
        }
        Ok(SmoothWeight { k, m: 1.0, profile: WeightProfile::Plateau })
    }

    pub fn support(&self) -> (f64, f64) {
        match self.profile {
            WeightProfile::Bump => (1.0, 2.0),
            WeightProfile::Plateau => (1.25 - 1.0 / self.k, 1.75 + 1.0 / self.k),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let v = match self.profile {
            WeightProfile::Bump => {
                if x <= 1.0 || x >= 2.0 {
                    0.0
                } else {
                    (4.0 + 1.0 / ((x - 1.0) * (x - 2.0))).exp()
                }
            }
            WeightProfile::Plateau => {
                let k = self.k;
                smooth_step(k * (x - 1.25) + 1.0) * smooth_step(k * (1.75 - x) + 1.0)
            }
        };
        self.m * v
    }

    /// Central finite-difference estimate of W^{(j)}(x), j ≤ 3.
    pub fn derivative(&self, j: u32, x: f64) -> f64 {
        let h = 1e-3 / self.k;
        let w = |t: f64| self.eval(t);
        match j {
            0 => w(x),
            1 => (w(x + h) - w(x - h)) / (2.0 * h),
            2 => (w(x + h) - 2.0 * w(x) + w(x - h)) / (h * h),
            3 => (w(x + 2.0 * h) - 2.0 * w(x + h) + 2.0 * w(x - h) - w(x - 2.0 * h)) / (2.0 * h * h * h),
            _ => panic!("derivative order {} not supported", j),
        }
    }

    /// max over j ≤ 3 and 64 grid points of |W^{(j)}(x)| / (C_j M K^j);
    /// at most 1 when the derivative contract holds.
    pub fn derivative_ratio(&self) -> f64 {
        let (lo, hi) = self.support();
        let mut worst: f64 = 0.0;
        for i in 0..64 {
            let x = lo + (hi - lo) * (i as f64 + 0.5) / 64.0;
            for j in 0..4 {
                let bound = DERIVATIVE_CONSTANTS[j as usize] * self.m * self.k.powi(j as i32);
                worst = worst.max(self.derivative(j, x).abs() / bound);
            }
        }
        worst
    }
}
