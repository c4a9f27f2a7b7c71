//! Smooth dyadic partition of unity Σ_L U(x/L) = 1 over the scales L = 2^{j/2}.

use super::weight::smooth_step;

/// U(x) = ρ(log₂ x) with ρ(t) = s(2t) − s(2t − 1), supported in (1, 2).
///
/// Shifting t by 1/2 telescopes, so the sum over half-integer powers of two
/// is identically 1 on (0, ∞).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DyadicPartition;

impl DyadicPartition {
    pub fn u(&self, x: f64) -> f64 {
        if x <= 1.0 || x >= 2.0 {
            return 0.0;
        }
        let t = x.log2();
        smooth_step(2.0 * t) - smooth_step(2.0 * t - 1.0)
    }

    /// Exponents j such that U(y/2^{j/2}) can be nonzero for some y in [lo, hi].
    pub fn scale_indices(&self, lo: f64, hi: f64) -> Vec<i32> {
        if hi <= 0.0 || lo > hi {
            return Vec::new();
        }
        let lo = lo.max(f64::MIN_POSITIVE);
        // need L < y < 2L, i.e. log₂y − 1 < j/2 < log₂y
        let jmin = (2.0 * (lo.log2() - 1.0)).floor() as i32;
        let jmax = (2.0 * hi.log2()).ceil() as i32;
        (jmin..=jmax).collect()
    }

    pub fn scale(j: i32) -> f64 {
        2f64.powf(j as f64 / 2.0)
    }

    /// Σ_L U(y/L), which should be 1.
    pub fn total(&self, y: f64) -> f64 {
        self.scale_indices(y, y).into_iter().map(|j| self.u(y / Self::scale(j))).sum()
    }
}
