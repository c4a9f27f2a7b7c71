//! Coefficient sources standing in for the Fourier coefficients ρ_f.
//!
//! Sources are indexed by n = λ³ν ∈ Z[ω] rather than by ν ∈ λ⁻³Z[ω].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::expsums::gauss::normalized_gauss;
use crate::ring::{Unit, Zw};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoefficientSource {
    /// g̃ of the primary part of n.
    GaussProxy,
    /// Values r·e^{iθ} with r ∈ [0, 1), drawn from ChaCha8 keyed on (seed, n).
    SyntheticRandom { seed: u64 },
    Constant(Complex64),
}

/// g̃(c) for the primary part c of n, with the unit and λ-power that were
/// dropped to reach it.
pub fn gauss_proxy_detail(n: Zw) -> (Complex64, Unit, u32) {
    if n.is_zero() {
        return (Complex64::new(0.0, 0.0), Unit::ONE, 0);
    }
    let dec = n.primary_decompose().expect("nonzero");
    let g = normalized_gauss(dec.primary_part).expect("primary part is primary");
    (g, dec.unit, dec.lambda_exp)
}

impl CoefficientSource {
    pub fn constant(c: f64) -> Self {
        CoefficientSource::Constant(Complex64::new(c, 0.0))
    }

    pub fn value(&self, n: Zw) -> Complex64 {
        match *self {
            CoefficientSource::GaussProxy => gauss_proxy_detail(n).0,
            CoefficientSource::SyntheticRandom { seed } => {
                let mut key = [0u8; 32];
                key[..8].copy_from_slice(&seed.to_le_bytes());
                key[8..16].copy_from_slice(&n.a.to_le_bytes());
                key[16..24].copy_from_slice(&n.b.to_le_bytes());
                let mut rng = ChaCha8Rng::from_seed(key);
                let r: f64 = rng.gen();
                let theta: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
                Complex64::from_polar(r, theta)
            }
            CoefficientSource::Constant(c) => c,
        }
    }

    /// Values on a list of points, computed in parallel.
    pub fn table(&self, points: &[Zw]) -> HashMap<Zw, Complex64> {
        points.par_iter().map(|&n| (n, self.value(n))).collect()
    }
}

impl fmt::Display for CoefficientSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientSource::GaussProxy => write!(f, "gauss"),
            CoefficientSource::SyntheticRandom { seed } => write!(f, "random:{}", seed),
            CoefficientSource::Constant(c) if c.im == 0.0 => write!(f, "const:{}", c.re),
            CoefficientSource::Constant(c) => write!(f, "const:{}+{}i", c.re, c.im),
        }
    }
}

/// "gauss", "random[:seed]" or "const[:value]".
impl FromStr for CoefficientSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = match s.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (s, None),
        };
        let bad = || Error::Parse(format!("unknown coefficient source '{}'", s));
        match (kind, arg) {
            ("gauss", None) => Ok(CoefficientSource::GaussProxy),
            ("random", None) => Ok(CoefficientSource::SyntheticRandom { seed: 0 }),
            ("random", Some(a)) => Ok(CoefficientSource::SyntheticRandom { seed: a.parse().map_err(|_| bad())? }),
            ("const", None) => Ok(CoefficientSource::constant(1.0)),
            ("const", Some(a)) => Ok(CoefficientSource::constant(a.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_is_reproducible_and_bounded() {
        let s = CoefficientSource::SyntheticRandom { seed: 7 };
        for n in [Zw::c(1, 0), Zw::c(4, 3), Zw::c(-2, -3)] {
            assert_eq!(s.value(n), s.value(n));
            assert!(s.value(n).norm() <= 1.0);
        }
        assert_ne!(s.value(Zw::c(4, 3)), CoefficientSource::SyntheticRandom { seed: 8 }.value(Zw::c(4, 3)));
    }

    #[test]
    fn gauss_proxy_drops_units() {
        let w = Zw::c(-2, -3);
        let (g, u, k) = gauss_proxy_detail(-(w * Zw::lambda()));
        assert!((g - gauss_proxy_detail(w).0).norm() < 1e-15);
        assert_eq!(k, 1);
        assert_eq!(u, Unit::new(3));
        assert!((g.norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["gauss", "random:5", "const:2"] {
            assert_eq!(s.parse::<CoefficientSource>().unwrap().to_string(), s);
        }
        assert!("nope".parse::<CoefficientSource>().is_err());
    }
}
