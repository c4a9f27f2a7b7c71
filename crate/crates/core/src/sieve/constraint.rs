use std::fmt;

use crate::error::{domain, Result};
use crate::ring::{gcd, Zw};

/// The progression n ≡ u (mod v) with v ≡ 0 and u ≡ 1 (mod 3), (u, v) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProgressionConstraint {
    v: Zw,
    u: Zw,
}

impl ProgressionConstraint {
    pub fn new(v: Zw, u: Zw) -> Result<Self> {
        let three = Zw::c(3, 0);
        if v.is_zero() || !three.divides(&v) {
            return domain(format!("progression modulus {} is not ≡ 0 (mod 3)", v));
        }
        if !u.is_primary() {
            return domain(format!("progression class {} is not ≡ 1 (mod 3)", u));
        }
        if !gcd(&u, &v)?.is_one() {
            return domain(format!("progression class {} is not coprime to {}", u, v));
        }
        Ok(ProgressionConstraint { v, u })
    }

    /// n ≡ 1 (mod 3), the weakest constraint allowed.
    pub fn trivial() -> Self {
        ProgressionConstraint { v: Zw::c(3, 0), u: Zw::one() }
    }

    pub fn modulus(&self) -> Zw {
        self.v
    }

    pub fn class(&self) -> Zw {
        self.u
    }

    pub fn matches(&self, n: Zw) -> bool {
        self.v.divides(&(n - self.u))
    }
}

impl Default for ProgressionConstraint {
    fn default() -> Self {
        Self::trivial()
    }
}

impl fmt::Display for ProgressionConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.u, self.v)
    }
}
