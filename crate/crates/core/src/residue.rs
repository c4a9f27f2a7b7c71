//! Canonical residue systems for Z[ω]/(c).
//!
//! The lattice cZ[ω] has a Hermite normal form basis (h11, 0), (h21, d) in
//! (a, b) coordinates. Representatives are x + yω with 0 ≤ y < d and
//! 0 ≤ x < h11, ordered by (y, x).

use crate::error::{domain, Result};
use crate::ring::Zw;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSystem {
    modulus: Zw,
    d: i64,
    h11: i64,
    h21: i64,
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, s, t) = ext_gcd(b, a.rem_euclid(b));
        (g, t, s - a.div_euclid(b) * t)
    }
}

impl ResidueSystem {
    pub fn new(modulus: Zw) -> Result<Self> {
        if modulus.is_zero() {
            return domain("residue system modulo 0");
        }
        let (c0, c1) = (modulus.a, modulus.b);
        let n = modulus.norm();
        // generators c = (c0, c1) and cω = (−c1, c0 − c1)
        let (d, s, t) = ext_gcd(c1, c0 - c1);
        let h11 = n / d;
        let h21 = (s * c0 - t * c1).rem_euclid(h11);
        Ok(ResidueSystem { modulus, d, h11, h21 })
    }

    pub fn modulus(&self) -> Zw {
        self.modulus
    }

    pub fn len(&self) -> usize {
        (self.d * self.h11) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reduce(&self, x: Zw) -> Zw {
        let q = x.b.div_euclid(self.d);
        let y = x.b - q * self.d;
        let a = (x.a - q * self.h21).rem_euclid(self.h11);
        Zw::c(a, y)
    }

    pub fn index(&self, x: Zw) -> usize {
        let r = self.reduce(x);
        (r.b * self.h11 + r.a) as usize
    }

    pub fn get(&self, i: usize) -> Zw {
        let i = i as i64;
        Zw::c(i % self.h11, i / self.h11)
    }

    pub fn iter(&self) -> impl Iterator<Item = Zw> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn representatives(&self) -> Vec<Zw> {
        self.iter().collect()
    }
}
