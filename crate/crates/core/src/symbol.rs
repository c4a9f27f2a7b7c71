//! The cubic residue symbol (a/b)₃ for primary b.
//!
//! The production path never factors b. It alternates reduction of a modulo b,
//! removal of units and λ-powers through the supplementary laws
//! (ω/b)₃ = ω^{α₂}, (λ/b)₃ = ω^{−α₃}, and cubic reciprocity (a/b)₃ = (b/a)₃
//! for primary a, b.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::ring::{Coeff, Eisenstein};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CubicSymbolValue {
    Zero,
    One,
    Omega,
    OmegaSq,
}

impl CubicSymbolValue {
    /// ω^e
    pub fn from_exponent(e: i64) -> Self {
        match e.rem_euclid(3) {
            0 => CubicSymbolValue::One,
            1 => CubicSymbolValue::Omega,
            _ => CubicSymbolValue::OmegaSq,
        }
    }

    /// The exponent e with value ω^e, or None for Zero.
    pub fn exponent(self) -> Option<u8> {
        match self {
            CubicSymbolValue::Zero => None,
            CubicSymbolValue::One => Some(0),
            CubicSymbolValue::Omega => Some(1),
            CubicSymbolValue::OmegaSq => Some(2),
        }
    }

    pub fn conj(self) -> Self {
        match self.exponent() {
            None => CubicSymbolValue::Zero,
            Some(e) => CubicSymbolValue::from_exponent(-(e as i64)),
        }
    }

    pub fn to_eisenstein<T: Coeff>(self) -> Eisenstein<T> {
        match self {
            CubicSymbolValue::Zero => Eisenstein::zero(),
            CubicSymbolValue::One => Eisenstein::one(),
            CubicSymbolValue::Omega => Eisenstein::omega(),
            CubicSymbolValue::OmegaSq => Eisenstein::omega() * Eisenstein::omega(),
        }
    }

    pub fn to_complex(self) -> Complex64 {
        match self.exponent() {
            None => Complex64::zero(),
            Some(e) => ROOTS[e as usize],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CubicSymbolValue::Zero => "zero",
            CubicSymbolValue::One => "one",
            CubicSymbolValue::Omega => "omega",
            CubicSymbolValue::OmegaSq => "omega^2",
        }
    }
}

const S3: f64 = 0.866_025_403_784_438_6;
pub(crate) const ROOTS: [Complex64; 3] =
    [Complex64::new(1.0, 0.0), Complex64::new(-0.5, S3), Complex64::new(-0.5, -S3)];

impl Mul for CubicSymbolValue {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        match (self.exponent(), o.exponent()) {
            (Some(x), Some(y)) => CubicSymbolValue::from_exponent((x + y) as i64),
            _ => CubicSymbolValue::Zero,
        }
    }
}

impl fmt::Display for CubicSymbolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// (α₂, α₃) with d ≡ 1 + α₂λ² + α₃λ³ (mod 9).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SupplementExponents {
    pub alpha2: i32,
    pub alpha3: i32,
}

fn ensure_primary<T: Coeff>(b: &Eisenstein<T>) -> Result<()> {
    if b.is_primary() {
        Ok(())
    } else {
        domain(format!("{} is not ≡ 1 (mod 3)", b))
    }
}

pub fn supplement_exponents<T: Coeff>(d: &Eisenstein<T>) -> Result<SupplementExponents> {
    ensure_primary(d)?;
    let nine = T::from_i64(9).unwrap();
    let (da, db) = (d.a.mod_floor(&nine).to_i64().unwrap(), d.b.mod_floor(&nine).to_i64().unwrap());
    Ok(supplements_mod9(da, db))
}

// 1 + α₂λ² + α₃λ³ = (1 − 3α₂ − 3α₃) + (−6α₃)ω
fn supplements_mod9(da: i64, db: i64) -> SupplementExponents {
    for alpha2 in -1..=1 {
        for alpha3 in -1..=1 {
            let a = (1 - 3 * alpha2 - 3 * alpha3 as i64).rem_euclid(9);
            let b = (-6 * alpha3 as i64).rem_euclid(9);
            if a == da && b == db {
                return SupplementExponents { alpha2: alpha2 as i32, alpha3: alpha3 as i32 };
            }
        }
    }
    unreachable!("every primary residue mod 9 has supplement exponents")
}

/// The cubic residue symbol (a/b)₃ for b ≡ 1 (mod 3) and arbitrary a.
pub fn cubic_symbol<T: Coeff>(a: &Eisenstein<T>, b: &Eisenstein<T>) -> Result<CubicSymbolValue> {
    ensure_primary(b)?;
    Ok(symbol_unchecked(a, b))
}

pub(crate) fn symbol_unchecked<T: Coeff>(a: &Eisenstein<T>, b: &Eisenstein<T>) -> CubicSymbolValue {
    let mut e: i64 = 0;
    let mut x = a.clone();
    let mut m = b.clone();
    let nine = T::from_i64(9).unwrap();
    loop {
        if m.is_one() {
            return CubicSymbolValue::from_exponent(e);
        }
        x = x.rem_e(&m);
        if x.is_zero() {
            return CubicSymbolValue::Zero;
        }
        let dec = x.primary_decompose().expect("nonzero");
        let s = supplements_mod9(
            m.a.mod_floor(&nine).to_i64().unwrap(),
            m.b.mod_floor(&nine).to_i64().unwrap(),
        );
        // ζ = (−ω)^j and (−1/m)₃ = 1, so (ζ/m)₃ = ω^{j·α₂}
        e += dec.unit.exponent() as i64 * s.alpha2 as i64 - dec.lambda_exp as i64 * s.alpha3 as i64;
        if dec.primary_part.is_one() {
            return CubicSymbolValue::from_exponent(e);
        }
        x = m;
        m = dec.primary_part;
    }
}

fn powmod<T: Coeff>(x: &Eisenstein<T>, mut e: T, m: &Eisenstein<T>) -> Eisenstein<T> {
    let two = T::one() + T::one();
    let mut base = x.rem_e(m);
    let mut acc = Eisenstein::one().rem_e(m);
    while !e.is_zero() {
        if e.is_odd() {
            acc = (acc * base.clone()).rem_e(m);
        }
        e = e / two.clone();
        base = (base.clone() * base).rem_e(m);
    }
    acc
}

/// (a/ϖ)₃ ≡ a^{(N(ϖ)−1)/3} (mod ϖ), for a primary prime ϖ not dividing 3.
pub fn cubic_symbol_prime_oracle<T: Coeff>(
    a: &Eisenstein<T>,
    p: &Eisenstein<T>,
) -> Result<CubicSymbolValue> {
    ensure_primary(p)?;
    if p.is_one() {
        return domain("the oracle needs a prime modulus");
    }
    let three = T::from_i64(3).unwrap();
    let v = powmod(a, (p.norm() - T::one()) / three, p);
    let candidates = [
        (CubicSymbolValue::Zero, Eisenstein::zero()),
        (CubicSymbolValue::One, Eisenstein::one()),
        (CubicSymbolValue::Omega, Eisenstein::omega()),
        (CubicSymbolValue::OmegaSq, Eisenstein::omega() * Eisenstein::omega()),
    ];
    let hits: Vec<_> = candidates.iter().filter(|(_, t)| v.congruent(t, p)).collect();
    match hits.as_slice() {
        [(s, _)] => Ok(*s),
        _ => Err(Error::Invariant(format!("power residue of {} mod {} is not a cube root of unity", a, p))),
    }
}
