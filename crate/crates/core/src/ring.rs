//! The ring Z[ω] of Eisenstein integers, ω = e^{2πi/3}.
//!
//! Elements are stored in the basis {1, ω}. `Eisenstein<T>` is generic over the
//! coefficient type: [`EisensteinInt`] uses arbitrary precision integers and
//! [`Zw`] uses `i64` for the inner loops of the exponential sums.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::error::{domain, Error, Result};

pub trait Coeff:
    Clone
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Send
    + Sync
    + 'static
{
}

impl<T> Coeff for T where
    T: Clone
        + Eq
        + Ord
        + Hash
        + fmt::Debug
        + fmt::Display
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// a + bω
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Eisenstein<T> {
    pub a: T,
    pub b: T,
}

pub type EisensteinInt = Eisenstein<BigInt>;
pub type Zw = Eisenstein<i64>;

fn c<T: Coeff>(v: i64) -> T {
    T::from_i64(v).expect("small constant")
}

/// Rounds n/d to the nearest integer, ties toward zero. Requires d > 0.
fn round_div<T: Coeff>(n: &T, d: &T) -> T {
    let (q, r) = n.abs().div_rem(d);
    let q = if r.clone() + r > *d { q + T::one() } else { q };
    if n.is_negative() {
        -q
    } else {
        q
    }
}

/// One of the six units (−ω)^j, j = 0..5.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Unit(u8);

impl Unit {
    pub const ONE: Unit = Unit(0);

    pub fn new(j: u32) -> Unit {
        Unit((j % 6) as u8)
    }

    /// The exponent j in (−ω)^j.
    pub fn exponent(self) -> u32 {
        self.0 as u32
    }

    pub fn all() -> impl Iterator<Item = Unit> {
        (0..6).map(Unit::new)
    }

    pub fn inverse(self) -> Unit {
        Unit::new(6 - self.0 as u32)
    }

    pub fn value<T: Coeff>(self) -> Eisenstein<T> {
        let (a, b) = match self.0 {
            0 => (1, 0),
            1 => (0, -1),
            2 => (-1, -1),
            3 => (-1, 0),
            4 => (0, 1),
            _ => (1, 1),
        };
        Eisenstein::new(c(a), c(b))
    }
}

impl Mul for Unit {
    type Output = Unit;
    fn mul(self, o: Unit) -> Unit {
        Unit::new(self.0 as u32 + o.0 as u32)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            0 => "1",
            1 => "-w",
            2 => "w^2",
            3 => "-1",
            4 => "w",
            _ => "-w^2",
        };
        f.write_str(s)
    }
}

/// x = unit · λ^lambda_exp · primary_part, with primary_part ≡ 1 (mod 3).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimaryDecomposition<T: Coeff> {
    pub unit: Unit,
    pub lambda_exp: u32,
    pub primary_part: Eisenstein<T>,
}

impl<T: Coeff> PrimaryDecomposition<T> {
    pub fn reconstruct(&self) -> Eisenstein<T> {
        self.unit.value::<T>() * Eisenstein::lambda().pow(self.lambda_exp) * self.primary_part.clone()
    }
}

impl<T: Coeff> Eisenstein<T> {
    pub fn new(a: T, b: T) -> Self {
        Eisenstein { a, b }
    }

    pub fn from_int(n: T) -> Self {
        Eisenstein::new(n, T::zero())
    }

    pub fn zero() -> Self {
        Eisenstein::new(T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Eisenstein::new(T::one(), T::zero())
    }

    pub fn omega() -> Self {
        Eisenstein::new(T::zero(), T::one())
    }

    /// λ = 1 + 2ω, with λ² = −3.
    pub fn lambda() -> Self {
        Eisenstein::new(T::one(), c(2))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - self.a.clone() * self.b.clone() + self.b.clone() * self.b.clone()
    }

    pub fn conj(&self) -> Self {
        Eisenstein::new(self.a.clone() - self.b.clone(), -self.b.clone())
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// x ≡ 1 (mod 3)
    pub fn is_primary(&self) -> bool {
        let three = c::<T>(3);
        (self.a.clone() - T::one()).mod_floor(&three).is_zero() && self.b.mod_floor(&three).is_zero()
    }

    pub fn divisible_by_lambda(&self) -> bool {
        (self.a.clone() + self.b.clone()).mod_floor(&c(3)).is_zero()
    }

    /// x/λ, assuming λ | x. Uses 1/λ = −λ/3.
    pub fn div_lambda(&self) -> Self {
        let t = self.clone() * Eisenstein::lambda();
        let three = c::<T>(3);
        Eisenstein::new(-(t.a / three.clone()), -(t.b / three))
    }

    pub fn scale(&self, k: &T) -> Self {
        Eisenstein::new(self.a.clone() * k.clone(), self.b.clone() * k.clone())
    }

    pub fn mul_unit(&self, u: Unit) -> Self {
        u.value::<T>() * self.clone()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Eisenstein::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Euclidean division: x = q·y + r with N(r) ≤ ¾N(y).
    pub fn divmod(&self, y: &Self) -> Result<(Self, Self)> {
        if y.is_zero() {
            return domain("division by zero");
        }
        Ok(self.divmod_unchecked(y))
    }

    pub(crate) fn divmod_unchecked(&self, y: &Self) -> (Self, Self) {
        let n = self.clone() * y.conj();
        let ny = y.norm();
        let q = Eisenstein::new(round_div(&n.a, &ny), round_div(&n.b, &ny));
        let r = self.clone() - q.clone() * y.clone();
        (q, r)
    }

    /// Remainder of the Euclidean division. Panics if y = 0.
    pub fn rem_e(&self, y: &Self) -> Self {
        assert!(!y.is_zero(), "remainder by zero");
        self.divmod_unchecked(y).1
    }

    pub fn divides(&self, x: &Self) -> bool {
        if self.is_zero() {
            return x.is_zero();
        }
        let n = x.clone() * self.conj();
        let ny = self.norm();
        n.a.is_multiple_of(&ny) && n.b.is_multiple_of(&ny)
    }

    /// x / y when y divides x exactly.
    pub fn exact_div(&self, y: &Self) -> Option<Self> {
        if y.is_zero() {
            return None;
        }
        let n = self.clone() * y.conj();
        let ny = y.norm();
        let (qa, ra) = n.a.div_rem(&ny);
        let (qb, rb) = n.b.div_rem(&ny);
        if ra.is_zero() && rb.is_zero() {
            Some(Eisenstein::new(qa, qb))
        } else {
            None
        }
    }

    pub fn congruent(&self, other: &Self, m: &Self) -> bool {
        m.divides(&(self.clone() - other.clone()))
    }

    /// The unique (ζ, k, c) with x = ζλ^k c and c ≡ 1 (mod 3).
    pub fn primary_decompose(&self) -> Result<PrimaryDecomposition<T>> {
        if self.is_zero() {
            return domain("primary decomposition of 0");
        }
        let mut x = self.clone();
        let mut k = 0;
        while x.divisible_by_lambda() {
            x = x.div_lambda();
            k += 1;
        }
        for u in Unit::all() {
            let y = x.mul_unit(u);
            if y.is_primary() {
                return Ok(PrimaryDecomposition { unit: u.inverse(), lambda_exp: k, primary_part: y });
            }
        }
        Err(Error::Invariant(format!("no primary associate of {}", x)))
    }

    /// λ^k · (primary part), dropping the unit.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Eisenstein::zero();
        }
        let d = self.primary_decompose().expect("nonzero");
        Eisenstein::lambda().pow(d.lambda_exp) * d.primary_part
    }

    /// The associate of x that is ≡ 1 (mod 3), if x is coprime to λ.
    pub fn primary_associate(&self) -> Option<Self> {
        if self.is_zero() || self.divisible_by_lambda() {
            return None;
        }
        Unit::all().map(|u| self.mul_unit(u)).find(|y| y.is_primary())
    }

    pub fn to_complex(&self) -> Complex64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        Complex64::new(a - b / 2.0, b * 3f64.sqrt() / 2.0)
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> Option<U>) -> Option<Eisenstein<U>> {
        Some(Eisenstein::new(f(&self.a)?, f(&self.b)?))
    }
}

/// gcd of the ideal (x, y), normalized to λ^k times a primary element.
pub fn gcd<T: Coeff>(x: &Eisenstein<T>, y: &Eisenstein<T>) -> Result<Eisenstein<T>> {
    if x.is_zero() && y.is_zero() {
        return domain("gcd(0, 0)");
    }
    let (mut p, mut q) = (x.clone(), y.clone());
    while !q.is_zero() {
        let r = p.rem_e(&q);
        p = q;
        q = r;
    }
    Ok(p.normalized())
}

/// Inverse of x modulo m, or None when (x, m) ≠ 1.
pub fn inverse_mod<T: Coeff>(x: &Eisenstein<T>, m: &Eisenstein<T>) -> Option<Eisenstein<T>> {
    if m.is_zero() {
        return None;
    }
    if m.is_unit() {
        return Some(Eisenstein::zero());
    }
    let (mut r0, mut r1) = (m.clone(), x.rem_e(m));
    let (mut s0, mut s1) = (Eisenstein::<T>::zero(), Eisenstein::<T>::one());
    while !r1.is_zero() {
        let (q, r) = r0.divmod_unchecked(&r1);
        let s = (s0 - q * s1.clone()).rem_e(m);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if !r0.is_unit() {
        return None;
    }
    Some((s0 * r0.conj()).rem_e(m))
}

impl<T: Coeff> Add for Eisenstein<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Eisenstein::new(self.a + o.a, self.b + o.b)
    }
}

impl<T: Coeff> Sub for Eisenstein<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Eisenstein::new(self.a - o.a, self.b - o.b)
    }
}

impl<T: Coeff> Neg for Eisenstein<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Eisenstein::new(-self.a, -self.b)
    }
}

impl<T: Coeff> Mul for Eisenstein<T> {
    type Output = Self;
    // ω² = −1 − ω
    fn mul(self, o: Self) -> Self {
        let bd = self.b.clone() * o.b.clone();
        Eisenstein::new(
            self.a.clone() * o.a.clone() - bd.clone(),
            self.a * o.b + self.b * o.a - bd,
        )
    }
}

impl<T: Coeff> fmt::Display for Eisenstein<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}*w", self.a, self.b.abs())
        } else {
            write!(f, "{}+{}*w", self.a, self.b)
        }
    }
}

impl<T: Coeff> fmt::Debug for Eisenstein<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Coeff> FromStr for Eisenstein<T> {
    type Err = Error;

    /// Accepts "a+b*w", "a-b*w", "a+-b*w", a bare integer "a", and the
    /// shorthands "a+bw", "bw", "w", "-w", "a-w".
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|ch| !ch.is_whitespace()).collect();
        let bad = || Error::Parse(format!("expected \"a+b*w\", got {:?}", s));
        let int = |t: &str| t.parse::<T>().map_err(|_| bad());
        // a coefficient of w, where "", "+" and "-" stand for ±1
        let coeff = |t: &str| match t.strip_prefix('+').unwrap_or(t) {
            "" => Ok(T::one()),
            "-" => Ok(-T::one()),
            r => int(r),
        };
        let Some(body) = s.strip_suffix('w') else {
            return Ok(Eisenstein::from_int(int(&s)?));
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        let bytes = body.as_bytes();
        let split = (1..bytes.len()).rev().find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1].is_ascii_digit());
        match split {
            Some(i) => Ok(Eisenstein::new(int(&body[..i])?, coeff(&body[i..])?)),
            None => Ok(Eisenstein::new(T::zero(), coeff(body)?)),
        }
    }
}

impl EisensteinInt {
    /// Narrow to `i64` coordinates for the summation kernels, which require
    /// |a|, |b| < 2³¹ so that products of coordinates fit.
    pub fn to_small(&self) -> Result<Zw> {
        let lim = 1i64 << 31;
        let narrow = |v: &BigInt| v.to_i64().filter(|x| x.abs() < lim);
        self.map(narrow)
            .ok_or_else(|| Error::Resource(format!("{} exceeds the i64 kernel range", self)))
    }
}

impl Zw {
    pub const fn c(a: i64, b: i64) -> Zw {
        Eisenstein { a, b }
    }

    pub fn to_big(&self) -> EisensteinInt {
        Eisenstein::new(BigInt::from(self.a), BigInt::from(self.b))
    }
}

/// All elements x with lo < N(x) ≤ hi, sorted by (norm, a, b).
pub fn elements_with_norm_in(lo: i64, hi: i64) -> Vec<Zw> {
    let mut out = Vec::new();
    if hi <= 0 || hi <= lo {
        return out;
    }
    // N(a + bω) = (a − b/2)² + 3b²/4, so |b| ≤ √(4hi/3)
    let bmax = ((4.0 * hi as f64 / 3.0).sqrt() as i64) + 1;
    for b in -bmax..=bmax {
        let disc = 4 * hi - 3 * b * b;
        if disc < 0 {
            continue;
        }
        let s = (disc as f64).sqrt() as i64 + 1;
        for a in (b - s) / 2 - 1..=(b + s) / 2 + 1 {
            let n = Zw::c(a, b).norm();
            if n > lo && n <= hi {
                out.push(Zw::c(a, b));
            }
        }
    }
    out.sort_by_key(|x| (x.norm(), x.a, x.b));
    out
}

/// An element num/λ^lam_exp of λ^{−lam_exp}Z[ω].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DualElement {
    pub num: Zw,
    pub lam_exp: u32,
}

impl DualElement {
    pub fn integral(num: Zw) -> Self {
        DualElement { num, lam_exp: 0 }
    }

    pub fn new(num: Zw, lam_exp: u32) -> Self {
        DualElement { num, lam_exp }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cancel common λ factors between numerator and denominator.
    pub fn reduced(&self) -> Self {
        let mut d = *self;
        while d.lam_exp > 0 && !d.num.is_zero() && d.num.divisible_by_lambda() {
            d.num = d.num.div_lambda();
            d.lam_exp -= 1;
        }
        if d.num.is_zero() {
            d.lam_exp = 0;
        }
        d
    }
}

impl fmt::Display for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lam_exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/l^{}", self.num, self.lam_exp)
        }
    }
}

/// Accepts "x", "x/l^k" and "(x)/l^k", the format `Display` writes.
impl FromStr for DualElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|ch| !ch.is_whitespace()).collect();
        let Some((num, den)) = s.rsplit_once('/') else {
            return Ok(DualElement::integral(s.parse()?));
        };
        let k = den
            .strip_prefix("l^")
            .and_then(|k| k.parse().ok())
            .or_else(|| (den == "l").then_some(1))
            .ok_or_else(|| Error::Parse(format!("expected \"x/l^k\", got {:?}", s)))?;
        let num = num.strip_prefix('(').and_then(|n| n.strip_suffix(')')).unwrap_or(num);
        Ok(DualElement::new(num.parse()?, k))
    }
}
