//! The smoothed prime sum split by Vaughan's identity into P₁ and the dyadic
//! cells of P₂, evaluated as finite sums and compared with the direct value.

use std::collections::HashMap;

use num_complex::Complex64;

use super::constraint::ProgressionConstraint;
use super::partition::DyadicPartition;
use super::source::CoefficientSource;
use super::sums::{norm_window, smoothed_prime_sum, weight_at};
use super::weight::SmoothWeight;
use crate::arith::{mobius, von_mangoldt};
use crate::error::{domain, Result};
use crate::expsums::csum::ComplexSum;
use crate::ring::{elements_with_norm_in, Zw};

/// Rejects (X, R, S) outside S < X/10000 and 10000X < RS < 10⁷X.
pub fn check_rs_condition(x: f64, r: f64, s: f64) -> Result<()> {
    if !(r > 0.0 && s > 0.0) {
        return domain(format!("R and S must be positive, got R = {}, S = {}", r, s));
    }
    if !(s < x / 10000.0) {
        return domain(format!("need S < X/10000, got S = {} with X = {}", s, x));
    }
    let rs = r * s;
    if !(10000.0 * x < rs && rs < 1e7 * x) {
        return domain(format!("need 10000X < RS < 10000000X, got RS = {} with X = {}", rs, x));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct DyadicCell {
    pub m_index: i32,
    pub n_index: i32,
    pub value: Complex64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionReport {
    /// The smoothed prime sum, restricted to N(λ³ν) > S in general mode.
    pub lhs: Complex64,
    pub p1: Complex64,
    pub p2_cells: Vec<DyadicCell>,
    pub p2_total: Complex64,
    /// The third Vaughan sum; zero under the (R, S) condition.
    pub third: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
    pub terms: u64,
}

/// Primary elements of norm ≤ hi with μ and Λ, sorted by norm.
struct Primaries {
    elems: Vec<Zw>,
    norms: Vec<i64>,
}

impl Primaries {
    fn new(hi: i64) -> Self {
        let elems: Vec<Zw> = elements_with_norm_in(0, hi).into_iter().filter(|x| x.is_primary()).collect();
        let norms = elems.iter().map(|x| x.norm()).collect();
        Primaries { elems, norms }
    }

    /// Elements with lo < N ≤ hi.
    fn between(&self, lo: i64, hi: i64) -> &[Zw] {
        let i = self.norms.partition_point(|&n| n <= lo);
        let j = self.norms.partition_point(|&n| n <= hi);
        &self.elems[i..j.max(i)]
    }
}

struct Window<'a> {
    x: f64,
    lo: i64,
    hi: i64,
    constraint: &'a ProgressionConstraint,
    src: HashMap<Zw, Complex64>,
    w: &'a SmoothWeight,
}

impl Window<'_> {
    /// src(n) W(N(n)/(27X)) on the progression, 0 elsewhere.
    fn term(&self, n: Zw) -> Complex64 {
        if !self.constraint.matches(n) {
            return Complex64::new(0.0, 0.0);
        }
        match self.src.get(&n) {
            Some(&v) => v * weight_at(self.x, self.w, n),
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// Σ_c term(ac) over primary c.
    fn inner(&self, p: &Primaries, a: Zw, out: &mut ComplexSum) {
        let na = a.norm();
        for &c in p.between(self.lo / na, self.hi / na) {
            let t = self.term(a * c);
            if t != Complex64::new(0.0, 0.0) {
                out.add(t);
            }
        }
    }
}

/// Decomposition under the (R, S) condition. With S < X/10000 every term of
/// the smoothed sum has N(ν) > S, and RS > 10000X empties the third sum.
pub fn vaughan_decomposition_check(
    x: f64,
    r: f64,
    s: f64,
    constraint: &ProgressionConstraint,
    src: &CoefficientSource,
    w: &SmoothWeight,
    u: &DyadicPartition,
) -> Result<DecompositionReport> {
    check_rs_condition(x, r, s)?;
    decompose(x, r, s, constraint, src, w, u, false)
}

/// The same identity for any R, S ≥ 1, keeping the third sum and the
/// restriction N(λ³ν) > S on the left.
pub fn vaughan_decomposition_general(
    x: f64,
    r: f64,
    s: f64,
    constraint: &ProgressionConstraint,
    src: &CoefficientSource,
    w: &SmoothWeight,
    u: &DyadicPartition,
) -> Result<DecompositionReport> {
    if !(r >= 1.0 && s >= 1.0) {
        return domain(format!("need R, S ≥ 1, got R = {}, S = {}", r, s));
    }
    decompose(x, r, s, constraint, src, w, u, true)
}

#[allow(clippy::too_many_arguments)]
fn decompose(
    x: f64,
    r: f64,
    s: f64,
    constraint: &ProgressionConstraint,
    src: &CoefficientSource,
    w: &SmoothWeight,
    u: &DyadicPartition,
    general: bool,
) -> Result<DecompositionReport> {
    if !(x > 0.0) {
        return domain(format!("X must be positive, got {}", x));
    }
    let (lo, hi) = norm_window(x, w);
    let p = Primaries::new(hi);
    let window: Vec<Zw> = p.between(lo, hi).iter().copied().filter(|&n| constraint.matches(n)).collect();
    let win = Window { x, lo, hi, constraint, src: src.table(&window), w };

    let mut lhs = ComplexSum::new();
    if general {
        for &n in &window {
            if n.norm() as f64 > s {
                let lam = von_mangoldt(&n)?;
                if lam != 0.0 {
                    lhs.add(win.term(n) * lam);
                }
            }
        }
    } else {
        lhs.add(smoothed_prime_sum(x, constraint, src, w)?);
    }

    let all = p.between(0, hi);
    let mu: Vec<i32> = all.iter().map(mobius).collect::<Result<_>>()?;
    let lam: Vec<f64> = all.iter().map(von_mangoldt).collect::<Result<_>>()?;

    // P₁ = Σ_{N(a) ≤ R} μ(a) Σ_b log N(b) term(ab)
    let mut p1 = ComplexSum::new();
    for (i, &a) in all.iter().enumerate() {
        if mu[i] == 0 || a.norm() as f64 > r {
            continue;
        }
        let na = a.norm();
        for &b in p.between(lo / na, hi / na) {
            let t = win.term(a * b);
            if t != Complex64::new(0.0, 0.0) {
                p1.add(t * (mu[i] as f64 * (b.norm() as f64).ln()));
            }
        }
    }

    // P₂ over dyadic cells: μ(a)Λ(b) U(N(a)/M) U(N(b)/N) term(abc)
    let mut cells: HashMap<(i32, i32), ComplexSum> = HashMap::new();
    let mut third = ComplexSum::new();
    let mut terms = p1.terms();
    for (i, &a) in all.iter().enumerate() {
        if mu[i] == 0 {
            continue;
        }
        let na = a.norm();
        for (k, &b) in p.between(0, hi / na).iter().enumerate() {
            let lb = lam[k];
            if lb == 0.0 {
                continue;
            }
            let nb = b.norm();
            let (a_small, b_small) = (na as f64 <= r, nb as f64 <= s);
            if !(a_small && b_small) && !(general && !a_small && !b_small) {
                continue;
            }
            let mut c_sum = ComplexSum::new();
            win.inner(&p, a * b, &mut c_sum);
            if c_sum.terms() == 0 {
                continue;
            }
            terms += c_sum.terms();
            let v = c_sum.value() * (mu[i] as f64 * lb);
            if !a_small {
                third.add(v);
                continue;
            }
            for jm in u.scale_indices(na as f64, na as f64) {
                let um = u.u(na as f64 / DyadicPartition::scale(jm));
                if um == 0.0 {
                    continue;
                }
                for jn in u.scale_indices(nb as f64, nb as f64) {
                    let un = u.u(nb as f64 / DyadicPartition::scale(jn));
                    if un != 0.0 {
                        cells.entry((jm, jn)).or_default().add(v * (um * un));
                    }
                }
            }
        }
    }

    let mut keys: Vec<(i32, i32)> = cells.keys().copied().collect();
    keys.sort();
    let mut p2 = ComplexSum::new();
    let p2_cells: Vec<DyadicCell> = keys
        .into_iter()
        .map(|k| {
            let value = cells[&k].value();
            p2.merge(&cells[&k]);
            DyadicCell { m_index: k.0, n_index: k.1, value }
        })
        .collect();
    let (lhs, p1, p2_total, third) = (lhs.value(), p1.value(), p2.value(), third.value());
    let rhs = p1 - p2_total + third;
    Ok(DecompositionReport { lhs, p1, p2_cells, p2_total, third, rhs, residual: (lhs - rhs).norm(), terms })
}
