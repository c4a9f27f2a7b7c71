//! The cubic large sieve bilinear forms and the additive-character layer of
//! the δ-method.
//!
//! Both forms use the symbol (d/c)₃ with c primary and d arbitrary, which is
//! defined for every d, so the dual form is the bilinear form paired with Ω.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::mobius;
use crate::error::{domain, Error, Result};
use crate::expsums::csum::{e_frac, ComplexSum};
use crate::expsums::ramanujan::ramanujan_closed;
use crate::residue::ResidueSystem;
use crate::ring::{elements_with_norm_in, Zw};
use crate::symbol::{symbol_unchecked, ROOTS};

/// Largest #d · #c handled by one symbol table.
pub const DEFAULT_PAIR_CAP: usize = 50_000_000;

/// All d with M < N(d) ≤ 2M.
pub fn d_shell(m: f64) -> Vec<Zw> {
    elements_with_norm_in(m.floor() as i64, (2.0 * m).floor() as i64)
}

/// Primary squarefree c with N < N(c) ≤ 2N.
pub fn squarefree_moduli(n: f64) -> Vec<Zw> {
    elements_with_norm_in(n.floor() as i64, (2.0 * n).floor() as i64)
        .into_iter()
        .filter(|c| c.is_primary() && mobius(c).map(|m| m != 0).unwrap_or(false))
        .collect()
}

fn norm2(v: &[(Zw, Complex64)]) -> f64 {
    v.iter().map(|(_, z)| z.norm_sqr()).sum()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SieveInstance {
    pub m: f64,
    pub n: f64,
    psi: Vec<(Zw, Complex64)>,
    omega: Option<Vec<(Zw, Complex64)>>,
}

impl SieveInstance {
    /// Ψ must sit on primary squarefree c with N(c) ∼ N.
    pub fn new(m: f64, n: f64, psi: Vec<(Zw, Complex64)>) -> Result<Self> {
        if !(m >= 0.5 && n >= 0.5) {
            return domain(format!("M, N must be at least 1/2, got M = {}, N = {}", m, n));
        }
        for &(c, _) in &psi {
            let nc = c.norm() as f64;
            if !c.is_primary() || mobius(&c)? == 0 || !(n < nc && nc <= 2.0 * n) {
                return domain(format!("Ψ entry at {} is not a primary squarefree c with N(c) ∼ {}", c, n));
            }
        }
        Ok(SieveInstance { m, n, psi, omega: None })
    }

    /// Unit-modulus Ψ with uniform phases on every admissible c.
    pub fn random(m: f64, n: f64, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = squarefree_moduli(n)
            .into_iter()
            .map(|c| (c, Complex64::from_polar(1.0, rng.gen::<f64>() * std::f64::consts::TAU)))
            .collect();
        Self::new(m, n, psi)
    }

    pub fn with_omega(mut self, omega: Vec<(Zw, Complex64)>) -> Result<Self> {
        for &(d, _) in &omega {
            let nd = d.norm() as f64;
            if !(self.m < nd && nd <= 2.0 * self.m) {
                return domain(format!("Ω entry at {} does not have N(d) ∼ {}", d, self.m));
            }
        }
        self.omega = Some(omega);
        Ok(self)
    }

    pub fn psi(&self) -> &[(Zw, Complex64)] {
        &self.psi
    }

    pub fn psi_norm2(&self) -> f64 {
        norm2(&self.psi)
    }

    pub fn omega_norm2(&self) -> f64 {
        self.omega.as_deref().map(norm2).unwrap_or(0.0)
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for e in &mut out.psi {
            e.1 *= s;
        }
        out
    }

    /// M^{1/3}(M + N)
    pub fn hb_scale(&self) -> f64 {
        self.m.cbrt() * (self.m + self.n)
    }

    /// M^{1/6}(M^{1/2} + N^{1/2})
    pub fn dual_scale(&self) -> f64 {
        self.m.powf(1.0 / 6.0) * (self.m.sqrt() + self.n.sqrt())
    }
}

/// (d/c)₃ for every d in the M-shell and every c in a list, as exponents
/// with 3 standing for 0.
#[derive(Clone, Debug)]
pub struct SymbolTable {
    pub ds: Vec<Zw>,
    pub cs: Vec<Zw>,
    chi: Vec<u8>,
}

impl SymbolTable {
    pub fn new(m: f64, cs: Vec<Zw>, cap: usize) -> Result<Self> {
        let ds = d_shell(m);
        if ds.len().saturating_mul(cs.len()) > cap {
            return Err(Error::Resource(format!("{} × {} symbol pairs exceed the cap {}", ds.len(), cs.len(), cap)));
        }
        let chi = ds
            .par_iter()
            .flat_map_iter(|d| cs.iter().map(move |c| symbol_unchecked(d, c).exponent().unwrap_or(3)))
            .collect();
        Ok(SymbolTable { ds, cs, chi })
    }

    fn coeffs(&self, entries: &[(Zw, Complex64)], keys: &[Zw]) -> Vec<Complex64> {
        let mut v = vec![Complex64::new(0.0, 0.0); keys.len()];
        for &(x, z) in entries {
            if let Ok(i) = keys.binary_search_by_key(&(x.norm(), x.a, x.b), |y| (y.norm(), y.a, y.b)) {
                v[i] += z;
            }
        }
        v
    }

    /// L_d = Σ_c Ψ_c (d/c)₃ for each d in the shell.
    pub fn linear_forms(&self, psi: &[(Zw, Complex64)]) -> Vec<Complex64> {
        let p = self.coeffs(psi, &self.cs);
        let k = self.cs.len();
        (0..self.ds.len())
            .map(|i| {
                let row = &self.chi[i * k..(i + 1) * k];
                let mut s = ComplexSum::new();
                for (j, &e) in row.iter().enumerate() {
                    if e != 3 && p[j] != Complex64::new(0.0, 0.0) {
                        s.add(ROOTS[e as usize] * p[j]);
                    }
                }
                s.value()
            })
            .collect()
    }

    pub fn bilinear_lhs(&self, psi: &[(Zw, Complex64)]) -> f64 {
        let mut s = ComplexSum::new();
        for l in self.linear_forms(psi) {
            s.add(Complex64::new(l.norm_sqr(), 0.0));
        }
        s.re()
    }

    pub fn dual(&self, omega: &[(Zw, Complex64)], psi: &[(Zw, Complex64)]) -> Complex64 {
        let o = self.coeffs(omega, &self.ds);
        let mut s = ComplexSum::new();
        for (od, l) in o.iter().zip(self.linear_forms(psi)) {
            s.add(od * l);
        }
        s.value()
    }
}

fn table_for(inst: &SieveInstance) -> Result<SymbolTable> {
    let mut cs: Vec<Zw> = inst.psi.iter().map(|e| e.0).collect();
    cs.sort_by_key(|x| (x.norm(), x.a, x.b));
    cs.dedup();
    SymbolTable::new(inst.m, cs, DEFAULT_PAIR_CAP)
}

/// Σ_{N(d) ∼ M} |Σ_c μ²(c) Ψ_c (d/c)₃|², d over all of Z[ω].
pub fn bilinear_lhs(inst: &SieveInstance) -> Result<f64> {
    if inst.psi.is_empty() {
        return domain("Ψ is empty");
    }
    Ok(table_for(inst)?.bilinear_lhs(&inst.psi))
}

/// LHS / (M^{1/3}(M+N)‖Ψ‖²), or None when the d-shell or Ψ is empty.
pub fn hb_ratio(inst: &SieveInstance) -> Result<Option<f64>> {
    if inst.psi.is_empty() || d_shell(inst.m).is_empty() || inst.psi_norm2() == 0.0 {
        return Ok(None);
    }
    Ok(Some(bilinear_lhs(inst)? / (inst.hb_scale() * inst.psi_norm2())))
}

/// Σ_d Σ_c Ω_d μ²(c) Ψ_c (d/c)₃.
pub fn dual_bilinear(inst: &SieveInstance) -> Result<Complex64> {
    let Some(omega) = inst.omega.as_deref() else {
        return domain("the dual form needs Ω");
    };
    Ok(table_for(inst)?.dual(omega, &inst.psi))
}

/// One (M, N, seed) row of the large sieve experiment.
#[derive(Clone, Debug, PartialEq)]
pub struct GridRow {
    pub m: f64,
    pub n: f64,
    pub seed: u64,
    pub lhs: Option<f64>,
    pub ratio: Option<f64>,
}

/// Per-cell summary: rows plus the two asserted properties.
#[derive(Clone, Debug, PartialEq)]
pub struct CellReport {
    pub rows: Vec<GridRow>,
    pub max_ratio: Option<f64>,
    /// max |ratio(sΨ) − ratio(Ψ)| / ratio(Ψ) over seeds
    pub scaling_defect: f64,
    /// max of |dual|² − ‖Ω‖²·LHS, relative to ‖Ω‖²·LHS; ≤ 0 up to rounding
    pub cauchy_schwarz_excess: f64,
}

/// Runs `seeds` random Ψ (and Ω from an independent stream) on one cell,
/// sharing the symbol table.
pub fn run_cell(m: f64, n: f64, seeds: std::ops::Range<u64>) -> Result<CellReport> {
    let cs = squarefree_moduli(n);
    let table = SymbolTable::new(m, cs, DEFAULT_PAIR_CAP)?;
    let empty = table.ds.is_empty() || table.cs.is_empty();
    let scale = Complex64::from_polar(3.5, 0.7);
    let mut rows = Vec::new();
    let (mut max_ratio, mut scaling_defect, mut cs_excess) = (None::<f64>, 0f64, f64::NEG_INFINITY);
    for seed in seeds {
        if empty {
            rows.push(GridRow { m, n, seed, lhs: None, ratio: None });
            continue;
        }
        let inst = SieveInstance::random(m, n, seed)?;
        let lhs = table.bilinear_lhs(&inst.psi);
        let ratio = lhs / (inst.hb_scale() * inst.psi_norm2());
        let scaled = inst.scaled(scale);
        let ratio_s = table.bilinear_lhs(&scaled.psi) / (scaled.hb_scale() * scaled.psi_norm2());
        scaling_defect = scaling_defect.max((ratio_s - ratio).abs() / ratio.max(f64::MIN_POSITIVE));
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let omega: Vec<(Zw, Complex64)> = table
            .ds
            .iter()
            .map(|&d| (d, Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)))
            .collect();
        let dual = table.dual(&omega, &inst.psi);
        let bound = norm2(&omega) * lhs;
        cs_excess = cs_excess.max((dual.norm_sqr() - bound) / bound.max(f64::MIN_POSITIVE));
        max_ratio = Some(max_ratio.map_or(ratio, |r| r.max(ratio)));
        rows.push(GridRow { m, n, seed, lhs: Some(lhs), ratio: Some(ratio) });
    }
    Ok(CellReport { rows, max_ratio, scaling_defect, cauchy_schwarz_excess: cs_excess.max(-1.0) })
}

/// (1/N(q)) Σ_{j mod q} ě(ja/(λq)), the indicator of q | a.
///
/// ě is trivial on λ⁻¹Z[ω], so the characters of Z[ω]/q are j ↦ ě(jh/(λq)).
pub fn delta_additive(a: Zw, q: Zw) -> Result<Complex64> {
    delta_with_denominator(a, q, Zw::lambda() * q)
}

/// The same average with ě(ja/q); it detects q | λa rather than q | a.
pub fn delta_additive_literal(a: Zw, q: Zw) -> Result<Complex64> {
    delta_with_denominator(a, q, q)
}

fn delta_with_denominator(a: Zw, q: Zw, den: Zw) -> Result<Complex64> {
    let rs = ResidueSystem::new(q)?;
    let mut s = ComplexSum::new();
    for j in rs.iter() {
        s.add(e_frac(j * a, den));
    }
    Ok(s.value() / q.norm() as f64)
}

/// (c, Σ*_{σ mod c} σ(a)) for primary c with N(c) ≤ C, the primitive
/// additive characters summed in closed form.
pub fn delta_primitive_layer(a: Zw, cmax: f64) -> Result<Vec<(Zw, i64)>> {
    if !(cmax >= 1.0) {
        return domain(format!("C must be at least 1, got {}", cmax));
    }
    elements_with_norm_in(0, cmax.floor() as i64)
        .into_iter()
        .filter(|c| c.is_primary())
        .map(|c| {
            let v = ramanujan_closed(c, a)? * c.norm();
            Ok((c, v.to_integer()))
        })
        .collect()
}
