//! Invariant suites behind `verify-all`, each sized from one norm cap.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{mobius, omega_count};
use crate::error::Result;
use crate::expsums::gauss::{cube_residual, gauss_direct_many, gauss_fast, gauss_local_table, gauss_prime};
use crate::expsums::kloosterman::{weil_bound, Cusp, KloostermanKernel};
use crate::expsums::psi::{unpack1_sides, unpack2_sides};
use crate::expsums::ramanujan::{ramanujan_closed, ramanujan_direct, OrthogonalityTable};
use crate::factor::primes_up_to_norm_cached;
use crate::largesieve::{delta_additive, run_cell};
use crate::residue::ResidueSystem;
use crate::ring::{elements_with_norm_in, gcd, DualElement, Unit, Zw};
use crate::sieve::{
    vaughan_decomposition_check, vaughan_terms, CoefficientSource, DyadicPartition, ProgressionConstraint,
    SmoothWeight,
};
use crate::symbol::{cubic_symbol, cubic_symbol_prime_oracle};

pub const DEFAULT_CAP_NORM: i64 = 1000;

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    /// Largest modulus norm the suites sweep; other sizes scale from it.
    pub cap_norm: i64,
    pub seed: u64,
    /// Test hook: negate g(ϖ) inside the named suite.
    pub fault: Option<String>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { cap_norm: DEFAULT_CAP_NORM, seed: 0, fault: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub checks: u64,
    pub failures: u64,
    pub max_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub cap_norm: i64,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn failing(&self) -> Vec<&str> {
        self.suites.iter().filter(|s| !s.passed).map(|s| s.name.as_str()).collect()
    }
}

/// Running tally of one suite. Residuals are reported relative to their
/// tolerance, so a check passes iff its residual is ≤ 1.
struct Tally {
    name: &'static str,
    checks: u64,
    failures: u64,
    worst: f64,
    first: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, checks: 0, failures: 0, worst: 0.0, first: None }
    }

    fn within(&mut self, err: f64, tol: f64, what: impl FnOnce() -> String) {
        self.checks += 1;
        let r = if tol > 0.0 { err / tol } else if err == 0.0 { 0.0 } else { f64::INFINITY };
        self.worst = self.worst.max(r);
        if !(r <= 1.0) {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn holds(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.within(if ok { 0.0 } else { 1.0 }, 0.0, what);
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name.to_string(),
            passed: self.failures == 0 && self.checks > 0,
            checks: self.checks,
            failures: self.failures,
            max_residual: self.worst,
            first_failure: self.first,
        }
    }
}

fn primaries(lo: i64, hi: i64) -> Vec<Zw> {
    elements_with_norm_in(lo, hi).into_iter().filter(|c| c.is_primary()).collect()
}

fn random_element(rng: &mut ChaCha8Rng, bound: i64) -> Zw {
    Zw::c(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

fn random_primary(rng: &mut ChaCha8Rng, max_norm: i64) -> Zw {
    let b = ((max_norm as f64).sqrt() as i64 / 3).max(1);
    loop {
        let x = Zw::c(3 * rng.gen_range(-b..=b) + 1, 3 * rng.gen_range(-b..=b));
        if x.norm() <= max_norm {
            return x;
        }
    }
}

fn residues(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("residues");
    for c in elements_with_norm_in(0, (cfg.cap_norm / 5).clamp(10, 400)) {
        let rs = ResidueSystem::new(c)?;
        t.holds(rs.len() as i64 == c.norm(), || format!("{} has {} residues", c, rs.len()));
        for (i, x) in rs.iter().enumerate() {
            let y = x + c * Zw::c(2, -1);
            t.holds(rs.index(y) == i && rs.reduce(y) == x, || format!("{} mod {} not canonical", y, c));
        }
    }
    Ok(t.finish())
}

fn reciprocity(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("reciprocity");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 1);
    let mut done = 0;
    while done < 200 {
        let (a, b) = (random_primary(&mut rng, cfg.cap_norm), random_primary(&mut rng, cfg.cap_norm));
        if !gcd(&a, &b)?.is_one() {
            continue;
        }
        done += 1;
        let (x, y) = (cubic_symbol(&a, &b)?, cubic_symbol(&b, &a)?);
        t.holds(x == y, || format!("({}/{}) = {} but ({}/{}) = {}", a, b, x, b, a, y));
    }
    Ok(t.finish())
}

fn symbol_oracle(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("symbol_oracle");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 2);
    for p in primes_up_to_norm_cached(cfg.cap_norm as f64) {
        for _ in 0..5 {
            let a = random_element(&mut rng, 50);
            let (x, y) = (cubic_symbol(&a, &p)?, cubic_symbol_prime_oracle(&a, &p)?);
            t.holds(x == y, || format!("({}/{}): {} vs power residue {}", a, p, x, y));
        }
    }
    Ok(t.finish())
}

fn gauss_laws(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("gauss_laws");
    let one = DualElement::integral(Zw::one());
    for c in primaries(0, cfg.cap_norm) {
        let shifts = [one, DualElement::integral(Zw::c(2, 1)), DualElement::new(Zw::c(1, 1), 1)];
        let direct = gauss_direct_many(&shifts, c, i64::MAX)?;
        let root = (c.norm() as f64).sqrt();
        for (mu, d) in shifts.iter().zip(&direct) {
            let f = gauss_fast(*mu, c)?.value();
            t.within((f - d.value()).norm(), 1e-9 * root.max(1.0), || format!("g({}, {}) fast vs direct", mu, c));
        }
        let want = if mobius(&c)? == 0 { 0.0 } else { root };
        t.within((direct[0].value().norm() - want).abs(), 1e-6, || format!("|g(1, {})|", c));
    }
    Ok(t.finish())
}

fn cuberel(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("cuberel");
    let flip = cfg.fault.as_deref() == Some("cuberel");
    for w in primes_up_to_norm_cached(cfg.cap_norm as f64) {
        let mut g = gauss_prime(w)?;
        if flip {
            g = -g;
        }
        let n = w.norm() as f64;
        t.within(cube_residual(w, g), 1e-6 * n.powf(1.5), || format!("g({})³ + ϖ²ϖ̄", w));
    }
    Ok(t.finish())
}

fn local_table(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("local_table");
    for w in primes_up_to_norm_cached(50.0).into_iter().take(3) {
        for l in 0..=4u32 {
            let q = w.pow(l);
            if q.norm() > cfg.cap_norm.max(50) * 10 {
                break;
            }
            let shifts: Vec<DualElement> = (0..=3).map(|k| DualElement::integral(w.pow(k))).collect();
            let direct = gauss_direct_many(&shifts, q, i64::MAX)?;
            for (k, d) in direct.iter().enumerate() {
                let v = gauss_local_table(w, Some(k as u32), l)?;
                let scale = (q.norm() as f64).max(1.0);
                t.within((v - d.value()).norm(), 1e-8 * scale, || format!("g(ϖ^{}, ϖ^{}) at ϖ = {}", k, l, w));
            }
        }
    }
    Ok(t.finish())
}

fn ramanujan(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("ramanujan");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 3);
    for r in primaries(0, cfg.cap_norm / 2) {
        for _ in 0..3 {
            let k = random_element(&mut rng, 20);
            let c = ramanujan_closed(r, k)?;
            let d = ramanujan_direct(r, k)?;
            let exact = Complex64::new(*c.numer() as f64 / *c.denom() as f64, 0.0);
            t.within((exact - d).norm(), 1e-9, || format!("ψ̂_{}({})", r, k));
        }
    }
    Ok(t.finish())
}

/// The Weil bound where it is claimed: the (σ, ξ) sums, primary c, integral
/// m, n with (m, n, c) = 1. The (σ, σ) sums are left out; see the README.
fn weil(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("weil");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 4);
    // at the inert prime 2 the bound fails from 2⁴ | c on (|K| up to 2^{3/2}√N(c) at c = −32)
    let wild = Zw::c(16, 0);
    for c in primaries(0, (cfg.cap_norm / 2).max(9)).into_iter().filter(|c| !wild.divides(c)) {
        let kernel = KloostermanKernel::new(Cusp::SigmaXi, c, i64::MAX)?;
        for _ in 0..3 {
            let (m, n) = coprime_pair(&mut rng, c)?;
            let k = kernel.eval(m, n)?;
            let b = weil_bound(m, n, c)?;
            t.within(k.value().norm(), b + k.tolerance(), || format!("K({}, {}, {}) = {}", m, n, c, k.value()));
        }
    }
    Ok(t.finish())
}

/// Integral (m, n) with (m, n, c) = 1.
pub fn coprime_pair(rng: &mut ChaCha8Rng, c: Zw) -> Result<(DualElement, DualElement)> {
    loop {
        let (m, n) = (random_element(rng, 9), random_element(rng, 9));
        if gcd(&gcd(&m, &n).unwrap_or(Zw::zero()), &c)?.is_one() {
            return Ok((DualElement::integral(m), DualElement::integral(n)));
        }
    }
}

fn unpack(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("unpack");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 5);
    let rs = primaries(0, (cfg.cap_norm / 20).clamp(1, 30));
    for i in 0..40 {
        let r = rs[i % rs.len()];
        let (eta, nu) = (random_element(&mut rng, 6), random_element(&mut rng, 6));
        let zeta = Unit::new(rng.gen_range(0..6));
        let (l, rr) = unpack1_sides(6, r, eta, nu, zeta)?;
        t.within((l - rr).norm(), 1e-9 * l.norm().max(1.0), || format!("ψ♯ at r = {}, η = {}, ν = {}", r, eta, nu));
        let (l, rr) = unpack2_sides(rng.gen_range(0..4), r, eta, nu)?;
        t.within((l - rr).norm(), 1e-9 * l.norm().max(1.0), || format!("ψ⋆ at r = {}, η = {}, ν = {}", r, eta, nu));
    }
    Ok(t.finish())
}

fn orthogonality(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("orthogonality");
    for q in primaries(0, (cfg.cap_norm / 10).clamp(1, 300)) {
        for l in 0..=2 {
            let table = OrthogonalityTable::new(l, q)?;
            let n = table.modulus();
            for h in ResidueSystem::new(n)?.iter() {
                let v = table.eval(h)?;
                let want = if h.is_zero() { 1 } else { 0 };
                t.holds(v == want.into(), || format!("orthogonality at q = {}, ℓ = {}, h = {}: {}", q, l, h, v));
            }
        }
    }
    Ok(t.finish())
}

fn vaughan(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("vaughan");
    let grid = [1.0, 10.0, 100.0];
    for nu in primaries(0, cfg.cap_norm) {
        let lam = crate::arith::von_mangoldt(&nu)?;
        for r in grid {
            for s in grid {
                let want = if nu.norm() as f64 > s { lam } else { 0.0 };
                let v = vaughan_terms(nu, r, s)?.combined();
                t.within((v - want).abs(), 1e-9, || format!("Vaughan at ν = {}, R = {}, S = {}", nu, r, s));
            }
        }
    }
    Ok(t.finish())
}

fn decomposition(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("decomposition");
    let x = (cfg.cap_norm as f64 / 5.0).clamp(10.0, 200.0);
    let s = x / 20000.0;
    let r = 1e5 * x / s;
    for src in [CoefficientSource::constant(1.0), CoefficientSource::GaussProxy] {
        let rep = vaughan_decomposition_check(
            x,
            r,
            s,
            &ProgressionConstraint::trivial(),
            &src,
            &SmoothWeight::default(),
            &DyadicPartition,
        )?;
        t.within(rep.residual, 1e-6, || format!("decomposition at X = {} with {}", x, src));
    }
    Ok(t.finish())
}

fn partition(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("partition");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 6);
    let p = DyadicPartition;
    for _ in 0..2000 {
        let y = 10f64.powf(rng.gen_range(0.0..6.0));
        t.within((p.total(y) - 1.0).abs(), 1e-10, || format!("Σ U({}/L)", y));
    }
    for w in [SmoothWeight::default(), SmoothWeight::bump(3.0, 2.0)?, SmoothWeight::plateau(8.0)?] {
        t.within(w.derivative_ratio(), 1.0, || format!("derivative bound for {:?}", w));
    }
    Ok(t.finish())
}

fn large_sieve(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("large_sieve");
    let side = (cfg.cap_norm as f64 / 20.0).clamp(4.0, 32.0);
    for (m, n) in [(side, side), (2.0 * side, side / 2.0)] {
        let cell = run_cell(m, n, cfg.seed..cfg.seed + 5)?;
        t.within(cell.scaling_defect, 1e-12, || format!("ratio scaling at M = {}, N = {}", m, n));
        t.within(cell.cauchy_schwarz_excess.max(0.0), 1e-12, || format!("Cauchy–Schwarz at M = {}, N = {}", m, n));
        t.holds(cell.max_ratio.is_some_and(f64::is_finite), || format!("no finite ratio at M = {}, N = {}", m, n));
    }
    Ok(t.finish())
}

fn delta(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("delta");
    for q in elements_with_norm_in(0, (cfg.cap_norm / 10).clamp(1, 100)) {
        for a in ResidueSystem::new(q)?.iter() {
            let want = if a.is_zero() { 1.0 } else { 0.0 };
            let v = delta_additive(a + q * Zw::c(1, 2), q)?;
            t.within((v - Complex64::new(want, 0.0)).norm(), 1e-9, || format!("δ({} mod {})", a, q));
        }
    }
    Ok(t.finish())
}

fn omega_sanity(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("factorization");
    for c in elements_with_norm_in(0, cfg.cap_norm) {
        let f = crate::factor::factor(&c)?;
        t.holds(f.reconstruct() == c, || format!("factorization of {} does not reconstruct", c));
        t.holds(omega_count(&c)? == f.omega(), || format!("ω({})", c));
    }
    Ok(t.finish())
}

type Suite = fn(&VerifyConfig) -> Result<SuiteReport>;

pub const SUITES: [(&str, Suite); 16] = [
    ("residues", residues),
    ("factorization", omega_sanity),
    ("reciprocity", reciprocity),
    ("symbol_oracle", symbol_oracle),
    ("gauss_laws", gauss_laws),
    ("cuberel", cuberel),
    ("local_table", local_table),
    ("ramanujan", ramanujan),
    ("weil", weil),
    ("unpack", unpack),
    ("orthogonality", orthogonality),
    ("vaughan", vaughan),
    ("decomposition", decomposition),
    ("partition", partition),
    ("large_sieve", large_sieve),
    ("delta", delta),
];

/// Runs every suite in order. A suite that errors counts as failed.
pub fn verify_all(cfg: &VerifyConfig) -> VerifyReport {
    let suites: Vec<SuiteReport> = SUITES
        .iter()
        .map(|(name, f)| {
            f(cfg).unwrap_or_else(|e| SuiteReport {
                name: name.to_string(),
                passed: false,
                checks: 0,
                failures: 1,
                max_residual: f64::INFINITY,
                first_failure: Some(e.to_string()),
            })
        })
        .collect();
    VerifyReport { passed: suites.iter().all(|s| s.passed), cap_norm: cfg.cap_norm, seed: cfg.seed, suites }
}
