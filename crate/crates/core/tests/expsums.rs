mod common;

use num_complex::Complex64;
use num_rational::Rational64;
use proptest::prelude::*;
use zomega::expsums::csum::{e_check, e_frac};
use zomega::expsums::gauss::{gauss_cube_check, gauss_direct, gauss_local_table, gauss_prime};
use zomega::expsums::kloosterman::{kloosterman_ss, kloosterman_sx, weil_bound};
use zomega::expsums::psi::{psi_sharp, psi_star, unpack1_sides, unpack2_sides};
use zomega::expsums::ramanujan::{
    fourier_psi, fourier_psi_direct, log_log_slope, orthogonality_check, ramanujan_direct, ramanujan_flat_sum,
};
use zomega::expsums::{gauss_fast, normalized_gauss, ramanujan_closed, ComplexSum};
use zomega::ring::elements_with_norm_in;
use zomega::{DualElement, Unit, Zw};

fn p(x: Zw) -> common::P {
    (x.a, x.b)
}

fn primaries(hi: i64) -> Vec<Zw> {
    elements_with_norm_in(0, hi).into_iter().filter(|c| c.is_primary()).collect()
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

#[test]
fn echeck_values() {
    assert_eq!(e_check(Complex64::new(0.0, 0.0)), Complex64::new(1.0, 0.0));
    // z + z̄ ∈ Z
    assert!(close(e_check(Complex64::new(1.5, 7.0)), Complex64::new(1.0, 0.0), 1e-12));
    // traces of λ⁻¹Z[ω] lie in (1/3)Z
    for w in elements_with_norm_in(0, 30) {
        let v = e_frac(w, Zw::lambda());
        assert!(close(v * v * v, Complex64::new(1.0, 0.0), 1e-12), "{}", w);
    }
}

#[test]
fn complex_sum_budget() {
    let mut s = ComplexSum::new();
    for k in 0..10_000 {
        s.add(Complex64::from_polar(1.0, k as f64 * 0.001));
    }
    assert_eq!(s.terms(), 10_000);
    assert!(s.tolerance() > 0.0 && s.tolerance() < 1e-6);
}

#[test]
fn gauss_matches_brute_force() {
    let primes = common::primary_primes(400);
    for c in primaries(150) {
        for mu in [Zw::one(), Zw::c(2, 1), Zw::c(-1, 3), Zw::c(0, 0)] {
            let want = common::gauss(p(mu), p(c), &primes);
            let d = gauss_direct(DualElement::integral(mu), c).unwrap().value();
            let f = gauss_fast(DualElement::integral(mu), c).unwrap().value();
            let tol = 1e-9 * (c.norm() as f64).max(1.0);
            assert!(close(d, want, tol), "direct g({}, {}) = {} vs {}", mu, c, d, want);
            assert!(close(f, want, tol), "fast g({}, {}) = {} vs {}", mu, c, f, want);
        }
    }
}

#[test]
fn gauss_small_values() {
    // g(μ, 1) = 1
    let one = gauss_fast(DualElement::integral(Zw::c(5, 2)), Zw::one()).unwrap().value();
    assert!(close(one, Complex64::new(1.0, 0.0), 1e-12));
    // ϖ = −2−3ω, N = 7: |g(ϖ)| = √7 and g(ϖ)³ = −ϖ²ϖ̄
    let w = Zw::c(-2, -3);
    let g = gauss_prime(w).unwrap();
    assert!((g.norm() - 7f64.sqrt()).abs() < 1e-12);
    assert!(gauss_cube_check(w).unwrap() < 1e-10);
    // the inert prime −2 has N = 4
    let g = gauss_prime(Zw::c(-2, 0)).unwrap();
    assert!((g.norm() - 2.0).abs() < 1e-12);
    assert!(gauss_cube_check(Zw::c(-2, 0)).unwrap() < 1e-10);
    // frozen from the brute-force oracle
    let want = common::gauss((1, 0), (-2, -3), &common::primary_primes(10));
    assert!(close(g_of(w), want, 1e-12));
}

fn g_of(w: Zw) -> Complex64 {
    gauss_prime(w).unwrap()
}

#[test]
fn local_table_cases() {
    let w = Zw::c(-2, -3);
    let n = 7f64;
    let tab = |k: u32, l: u32| gauss_local_table(w, Some(k), l).unwrap();
    assert!(close(tab(3, 0), Complex64::new(1.0, 0.0), 1e-12));
    // φ(ϖ^ℓ) for 1 ≤ ℓ ≤ k, ℓ ≡ 0 (mod 3)
    assert!(close(tab(4, 3), Complex64::new(n.powi(3) - n.powi(2), 0.0), 1e-9));
    assert!(close(tab(4, 2), Complex64::new(0.0, 0.0), 1e-12));
    // −N(ϖ)^k for ℓ = k + 1 ≡ 0 (mod 3)
    assert!(close(tab(2, 3), Complex64::new(-n * n, 0.0), 1e-9));
    assert!(close(tab(0, 1), g_of(w), 1e-12));
    assert!(close(tab(1, 3), Complex64::new(0.0, 0.0), 1e-12));
    for k in 0..=3u32 {
        for l in 0..=3u32 {
            let q = w.pow(l);
            let d = gauss_direct(DualElement::integral(w.pow(k)), q).unwrap().value();
            assert!(close(tab(k, l), d, 1e-8 * q.norm() as f64), "k = {}, ℓ = {}", k, l);
        }
    }
}

#[test]
fn gauss_structural_laws() {
    for c in primaries(700) {
        let root = (c.norm() as f64).sqrt();
        let g1 = gauss_fast(DualElement::integral(Zw::one()), c).unwrap().value();
        let sqf = zomega::arith::is_squarefree(&c).unwrap();
        if sqf {
            assert!((g1.norm() - root).abs() < 1e-6, "|g({})|", c);
        }
        for mu in [Zw::c(2, 1), Zw::c(-2, 0), Zw::c(4, 3), Zw::c(-2, -3)] {
            let g = gauss_fast(DualElement::integral(mu), c).unwrap().value();
            let gc = zomega::gcd(&mu, &c).unwrap();
            // |g(μ, c)| ≤ N(c)^{1/2} N((μ, c))^{1/2}
            assert!(g.norm() <= root * (gc.norm() as f64).sqrt() + 1e-6);
            if gc.is_one() {
                let chi = zomega::cubic_symbol(&mu, &c).unwrap().conj().to_complex();
                assert!(close(g, chi * g1, 1e-9 * root.max(1.0)));
            } else if sqf {
                assert!(g.norm() < 1e-6, "g({}, {}) should vanish", mu, c);
            }
        }
    }
}

#[test]
fn kloosterman_matches_double_loop() {
    let primes = common::primary_primes(200_000);
    let l3 = |x: Zw| DualElement::new(x, 3);
    for c in [Zw::c(3, 0), Zw::c(-6, 0), Zw::c(-6, -9), Zw::c(3, 6)] {
        for (m, n) in [(Zw::c(1, 0), Zw::c(0, 1)), (Zw::c(2, -1), Zw::c(4, 1)), (Zw::c(3, 3), Zw::c(-1, 2))] {
            let want = common::kloosterman_ss(p(m), p(n), p(c), &primes);
            let got = kloosterman_ss(l3(m), l3(n), c).unwrap().value();
            assert!(close(got, want, 1e-8), "K_ss({}, {}, {}) = {} vs {}", m, n, c, got, want);
        }
    }
    for c in [Zw::one(), Zw::c(-2, 0), Zw::c(-2, -3), Zw::c(4, 3), Zw::c(1, 3)] {
        for (m, n) in [(Zw::c(1, 0), Zw::c(0, 1)), (Zw::c(2, -1), Zw::c(4, 1)), (Zw::c(-27, 0), Zw::c(5, 5))] {
            let want = common::kloosterman_sx(p(m), p(n), p(c), &primes);
            let got = kloosterman_sx(l3(m), l3(n), c).unwrap().value();
            assert!(close(got, want, 1e-8), "K_sx({}, {}, {}) = {} vs {}", m, n, c, got, want);
        }
    }
}

#[test]
fn kloosterman_sx_weil_and_crt() {
    let int = DualElement::integral;
    for c in primaries(400) {
        for (m, n) in [(Zw::one(), Zw::c(2, 1)), (Zw::c(5, -3), Zw::c(1, 1))] {
            if !zomega::gcd(&zomega::gcd(&m, &n).unwrap(), &c).unwrap().is_one() {
                continue;
            }
            let k = kloosterman_sx(int(m), int(n), c).unwrap();
            assert!(k.value().norm() <= weil_bound(int(m), int(n), c).unwrap() + k.tolerance());
        }
    }
    // c = 1: a single term
    let k = kloosterman_sx(int(Zw::c(3, 1)), int(Zw::c(-4, 2)), Zw::one()).unwrap();
    assert!(close(k.value(), Complex64::new(1.0, 0.0), 1e-12));
}

#[test]
fn kloosterman_rejects_bad_moduli() {
    let one = DualElement::integral(Zw::one());
    assert!(kloosterman_ss(one, one, Zw::c(-2, -3)).is_err());
    assert!(kloosterman_sx(one, one, Zw::c(3, 0)).is_err());
    assert!(kloosterman_ss(DualElement::new(Zw::one(), 4), one, Zw::c(3, 0)).is_err());
}

#[test]
fn ramanujan_values() {
    let primes = common::primary_primes(400);
    let w = Zw::c(-2, -3);
    assert_eq!(ramanujan_closed(w, Zw::zero()).unwrap(), Rational64::new(6, 7));
    assert_eq!(ramanujan_closed(w, Zw::c(1, 1)).unwrap(), Rational64::new(-1, 7));
    for r in primaries(200).into_iter().step_by(2) {
        for k in [Zw::zero(), Zw::one(), Zw::c(-2, 0), r * Zw::c(2, 1), Zw::c(4, 3)] {
            let exact = ramanujan_closed(r, k).unwrap();
            let x = *exact.numer() as f64 / *exact.denom() as f64;
            let want = common::ramanujan(p(r), p(k), &primes);
            assert!(close(Complex64::new(x, 0.0), want, 1e-9), "ψ̂_{}({})", r, k);
            assert!(close(ramanujan_direct(r, k).unwrap(), want, 1e-9));
        }
    }
}

#[test]
fn ramanujan_flat_growth() {
    let k = Zw::c(4, 3);
    let pts: Vec<(f64, f64)> =
        (5..=10).map(|e| (2f64.powi(e), ramanujan_flat_sum(2f64.powi(e), k).unwrap())).collect();
    assert!(log_log_slope(&pts) < 0.3, "{:?}", pts);
    // k = 0 is bounded by the number of terms
    let r = ramanujan_flat_sum(100.0, Zw::zero()).unwrap();
    assert!(r > 0.0 && r <= primaries(200).len() as f64);
}

#[test]
fn fourier_psi_against_direct() {
    for r in [Zw::one(), Zw::c(-2, -3), Zw::c(-2, 0)] {
        for m in 0..=2u32 {
            for (eta, k) in [(Zw::one(), Zw::c(2, 1)), (Zw::c(3, 1), Zw::c(3, 1)), (Zw::zero(), Zw::c(-1, 4))] {
                let exact = fourier_psi(eta, m, r, k).unwrap();
                let x = *exact.numer() as f64 / *exact.denom() as f64;
                let d = fourier_psi_direct(eta, m, r, k, 1).unwrap();
                assert!(close(d, Complex64::new(x, 0.0), 1e-9), "r = {}, m = {}, η = {}, k = {}", r, m, eta, k);
            }
        }
    }
}

#[test]
fn orthogonality_indicator() {
    for q in primaries(40) {
        for l in 0..=2u32 {
            let modulus = Zw::lambda().pow(l) * q;
            for k in elements_with_norm_in(0, 30) {
                let eta = Zw::c(2, -1);
                let v = orthogonality_check(l, q, k, eta).unwrap();
                let want = if (k - eta).congruent(&Zw::zero(), &modulus) { 1 } else { 0 };
                assert_eq!(v, Rational64::from_integer(want), "q = {}, ℓ = {}, k = {}", q, l, k);
            }
        }
    }
    assert_eq!(orthogonality_check(0, Zw::one(), Zw::c(5, 1), Zw::c(-3, 2)).unwrap(), Rational64::from_integer(1));
}

#[test]
fn psi_transforms_linear() {
    let r = Zw::c(-2, -3);
    let f = |u: Zw| e_frac(u * Zw::c(1, 1), r * Zw::lambda().pow(2));
    let a = psi_sharp(f, 2, r, Unit::new(2), Zw::c(1, 4)).unwrap();
    let b = psi_sharp(|u| f(u) * 3.0, 2, r, Unit::new(2), Zw::c(1, 4)).unwrap();
    assert!(close(b, a * 3.0, 1e-12));
    let a = psi_star(f, 1, r, Zw::c(1, 4)).unwrap();
    let b = psi_star(|u| f(u) * Complex64::new(0.0, 2.0), 1, r, Zw::c(1, 4)).unwrap();
    assert!(close(b, a * Complex64::new(0.0, 2.0), 1e-12));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn unpack_identities(
        m in 6u32..=6,
        ri in 0usize..6,
        eta in (-5i64..5, -5i64..5),
        nu in (-5i64..5, -5i64..5),
        z in 0u32..6,
        m2 in 0u32..4,
    ) {
        let rs = [Zw::one(), Zw::c(-2, 0), Zw::c(-2, -3), Zw::c(1, 3), Zw::c(4, 3), Zw::c(-5, -3)];
        let (eta, nu) = (Zw::c(eta.0, eta.1), Zw::c(nu.0, nu.1));
        let (l, r) = unpack1_sides(m, rs[ri], eta, nu, Unit::new(z)).unwrap();
        prop_assert!((l - r).norm() <= 1e-9 * l.norm().max(1.0), "{} vs {}", l, r);
        let (l, r) = unpack2_sides(m2, rs[ri], eta, nu).unwrap();
        prop_assert!((l - r).norm() <= 1e-9 * l.norm().max(1.0), "{} vs {}", l, r);
    }

    #[test]
    fn normalized_gauss_unit_modulus(i in 0usize..60) {
        let ps = zomega::factor::primes_up_to_norm(2000.0);
        let w = ps[i % ps.len()];
        let g = normalized_gauss(w).unwrap();
        prop_assert!((g.norm() - 1.0).abs() < 1e-9);
    }
}
