mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use zomega::arith::von_mangoldt;
use zomega::ring::elements_with_norm_in;
use zomega::sieve::sums::prime_sum_between;
use zomega::sieve::{
    check_rs_condition, prime_sum_sharp, smoothed_prime_sum, type1_average, type1_pointwise, type2_bilinear,
    vaughan_decomposition_check, vaughan_decomposition_general, vaughan_terms, CoefficientSource, DyadicPartition,
    ProgressionConstraint, SmoothWeight,
};
use zomega::Zw;

/// Λ(n) for primary n from an explicit prime list: log N(ϖ) when n = ϖ^k.
fn lambda_oracle(n: common::P, primes: &[common::P]) -> f64 {
    for &w in primes {
        let mut q = w;
        while common::norm(q) <= common::norm(n) {
            if q == n {
                return (common::norm(w) as f64).ln();
            }
            q = common::mul(q, w);
        }
    }
    0.0
}

fn bump(t: f64) -> f64 {
    if t <= 1.0 || t >= 2.0 {
        0.0
    } else {
        (4.0 + 1.0 / ((t - 1.0) * (t - 2.0))).exp()
    }
}

#[test]
fn von_mangoldt_matches_oracle() {
    let primes = common::primary_primes(3000);
    for n in elements_with_norm_in(0, 3000).into_iter().filter(|n| n.is_primary()) {
        let want = lambda_oracle((n.a, n.b), &primes);
        assert!((von_mangoldt(&n).unwrap() - want).abs() < 1e-12, "Λ({})", n);
    }
}

#[test]
fn vaughan_identity_exhaustive() {
    let grid = [1.0, 3.0, 10.0, 50.0, 400.0];
    for nu in elements_with_norm_in(0, 1500).into_iter().filter(|n| n.is_primary()) {
        let lam = von_mangoldt(&nu).unwrap();
        for r in grid {
            for s in grid {
                let want = if nu.norm() as f64 > s { lam } else { 0.0 };
                let t = vaughan_terms(nu, r, s).unwrap();
                assert!((t.combined() - want).abs() < 1e-9, "ν = {}, R = {}, S = {}: {:?}", nu, r, s, t);
            }
        }
    }
    assert!(vaughan_terms(Zw::c(2, 0), 1.0, 1.0).is_err());
    assert!(vaughan_terms(Zw::one(), 0.5, 1.0).is_err());
}

#[test]
fn sharp_prime_sum_counts_primes() {
    let primes = common::primary_primes(27 * 50);
    let c = ProgressionConstraint::trivial();
    let got = prime_sum_sharp(50.0, &c, &CoefficientSource::constant(1.0)).unwrap();
    let want: f64 = primes.iter().map(|&w| (common::norm(w) as f64).ln()).sum();
    assert!((got.primes.re - want).abs() < 1e-9);
    // −2 squared has norm 16 ≤ 1350, so prime powers do contribute
    assert!(got.prime_power_part().re > 4f64.ln());
    let between = prime_sum_between(0.0, 50.0, &c, &CoefficientSource::constant(1.0));
    assert!((between - got.von_mangoldt).norm() < 1e-9);
}

#[test]
fn smoothed_sum_matches_brute_force() {
    let x = 60.0;
    let primes = common::primary_primes(27 * 120);
    for c in [
        ProgressionConstraint::trivial(),
        ProgressionConstraint::new(Zw::c(6, 0), Zw::c(1, 3)).unwrap(),
        ProgressionConstraint::new(Zw::c(3, 3), Zw::c(-2, 0)).unwrap(),
    ] {
        let mut want = 0.0;
        for n in elements_with_norm_in(0, 27 * 120).into_iter().filter(|&n| c.matches(n)) {
            let lam = lambda_oracle((n.a, n.b), &primes);
            want += lam * bump(n.norm() as f64 / (27.0 * x));
        }
        let got = smoothed_prime_sum(x, &c, &CoefficientSource::constant(1.0), &SmoothWeight::default()).unwrap();
        assert!((got - Complex64::new(want, 0.0)).norm() < 1e-8, "{}: {} vs {}", c, got, want);
    }
}

#[test]
fn constraint_rules() {
    assert!(ProgressionConstraint::new(Zw::c(2, 0), Zw::one()).is_err());
    assert!(ProgressionConstraint::new(Zw::c(3, 0), Zw::c(2, 0)).is_err());
    assert!(ProgressionConstraint::new(Zw::c(-6, 0), Zw::c(-2, 0)).is_err());
    let c = ProgressionConstraint::new(Zw::c(9, 0), Zw::c(4, 3)).unwrap();
    assert!(c.matches(Zw::c(13, 3)) && !c.matches(Zw::c(4, 0)));
}

#[test]
fn decomposition_under_rs_condition() {
    let x = 200.0;
    let s = x / 20000.0;
    let r = 1e5 * x / s;
    assert!(check_rs_condition(x, r, s).is_ok());
    for src in [CoefficientSource::constant(1.0), CoefficientSource::GaussProxy, CoefficientSource::SyntheticRandom { seed: 4 }] {
        let c = ProgressionConstraint::trivial();
        let w = SmoothWeight::default();
        let rep = vaughan_decomposition_check(x, r, s, &c, &src, &w, &DyadicPartition).unwrap();
        let direct = smoothed_prime_sum(x, &c, &src, &w).unwrap();
        assert!((rep.lhs - direct).norm() < 1e-9);
        assert!(rep.residual < 1e-6, "{}: residual {}", src, rep.residual);
        assert_eq!(rep.third, Complex64::new(0.0, 0.0));
    }
}

#[test]
fn decomposition_general_has_all_pieces() {
    let c = ProgressionConstraint::new(Zw::c(3, 0), Zw::one()).unwrap();
    for (x, r, s) in [(100.0, 30.0, 40.0), (150.0, 10.0, 300.0), (80.0, 1.0, 1.0)] {
        for src in [CoefficientSource::constant(1.0), CoefficientSource::GaussProxy] {
            let rep = vaughan_decomposition_general(x, r, s, &c, &src, &SmoothWeight::bump(2.0, 1.0).unwrap(), &DyadicPartition)
                .unwrap();
            assert!(rep.residual < 1e-6 * rep.lhs.norm().max(1.0), "X = {}, R = {}, S = {}: {:?}", x, r, s, rep.residual);
            let total: Complex64 = rep.p2_cells.iter().map(|c| c.value).sum();
            assert!((total - rep.p2_total).norm() < 1e-8);
            if r > 1.0 || s > 1.0 {
                assert!(!rep.p2_cells.is_empty());
            }
        }
    }
    // with R = S = 1 only a = b = 1 survives in P₂
    let rep = vaughan_decomposition_general(80.0, 1.0, 1.0, &c, &CoefficientSource::constant(1.0), &SmoothWeight::default(), &DyadicPartition)
        .unwrap();
    assert!(rep.p2_total.norm() < 1e-12);
    assert!(vaughan_decomposition_general(80.0, 0.5, 1.0, &c, &CoefficientSource::constant(1.0), &SmoothWeight::default(), &DyadicPartition).is_err());
}

#[test]
fn rs_condition_boundaries() {
    // X = 10⁶ needs S < 100 and 10¹⁰ < RS < 10¹³
    assert!(check_rs_condition(1e6, 1e9, 50.0).is_ok());
    assert!(check_rs_condition(1e6, 1e9, 100.0).is_err());
    assert!(check_rs_condition(1e6, 1e12, 50.0).is_err());
    assert!(check_rs_condition(1e6, 1e6, 50.0).is_err());
}

#[test]
fn type_sums_agree() {
    let x = 40.0;
    let c = ProgressionConstraint::new(Zw::c(6, 0), Zw::c(1, 3)).unwrap();
    let src = CoefficientSource::GaussProxy;
    let w = SmoothWeight::default();
    let a = Zw::c(-2, -3);
    let t1 = type1_pointwise(a, x, &c, &src, &w).unwrap();
    // brute force over every b
    let mut want = Complex64::new(0.0, 0.0);
    for b in elements_with_norm_in(0, 27 * 80 / a.norm() + 1) {
        let n = a * b;
        if c.matches(n) {
            want += src.value(n) * bump(n.norm() as f64 / (27.0 * x));
        }
    }
    assert!((t1 - want).norm() < 1e-9);
    let beta: Vec<(Zw, Complex64)> =
        elements_with_norm_in(0, 27 * 80 / a.norm() + 1).into_iter().map(|b| (b, Complex64::new(1.0, 0.0))).collect();
    let t2 = type2_bilinear(&[(a, Complex64::new(1.0, 0.0))], &beta, x, &c, &src, &w).unwrap();
    assert!((t1 - t2).norm() < 1e-9);
    // μ² removes the square
    let alpha = [(a, Complex64::new(2.0, 0.0)), (a * a, Complex64::new(5.0, 0.0))];
    let avg = type1_average(&alpha, x, &c, &src, &w).unwrap();
    assert!((avg - t1 * 2.0).norm() < 1e-9);
    assert!(type1_pointwise(Zw::c(2, 0), x, &c, &src, &w).is_err());
}

#[test]
fn weight_derivatives_within_contract() {
    for w in [
        SmoothWeight::default(),
        SmoothWeight::bump(4.0, 3.0).unwrap(),
        SmoothWeight::plateau(4.0).unwrap(),
        SmoothWeight::plateau(16.0).unwrap(),
    ] {
        assert!(w.derivative_ratio() <= 1.0, "{:?}: {}", w, w.derivative_ratio());
    }
    assert!(SmoothWeight::bump(0.5, 1.0).is_err());
}

proptest! {
    #[test]
    fn partition_of_unity(e in -3.0f64..9.0) {
        let y = 10f64.powf(e);
        prop_assert!((DyadicPartition.total(y) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn source_is_deterministic(a in -50i64..50, b in -50i64..50, seed in 0u64..1000) {
        let s = CoefficientSource::SyntheticRandom { seed };
        let n = Zw::c(a, b);
        prop_assert_eq!(s.value(n), s.value(n));
        prop_assert!(s.value(n).norm() < 1.0);
        let round: CoefficientSource = s.to_string().parse().unwrap();
        prop_assert_eq!(round, s);
    }
}
