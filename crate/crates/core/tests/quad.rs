use std::f64::consts::PI;

use hyperroots::cx::{c, Complex};
use hyperroots::quad::*;
use hyperroots::specfun::gamma_real;
use hyperroots::Verdict;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn gamma_integrals() {
    for alpha in [0.3, 0.5, 1.0, 2.5] {
        let spec = IntegralSpec::new(
            "gamma",
            move |t: f64| c((-t).exp() * t.powf(alpha - 1.0)),
            alpha - 1.0,
            Tail::Exponential { rate: 1.0 },
        );
        let r = integrate_semi_infinite(&spec, 1e-12).unwrap();
        let want = gamma_real(alpha).unwrap();
        assert!((r.value.re - want).abs() <= 1e-10 * want, "alpha={alpha}: {} vs {want}", r.value);
        assert!(r.est_error <= 1e-12);
        assert!(r.evaluations <= DEFAULT_BUDGET);
    }
}

#[test]
fn substitution_on_and_off_agree() {
    let spec = IntegralSpec::new(
        "half",
        |t: f64| c((-t).exp() / t.sqrt()),
        -0.5,
        Tail::Exponential { rate: 1.0 },
    );
    let with = integrate_semi_infinite(&spec, 1e-12).unwrap();
    let without = integrate_semi_infinite_plain(&spec, 1e-11).unwrap();
    assert!((with.value - without.value).norm() <= 1e-10);
    assert!((with.value.re - PI.sqrt()).abs() <= 1e-11);
    assert!(with.evaluations < without.evaluations);
}

#[test]
fn budget_exhaustion_reports_best_estimate() {
    let mut spec = IntegralSpec::new("osc", |t: f64| c((50.0 * t).sin() * (-t).exp()), 0.0, Tail::Exponential { rate: 1.0 });
    spec.budget = 100;
    match integrate_semi_infinite(&spec, 1e-12) {
        Err(hyperroots::Error::BudgetExhausted { re, est_error, .. }) => {
            assert!(re.is_finite() && est_error > 1e-12);
        }
        other => panic!("expected budget error, got {other:?}"),
    }
}

fn assert_grid(name: &str, recs: Vec<hyperroots::CheckRecord>) {
    assert_eq!(recs.len(), 25, "{name}");
    for r in recs {
        assert_eq!(r.verdict, Verdict::Pass, "{name}: {r:?}");
    }
}

#[test]
fn j1_five_by_five() {
    let mut recs = Vec::new();
    for s in [0.5, 1.0, 2.0, 3.0, 5.0] {
        for x in [-0.4, 0.25, 0.5, 1.0, 2.0] {
            recs.push(check_integral_j1(1, c(s), c(x), 1e-6).unwrap());
        }
    }
    assert_grid("J1", recs);
}

#[test]
fn j1_other_orders() {
    for n in [0, 2, 3] {
        for (s, x) in [(1.0, 0.5), (2.0, 1.0), (0.8, -0.3)] {
            let r = check_integral_j1(n, c(s), c(x), 1e-6).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        }
    }
    // Re(s + x) <= 0 violates the hypothesis
    assert!(check_integral_j1(0, c(1.0), c(-2.0), 1e-6).is_err());
}

#[test]
fn j2_five_by_five() {
    let mut recs = Vec::new();
    for p in [0.0, 0.5, 1.0, 2.0, 4.0] {
        for x in [0.25, 0.5, 1.0, 1.5, 3.0] {
            recs.push(check_integral_j2(2, c(p), c(x), 1e-6).unwrap());
        }
    }
    assert_grid("J2", recs);
}

#[test]
fn j3_five_by_five() {
    let mut recs = Vec::new();
    for p in [0.75, 1.0, 1.5, 2.0, 3.0] {
        for x in [0.1, 0.25, 0.5, 0.8, 1.2] {
            recs.push(check_integral_j3(c(p), c(x), 1e-5).unwrap());
        }
    }
    assert_grid("J3", recs);
    assert!(check_integral_j3(c(0.4), c(1.0), 1e-5).is_err());
}

#[test]
fn laplace_random_draws() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let shapes = [(0usize, 0usize), (0, 1), (1, 1), (1, 2), (2, 2)];
    for i in 0..25 {
        let (p, q) = shapes[i % shapes.len()];
        let a: Vec<Complex> = (0..p).map(|_| c(rng.gen_range(0.2..2.0))).collect();
        let b: Vec<Complex> = (0..q).map(|_| c(rng.gen_range(0.5..3.0))).collect();
        let alpha = c(rng.gen_range(0.3..3.0));
        let s = Complex::new(rng.gen_range(0.8..3.0), rng.gen_range(-0.5..0.5));
        let x = Complex::from_polar(rng.gen_range(0.0..0.6) * s.re, rng.gen_range(-PI..PI));
        let r = laplace_hyp_check(&a, &b, alpha, s, x, 1e-7).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "draw {i}: {r:?}");
    }
}

#[test]
fn laplace_examples() {
    let v = laplace_closed_form(&[], &[], c(2.0), c(3.0), c(1.0)).unwrap();
    assert!((v.re - 0.25).abs() < 1e-15);
    let r = laplace_hyp_check(&[c(1.0)], &[c(2.0)], c(1.0), c(2.0), c(1.0), 1e-8).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    let r = laplace_hyp_check(&[], &[], c(0.5), c(1.0), c(0.0), 1e-10).unwrap();
    assert!((r.lhs_value.unwrap().re - PI.sqrt()).abs() < 1e-10);
    assert!(laplace_hyp_check(&[c(1.0), c(1.0)], &[c(2.0)], c(1.0), c(2.0), c(0.5), 1e-8).is_err());
}
