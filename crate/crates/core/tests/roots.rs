use hyperroots::cx::{c, Complex, ONE, ZERO};
use hyperroots::roots::*;
use hyperroots::specfun::SeriesControl;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn disc_points(seed: u64, radius: f64, count: usize) -> Vec<Complex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = radius * rng.gen::<f64>().sqrt();
            let th = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
            Complex::from_polar(r, th)
        })
        .collect()
}

fn closed_residual_bound(t: Complex) -> f64 {
    1e-9 * t.norm().max(1.0)
}

#[test]
fn closed_form_residuals_on_wide_grids() {
    for n in 2..=4u32 {
        for t in disc_points(100 + n as u64, 3.0, 200) {
            let inst = TrinomialInstance::new(n, t);
            let rs = closed_form_roots(&inst).unwrap();
            assert_eq!(rs.roots.len(), n as usize);
            for (x, e) in rs.roots.iter().zip(&rs.residuals) {
                assert_eq!(*e, residual(&inst, *x));
                assert!(*e <= closed_residual_bound(t), "n={n} t={t} x={x}: {e}");
            }
        }
    }
}

#[test]
fn series_matches_closed_form_across_the_disc() {
    let ctrl = SeriesControl::default();
    for n in 2..=4u32 {
        let radius = 0.95 * TrinomialInstance::disc_radius(n);
        for t in disc_points(200 + n as u64, radius, 200) {
            let inst = TrinomialInstance::new(n, t);
            let s = root_hypergeometric(&inst, &ctrl).unwrap();
            let k = series_branch_closed_form(&inst).unwrap();
            assert!((s - k).norm() <= 1e-8 * k.norm().max(1e-300) + 1e-15, "n={n} t={t}: {s} vs {k}");
            assert!(residual(&inst, s) <= 1e-8 * t.norm().max(1.0));
            let all = closed_form_roots(&inst).unwrap();
            let nearest = all.roots.iter().map(|r| (r - k).norm()).fold(f64::INFINITY, f64::min);
            assert!(nearest < 1e-9, "n={n} t={t}: branch root not in the closed-form set ({nearest})");
        }
    }
}

#[test]
fn lagrange_partial_sums_decay_monotonically() {
    let ctrl = SeriesControl::default();
    for n in 2..=5u32 {
        let radius = TrinomialInstance::disc_radius(n);
        for frac in [0.1, 0.4, 0.7] {
            let inst = TrinomialInstance::new(n, c(frac * radius));
            let exact = root_hypergeometric(&inst, &ctrl).unwrap();
            let mut prev = f64::INFINITY;
            for k in 0..60 {
                let err = (root_lagrange_partial(&inst, k) - exact).norm();
                if prev < 1e-14 {
                    break;
                }
                assert!(err <= prev, "n={n} t={} K={k}: {err} > {prev}", inst.t);
                prev = err;
            }
        }
    }
}

#[test]
fn cubic_roots_continuous_across_boundary() {
    for m in [1.0 / 3.0, 0.5, 2.0] {
        let b: f64 = m * m * m;
        let b = b.sqrt();
        for sign in [1.0, -1.0] {
            let below = CubicSpec { sign: CubicSign::Minus, m, nn: c(sign * b * (1.0 - 1e-15)) };
            let above = CubicSpec { sign: CubicSign::Minus, m, nn: c(sign * b * (1.0 + 1e-15)) };
            assert_eq!(cubic_case(&below), CubicCase::Cos);
            assert_eq!(cubic_case(&above), CubicCase::Cosh);
            let lo = cubic_roots(&below).unwrap().roots;
            let hi = cubic_roots(&above).unwrap().roots;
            // pair each root with its nearest partner on the other side
            for x in &lo {
                let d = hi.iter().map(|y| (x - y).norm()).fold(f64::INFINITY, f64::min);
                assert!(d <= 1e-7, "m={m} sign={sign}: {x} has no partner ({d})");
            }
        }
    }
}

#[test]
fn cubic_examples() {
    let spec = CubicSpec { sign: CubicSign::Plus, m: 1.0, nn: ONE };
    let rs = cubic_roots(&spec).unwrap();
    let want = -2.0 * ((1f64).asinh() / 3.0).sinh();
    assert!(rs.roots.iter().any(|x| (x - c(want)).norm() < 1e-14));
    assert!((want + 0.596072).abs() < 1e-6);
    let spec = CubicSpec { sign: CubicSign::Minus, m: 1.0 / 3.0, nn: ZERO };
    let rs = cubic_roots(&spec).unwrap();
    for (x, w) in rs.roots.iter().zip([-1.0, 0.0, 1.0]) {
        assert!((x - c(w)).norm() < 1e-15, "{x} vs {w}");
    }
    let spec = CubicSpec { sign: CubicSign::Minus, m: 0.0, nn: ONE };
    assert!(cubic_roots(&spec).is_err());
}

#[test]
fn quartic_factors_for_trinomial_use_minus_gamma() {
    for t in [c(0.05), c(-0.07), Complex::new(0.03, 0.04), c(0.3)] {
        let spec = QuarticSpec { p: ZERO, q: -ONE, r: t };
        let f = quartic_descartes(&spec).unwrap();
        let a = f.alpha;
        assert!((f.gamma - (a * a - ONE / a) * 0.5).norm() < 1e-15 * f.gamma.norm().max(1.0));
        assert!((f.beta - t / f.gamma).norm() < 1e-15 * f.beta.norm().max(1.0));
        // alpha^2 solves xi^3 - 4 t xi - 1 = 0
        let xi = a * a;
        assert!((xi * xi * xi - 4.0 * t * xi - 1.0).norm() < 1e-13);
        // the +1/alpha variant is beta; used as gamma it flips the sign of the x term
        let plus = (a * a + ONE / a) * 0.5;
        assert!((f.beta - plus).norm() < 1e-12 * plus.norm());
        assert!((a * (f.gamma - f.beta) + ONE).norm() < 1e-12);
        assert!((a * (plus - t / plus) - ONE).norm() < 1e-12);
        for x in f.roots() {
            let e = (x.powi(4) - x + t).norm();
            assert!(e < 1e-8 * t.norm().max(1.0), "t={t}: residual {e}");
        }
    }
}

#[test]
fn quartic_x1_is_the_series_root_at_005() {
    let t = c(0.05);
    let inst = TrinomialInstance::new(4, t);
    let s = root_hypergeometric(&inst, &SeriesControl::default()).unwrap();
    let spec = QuarticSpec { p: ZERO, q: -ONE, r: t };
    let rs = quartic_roots(&spec).unwrap();
    assert!(rs.roots.iter().any(|x| (x - s).norm() < 1e-12));
    assert!((series_branch_closed_form(&inst).unwrap() - s).norm() < 1e-12);
}

#[test]
fn catalan_coefficients() {
    let mut cat = 1u64;
    for k in 0..=10u64 {
        assert_eq!(lagrange_coefficient(2, k as u32), cat as f64, "C_{k}");
        cat = cat * 2 * (2 * k + 1) / (k + 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadratic_roots_satisfy_the_equation(re in -5.0f64..5.0, im in -5.0f64..5.0) {
        let t = Complex::new(re, im);
        let rs = quadratic_roots(t);
        prop_assert_eq!(rs.roots.len(), 2);
        prop_assert!((rs.roots[0] + rs.roots[1] - ONE).norm() < 1e-12 * t.norm().max(1.0));
        for e in &rs.residuals {
            prop_assert!(*e <= closed_residual_bound(t));
        }
    }

    #[test]
    fn quartic_residuals(pr in -3.0f64..3.0, pi in -1.0f64..1.0, qr in -3.0f64..3.0, qi in -1.0f64..1.0,
                         rr in -3.0f64..3.0, ri in -1.0f64..1.0) {
        let q = Complex::new(qr, qi);
        prop_assume!(q.norm() > 1e-3);
        let spec = QuarticSpec { p: Complex::new(pr, pi), q, r: Complex::new(rr, ri) };
        let rs = quartic_roots(&spec).unwrap();
        for e in rs.residuals {
            prop_assert!(e <= 1e-8 * spec.r.norm().max(1.0), "{}", e);
        }
    }

    #[test]
    fn series_root_residual_inside_disc(n in 2u32..7, frac in 0.0f64..0.9, th in -3.14f64..3.14) {
        let r = frac * TrinomialInstance::disc_radius(n);
        let inst = TrinomialInstance::new(n, Complex::from_polar(r, th));
        let x = root_hypergeometric(&inst, &SeriesControl::default()).unwrap();
        prop_assert!(residual(&inst, x) <= 1e-8 * inst.t.norm().max(1.0));
    }
}
