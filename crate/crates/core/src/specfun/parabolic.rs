//! Parabolic cylinder function D_nu(z).
//!
//! Re z <= 3 uses the Kummer-function pair
//! D = 2^{nu/2} e^{-z^2/4} [sqrt(pi)/Gamma((1-nu)/2) M(-nu/2, 1/2, z^2/2)
//!                         - sqrt(2 pi) z/Gamma(-nu/2) M((1-nu)/2, 3/2, z^2/2)],
//! with the Kummer sums carried as mantissa and exponent. For Re z > 3 the two
//! terms cancel, so the integral representation (valid for Re nu < 0) is used
//! with upward recurrence in nu.

use std::f64::consts::PI;

use super::gamma::rgamma;
use crate::cx::{self, c, Complex, ONE, ZERO};
use crate::error::{Error, Result};
use crate::quad::{gk, substitution_power};

const MAX_TERMS: usize = 20_000;
const RESCALE: f64 = 1e150;

/// M(a, b, x) as (mantissa, log scale).
fn kummer_scaled(a: Complex, b: Complex, x: Complex) -> Result<(Complex, f64)> {
    let mut term = ONE;
    let mut sum = ONE;
    let mut log = 0.0;
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * x / (kf + 1.0);
        sum += term;
        if sum.norm() > RESCALE {
            sum /= RESCALE;
            term /= RESCALE;
            log += RESCALE.ln();
        }
        if term.norm() <= 1e-17 * sum.norm() {
            small += 1;
            if small >= 3 {
                return Ok((sum, log));
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence {
        function: "parabolic_cylinder_d",
        terms: MAX_TERMS,
    })
}

fn series_route(nu: Complex, z: Complex, ln_scale: Complex) -> Result<Complex> {
    let x = z * z * 0.5;
    let (m1, l1) = kummer_scaled(-nu * 0.5, c(0.5), x)?;
    let (m2, l2) = kummer_scaled((ONE - nu) * 0.5, c(1.5), x)?;
    let base = ln_scale - z * z * 0.25 + nu * 0.5 * std::f64::consts::LN_2;
    let a = PI.sqrt() * rgamma((ONE - nu) * 0.5);
    let b = (2.0 * PI).sqrt() * rgamma(-nu * 0.5);
    let t1 = if a == ZERO { ZERO } else { a * m1 * (base + l1).exp() };
    let t2 = if b == ZERO { ZERO } else { b * z * m2 * (base + l2).exp() };
    Ok(t1 - t2)
}

/// Integral over t in (0, inf) of t^{-mu-1} exp(-z t - t^2/2), Re mu < 0.
fn laplace_gauss(mu: Complex, z: Complex) -> Result<Complex> {
    let e = -mu.re - 1.0;
    let m = substitution_power(e);
    let t_end: f64 = 40.0;
    let f = |u: f64| {
        let t = u.powf(m);
        let jac = m * u.powf(m - 1.0);
        ((-mu - 1.0) * t.ln() - z * t - t * t * 0.5).exp() * jac
    };
    let r = gk::integrate(&f, 0.0, t_end.powf(1.0 / m), 0.0, 1e-14, 100_000, 8);
    if !r.converged && r.err > 1e-11 * r.value.norm() {
        return Err(Error::NonConvergence {
            function: "parabolic_cylinder_d",
            terms: r.evals,
        });
    }
    Ok(r.value)
}

fn integral_route(nu: Complex, z: Complex, ln_scale: Complex) -> Result<Complex> {
    let k = if nu.re >= 0.0 { nu.re.floor() as usize + 1 } else { 0 };
    let nu0 = nu - k as f64;
    let pref = |mu: Complex| -> Result<Complex> {
        Ok((ln_scale - z * z * 0.25).exp() * rgamma(-mu) * laplace_gauss(mu, z)?)
    };
    if k == 0 {
        return pref(nu0);
    }
    let mut lower = pref(nu0 - 1.0)?;
    let mut cur = pref(nu0)?;
    let mut mu = nu0;
    for _ in 0..k {
        let next = z * cur - mu * lower;
        lower = cur;
        cur = next;
        mu += 1.0;
    }
    Ok(cur)
}

/// exp(ln_scale) * D_nu(z), with the scale folded in before any exponentials.
pub fn parabolic_cylinder_d_scaled(nu: Complex, z: Complex, ln_scale: Complex) -> Result<Complex> {
    let v = if z.re > 3.0 {
        integral_route(nu, z, ln_scale)?
    } else {
        series_route(nu, z, ln_scale)?
    };
    if !cx::is_finite(v) {
        return Err(Error::Overflow {
            function: "parabolic_cylinder_d",
        });
    }
    Ok(v)
}

pub fn parabolic_cylinder_d(nu: Complex, z: Complex) -> Result<Complex> {
    parabolic_cylinder_d_scaled(nu, z, ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::gamma;
    use crate::specfun::hyper::hyp1f1;

    #[test]
    fn order_zero_is_gaussian() {
        for z in [c(0.0), c(1.3), c(-2.5), c(6.0), Complex::new(0.5, 0.5)] {
            let v = parabolic_cylinder_d(ZERO, z).unwrap();
            assert!(cx::rel_err(v, (-z * z / 4.0).exp()) < 1e-13, "z={z}");
        }
    }

    #[test]
    fn value_at_origin() {
        for nu in [0.3, 1.0 / 3.0, -1.7, 2.5] {
            let v = parabolic_cylinder_d(c(nu), ZERO).unwrap();
            let want = cx::powf(c(2.0), nu / 2.0) * PI.sqrt() * rgamma(c((1.0 - nu) / 2.0));
            assert!(cx::rel_err(v, want) < 1e-14, "nu={nu}");
        }
    }

    #[test]
    fn hermite_cases() {
        // D_1(z) = z e^{-z^2/4}, D_2(z) = (z^2 - 1) e^{-z^2/4}
        for z in [0.7, 3.0, 5.0, 9.0, -4.0] {
            let g = (-z * z / 4.0f64).exp();
            let d1 = parabolic_cylinder_d(ONE, c(z)).unwrap().re;
            let d2 = parabolic_cylinder_d(c(2.0), c(z)).unwrap().re;
            assert!((d1 - z * g).abs() <= 1e-12 * (z * g).abs(), "z={z}");
            assert!((d2 - (z * z - 1.0) * g).abs() <= 1e-12 * ((z * z - 1.0) * g).abs(), "z={z}");
        }
    }

    #[test]
    fn routes_agree_near_switch() {
        for nu in [1.0 / 3.0, -0.6, 2.2, -2.5] {
            for z in [2.0, 2.5, 3.0] {
                let a = series_route(c(nu), c(z), ZERO).unwrap();
                let b = integral_route(c(nu), c(z), ZERO).unwrap();
                assert!(cx::rel_err(a, b) < 1e-10, "nu={nu} z={z} {a} {b}");
            }
        }
    }

    #[test]
    fn kummer_bridge() {
        // 1F1(a; 3/2; z) from D_{1-2a}(+-sqrt(2z)), a = 1/3
        let a = 1.0 / 3.0;
        for z in [0.2, 0.7, 1.5] {
            let y = (2.0f64 * z).sqrt();
            let nu = c(1.0 - 2.0 * a);
            let dd = parabolic_cylinder_d(nu, c(-y)).unwrap() - parabolic_cylinder_d(nu, c(y)).unwrap();
            let rhs = 2f64.powf(a - 2.5) / (PI * z).sqrt() * gamma(c(a - 0.5)).unwrap() * z.exp().sqrt() * dd;
            let lhs = hyp1f1(c(a), c(1.5), c(z)).unwrap();
            assert!(cx::rel_err(lhs, rhs) < 1e-8, "z={z}");
        }
    }

    #[test]
    fn scaling_avoids_overflow() {
        let z = c(-60.0);
        let v = parabolic_cylinder_d_scaled(c(1.0 / 3.0), z, c(-900.0)).unwrap();
        assert!((v.re + 0.002_628_038_117_176_6).abs() < 1e-14, "{v}");
        let w = parabolic_cylinder_d_scaled(c(1.0 / 3.0), z, c(-880.0)).unwrap();
        assert!(cx::rel_err(w, v * (20.0f64).exp()) < 1e-12);
    }
}
