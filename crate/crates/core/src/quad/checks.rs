//! Quadrature checks of the integral identities against their closed forms.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{integrate_semi_infinite, IntegralSpec, Tail};
use crate::check::{CheckRecord, Params};
use crate::cx::{self, c, Complex, ONE, ZERO};
use crate::error::{Error, Result};
use crate::specfun::gamma::{factorial, gamma, pochhammer};
use crate::specfun::hyper::{hyp_pfq, HypergeometricSpec, SeriesControl};
use crate::specfun::incomplete::lower_incomplete_gamma;
use crate::specfun::parabolic::parabolic_cylinder_d_scaled;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IntegralId {
    #[serde(rename = "J0_laplace_hyp")]
    J0LaplaceHyp,
    #[serde(rename = "J1_gamma_int")]
    J1GammaInt,
    #[serde(rename = "J2_gamma_int")]
    J2GammaInt,
    #[serde(rename = "J3_cylinder_int")]
    J3CylinderInt,
    #[serde(rename = "custom")]
    Custom,
}

impl IntegralId {
    /// Short id used in reports: J0, J1, J2, J3, custom.
    pub fn short(&self) -> &'static str {
        match self {
            IntegralId::J0LaplaceHyp => "J0",
            IntegralId::J1GammaInt => "J1",
            IntegralId::J2GammaInt => "J2",
            IntegralId::J3CylinderInt => "J3",
            IntegralId::Custom => "custom",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "J0" | "J0_laplace_hyp" => IntegralId::J0LaplaceHyp,
            "J1" | "J1_gamma_int" => IntegralId::J1GammaInt,
            "J2" | "J2_gamma_int" => IntegralId::J2GammaInt,
            "J3" | "J3_cylinder_int" => IntegralId::J3CylinderInt,
            "custom" => IntegralId::Custom,
            _ => return None,
        })
    }
}

/// Absolute quadrature tolerance for a relative target `tol` against `reference`.
fn quad_tol(tol: f64, reference: &Result<Complex>) -> f64 {
    let scale = match reference {
        Ok(v) if v.norm().is_finite() => v.norm().clamp(1e-3, 1.0),
        _ => 1.0,
    };
    (tol * 0.01 * scale).max(1e-15)
}

fn run(id: &str, params: Params, spec: &IntegralSpec, rhs: Result<Complex>, tol: f64) -> CheckRecord {
    let qt = quad_tol(tol, &rhs);
    let lhs = integrate_semi_infinite(spec, qt).map(|r| r.value);
    CheckRecord::compare(id, params, lhs, rhs, tol)
}

/// sum_{k<=n} (a)_k / k! w^k
fn partial_binomial(a: f64, n: usize, w: Complex) -> Complex {
    let mut term = ONE;
    let mut sum = ONE;
    for k in 0..n {
        term *= (a + k as f64) / (k + 1) as f64 * w;
        sum += term;
    }
    sum
}

/// Integrand e^{-st} t^{-3/2} gamma(n+1, xt).
pub fn j1_spec(n: u32, s: Complex, x: Complex) -> Result<IntegralSpec> {
    const F: &str = "check_integral_j1";
    if (s + x).re <= 0.0 {
        return Err(Error::domain(F, "Re(s+x) <= 0"));
    }
    let tail = if s == ZERO {
        if x.re <= 0.0 {
            return Err(Error::domain(F, "s = 0 needs Re x > 0"));
        }
        Tail::Algebraic { power: -1.5 }
    } else if s.re > 0.0 {
        Tail::Exponential {
            rate: s.re.min((s + x).re),
        }
    } else {
        return Err(Error::domain(F, "Re s must be positive (or s = 0)"));
    };
    let nu = c(n as f64 + 1.0);
    let f = move |t: f64| {
        let g = lower_incomplete_gamma(nu, x * t).unwrap_or(Complex::new(f64::NAN, 0.0));
        (-s * t).exp() * t.powf(-1.5) * g
    };
    Ok(IntegralSpec::new("J1_gamma_int", f, n as f64 - 0.5, tail))
}

/// -2 sqrt(pi) n! [sqrt s - sqrt(s+x) sum_{k<=n} (-1/2)_k/k! (x/(x+s))^k].
pub fn j1_closed_form(n: u32, s: Complex, x: Complex) -> Result<Complex> {
    let sum = if x == ZERO {
        ONE
    } else {
        partial_binomial(-0.5, n as usize, x / (x + s))
    };
    Ok(-2.0 * PI.sqrt() * factorial(n as usize) * (cx::sqrt(s) - cx::sqrt(s + x) * sum))
}

pub fn check_integral_j1(n: u32, s: Complex, x: Complex, tol: f64) -> Result<CheckRecord> {
    let spec = j1_spec(n, s, x)?;
    let params = Params::new()
        .with_int("n", n as i64)
        .with_complex("s", s)
        .with_complex("x", x);
    Ok(run("J1", params, &spec, j1_closed_form(n, s, x), tol))
}

/// Integrand e^{-pt} t^{-(1/2+n)} gamma(n, xt).
pub fn j2_spec(n: u32, p: Complex, x: Complex) -> Result<IntegralSpec> {
    const F: &str = "check_integral_j2";
    if n == 0 {
        return Err(Error::domain(F, "n must be >= 1"));
    }
    if (p + x).re <= 0.0 {
        return Err(Error::domain(F, "Re(p+x) <= 0"));
    }
    let tail = if p == ZERO {
        if x.re <= 0.0 {
            return Err(Error::domain(F, "p = 0 needs Re x > 0"));
        }
        Tail::Algebraic {
            power: -0.5 - n as f64,
        }
    } else if p.re > 0.0 {
        Tail::Exponential {
            rate: p.re.min((p + x).re),
        }
    } else {
        return Err(Error::domain(F, "Re p must be positive (or p = 0)"));
    };
    let nu = c(n as f64);
    let f = move |t: f64| {
        let g = lower_incomplete_gamma(nu, x * t).unwrap_or(Complex::new(f64::NAN, 0.0));
        (-p * t).exp() * t.powf(-0.5 - n as f64) * g
    };
    Ok(IntegralSpec::new("J2_gamma_int", f, -0.5, tail))
}

/// Closed form with the separate p = 0 branch 2 sqrt(pi) x^{n-1/2}/(2n-1).
pub fn j2_closed_form(n: u32, p: Complex, x: Complex) -> Result<Complex> {
    if n == 0 {
        return Err(Error::domain("j2_closed_form", "n must be >= 1"));
    }
    let nf = n as f64;
    if p == ZERO {
        return Ok(2.0 * PI.sqrt() * cx::powf(x, nf - 0.5) / (2.0 * nf - 1.0));
    }
    let sum = partial_binomial(0.5, n as usize - 1, -x / p);
    let pref = -PI.sqrt() * factorial(n as usize - 1) * (-p).powi(n as i32 - 1) / pochhammer(c(0.5), n as usize);
    Ok(pref * (cx::sqrt(p) - cx::sqrt(p + x) * sum))
}

pub fn check_integral_j2(n: u32, p: Complex, x: Complex, tol: f64) -> Result<CheckRecord> {
    let spec = j2_spec(n, p, x)?;
    let params = Params::new()
        .with_int("n", n as i64)
        .with_complex("p", p)
        .with_complex("x", x);
    Ok(run("J2", params, &spec, j2_closed_form(n, p, x), tol))
}

/// Integrand e^{-pt} t^{-5/6} D_{1/3}(-sqrt(2xt)), real x >= 0.
pub fn j3_spec(p: Complex, x: Complex) -> Result<IntegralSpec> {
    const F: &str = "check_integral_j3";
    if x.im != 0.0 || x.re < 0.0 {
        return Err(Error::domain(F, "x must be real and >= 0"));
    }
    let rate = (2.0 * p - x).re * 0.5;
    if rate <= 0.0 {
        return Err(Error::domain(F, "Re(2p - x) <= 0"));
    }
    let xr = x.re;
    let nu = c(1.0 / 3.0);
    let f = move |t: f64| {
        let z = c(-(2.0 * xr * t).sqrt());
        let d = parabolic_cylinder_d_scaled(nu, z, -p * t).unwrap_or(Complex::new(f64::NAN, 0.0));
        d * t.powf(-5.0 / 6.0)
    };
    Ok(IntegralSpec::new("J3_cylinder_int", f, -5.0 / 6.0, Tail::Exponential { rate }))
}

/// 2 Gamma(1/3)/(2p+x)^{1/6} [cos(acos(w)/3) - sin(asin(w)/3)], w = sqrt(2x/(2p+x)).
pub fn j3_closed_form(p: Complex, x: Complex) -> Result<Complex> {
    let d = 2.0 * p + x;
    if d == ZERO {
        return Err(Error::domain("j3_closed_form", "2p + x = 0"));
    }
    let w = cx::sqrt(2.0 * x / d);
    let bracket = (cx::acos(w) / 3.0).cos() - (cx::asin(w) / 3.0).sin();
    Ok(2.0 * gamma(c(1.0 / 3.0))? / cx::powf(d, 1.0 / 6.0) * bracket)
}

pub fn check_integral_j3(p: Complex, x: Complex, tol: f64) -> Result<CheckRecord> {
    let spec = j3_spec(p, x)?;
    let params = Params::new().with_complex("p", p).with_complex("x", x);
    Ok(run("J3", params, &spec, j3_closed_form(p, x), tol))
}

/// pFq(a; b; z) for the Laplace integrand; 0F0 is exp and 1F1 with Re z < 0 goes through Kummer.
fn laplace_kernel(a: &[Complex], b: &[Complex], z: Complex, ctrl: &SeriesControl) -> Result<Complex> {
    match (a.len(), b.len()) {
        (0, 0) => Ok(z.exp()),
        (1, 1) if z.re < 0.0 => {
            let spec = HypergeometricSpec::new(&[b[0] - a[0]], b, -z);
            Ok(z.exp() * hyp_pfq(&spec, ctrl)?.into_value("laplace_hyp_check")?)
        }
        _ => hyp_pfq(&HypergeometricSpec::new(a, b, z), ctrl)?.into_value("laplace_hyp_check"),
    }
}

/// Integrand e^{-st} t^{alpha-1} pFq(a; b; xt), p <= q.
pub fn laplace_spec(a: &[Complex], b: &[Complex], alpha: Complex, s: Complex, x: Complex) -> Result<IntegralSpec> {
    const F: &str = "laplace_hyp_check";
    if a.len() > b.len() {
        return Err(Error::domain(F, "needs p <= q"));
    }
    if s.re <= 0.0 || alpha.re <= 0.0 {
        return Err(Error::domain(F, "needs Re s > 0 and Re alpha > 0"));
    }
    if s == ZERO || (x / s).norm() >= 1.0 {
        return Err(Error::domain(F, "needs |x/s| < 1"));
    }
    let rate = if a.len() == b.len() {
        s.re - x.re.max(0.0)
    } else {
        s.re
    };
    if rate <= 0.0 {
        return Err(Error::domain(F, "needs Re s > Re x when p = q"));
    }
    let (a, b) = (a.to_vec(), b.to_vec());
    let ctrl = SeriesControl {
        rel_tol: 1e-15,
        max_terms: 100_000,
        consecutive_small: 3,
    };
    let f = move |t: f64| {
        let h = laplace_kernel(&a, &b, x * t, &ctrl).unwrap_or(Complex::new(f64::NAN, 0.0));
        (c(t.ln()) * (alpha - 1.0) - s * t).exp() * h
    };
    Ok(IntegralSpec::new("J0_laplace_hyp", f, alpha.re - 1.0, Tail::Exponential { rate }))
}

/// Gamma(alpha) s^{-alpha} p+1Fq(a, alpha; b; x/s).
pub fn laplace_closed_form(a: &[Complex], b: &[Complex], alpha: Complex, s: Complex, x: Complex) -> Result<Complex> {
    let mut upper = a.to_vec();
    upper.push(alpha);
    let h = hyp_pfq(&HypergeometricSpec::new(&upper, b, x / s), &SeriesControl::default())?.into_value("laplace_hyp_check")?;
    Ok(gamma(alpha)? * cx::pow(s, -alpha) * h)
}

pub fn laplace_hyp_check(
    a: &[Complex],
    b: &[Complex],
    alpha: Complex,
    s: Complex,
    x: Complex,
    tol: f64,
) -> Result<CheckRecord> {
    let spec = laplace_spec(a, b, alpha, s, x)?;
    let mut params = Params::new();
    for (i, &v) in a.iter().enumerate() {
        params = params.with_complex(&format!("a{}", i + 1), v);
    }
    for (i, &v) in b.iter().enumerate() {
        params = params.with_complex(&format!("b{}", i + 1), v);
    }
    let params = params
        .with_complex("alpha", alpha)
        .with_complex("s", s)
        .with_complex("x", x);
    Ok(run("J0", params, &spec, laplace_closed_form(a, b, alpha, s, x), tol))
}
