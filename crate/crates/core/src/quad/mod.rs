//! Semi-infinite quadrature with endpoint-singularity removal, and the integral checks.

mod checks;
pub(crate) mod gk;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::cx::Complex;
use crate::error::{Error, Result};

pub use checks::{
    check_integral_j1, check_integral_j2, check_integral_j3, j1_closed_form, j1_spec, j2_closed_form,
    j2_spec, j3_closed_form, j3_spec, laplace_closed_form, laplace_hyp_check, laplace_spec, IntegralId,
};

pub const DEFAULT_BUDGET: usize = 200_000;

pub type RealFn = Arc<dyn Fn(f64) -> Complex + Send + Sync>;

/// How the integrand behaves as t -> infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Tail {
    /// |f(t)| ~ exp(-rate t) up to powers of t.
    Exponential { rate: f64 },
    /// |f(t)| ~ t^power with power < -1.
    Algebraic { power: f64 },
}

#[derive(Clone)]
pub struct IntegralSpec {
    pub integrand_id: String,
    pub integrand: RealFn,
    /// Leading power of t at 0; must exceed -1.
    pub singular_exponent: f64,
    pub tail: Tail,
    pub budget: usize,
}

impl fmt::Debug for IntegralSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntegralSpec")
            .field("integrand_id", &self.integrand_id)
            .field("singular_exponent", &self.singular_exponent)
            .field("tail", &self.tail)
            .field("budget", &self.budget)
            .finish()
    }
}

impl IntegralSpec {
    pub fn new(
        id: impl Into<String>,
        f: impl Fn(f64) -> Complex + Send + Sync + 'static,
        singular_exponent: f64,
        tail: Tail,
    ) -> Self {
        Self {
            integrand_id: id.into(),
            integrand: Arc::new(f),
            singular_exponent,
            tail,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn decay_rate(&self) -> f64 {
        match self.tail {
            Tail::Exponential { rate } => rate,
            Tail::Algebraic { .. } => 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadResult {
    pub value: Complex,
    pub est_error: f64,
    pub evaluations: usize,
}

/// Exponent m for t = u^m such that the substituted integrand is smooth at 0.
pub fn substitution_power(exponent: f64) -> f64 {
    if exponent >= 0.0 && exponent.fract() == 0.0 {
        return 1.0;
    }
    for m in 1..=12 {
        let p = m as f64 * (exponent + 1.0);
        if (p - p.round()).abs() < 1e-9 {
            return m as f64;
        }
    }
    // bounded integrand, not necessarily smooth
    (1.0 / (1.0 + exponent)).max(1.0)
}

struct Piece {
    value: Complex,
    err: f64,
    evals: usize,
    converged: bool,
}

/// Integrates f(t) on [0, b] after t = u^m.
fn integrate_near_zero(f: &RealFn, exponent: f64, b: f64, tol: f64, budget: usize, m: Option<f64>) -> Piece {
    let m = m.unwrap_or_else(|| substitution_power(exponent));
    let ub = b.powf(1.0 / m);
    let g = |u: f64| {
        if m == 1.0 {
            f(u)
        } else {
            let t = u.powf(m);
            f(t) * (m * u.powf(m - 1.0))
        }
    };
    let r = gk::integrate(&g, 0.0, ub, tol, 0.0, budget, 16);
    Piece {
        value: r.value,
        err: r.err,
        evals: r.evals,
        converged: r.converged,
    }
}

fn integrate_impl(spec: &IntegralSpec, tol: f64, m: Option<f64>) -> Result<QuadResult> {
    const F: &str = "integrate_semi_infinite";
    let e = spec.singular_exponent;
    if !(e > -1.0) {
        return Err(Error::domain(F, format!("singular exponent {e} <= -1")));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(F, "tolerance must be positive"));
    }
    let f = &spec.integrand;
    let budget = spec.budget;
    let piece = match spec.tail {
        Tail::Exponential { rate } => {
            if !(rate > 0.0) {
                return Err(Error::domain(F, format!("decay rate {rate} <= 0")));
            }
            let mut t_end = (50.0 / rate).max(40.0);
            let mut tail = f(t_end).norm() / rate;
            let mut grow = 0;
            while !(tail <= tol / 10.0) && grow < 12 {
                t_end *= 1.5;
                tail = f(t_end).norm() / rate;
                grow += 1;
            }
            if !tail.is_finite() {
                tail = f64::INFINITY;
            }
            let mut p = integrate_near_zero(f, e, t_end, tol * 0.5, budget, m);
            p.err += tail;
            p
        }
        Tail::Algebraic { power } => {
            if !(power < -1.0) {
                return Err(Error::domain(F, format!("tail power {power} >= -1")));
            }
            let head = integrate_near_zero(f, e, 1.0, tol * 0.25, budget / 2, m);
            // t = 1/v maps [1, inf) to (0, 1]; f(1/v)/v^2 ~ v^(-power-2) near 0
            let inv: RealFn = {
                let f = f.clone();
                Arc::new(move |v: f64| f(1.0 / v) / (v * v))
            };
            let rest = integrate_near_zero(&inv, -power - 2.0, 1.0, tol * 0.25, budget / 2, None);
            Piece {
                value: head.value + rest.value,
                err: head.err + rest.err,
                evals: head.evals + rest.evals,
                converged: head.converged && rest.converged,
            }
        }
    };
    if !piece.converged || !(piece.err <= tol) {
        return Err(Error::BudgetExhausted {
            budget,
            re: piece.value.re,
            im: piece.value.im,
            est_error: piece.err,
        });
    }
    Ok(QuadResult {
        value: piece.value,
        est_error: piece.err,
        evaluations: piece.evals,
    })
}

/// Integrates spec.integrand over (0, inf) to absolute error `tol`.
pub fn integrate_semi_infinite(spec: &IntegralSpec, tol: f64) -> Result<QuadResult> {
    integrate_impl(spec, tol, None)
}

/// Same as [`integrate_semi_infinite`] with the substitution power forced to 1.
pub fn integrate_semi_infinite_plain(spec: &IntegralSpec, tol: f64) -> Result<QuadResult> {
    integrate_impl(spec, tol, Some(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cx::c;
    use std::f64::consts::PI;

    #[test]
    fn basic_integrals() {
        let s = IntegralSpec::new("exp", |t| c((-t).exp()), 0.0, Tail::Exponential { rate: 1.0 });
        let r = integrate_semi_infinite(&s, 1e-12).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-12);
        let s = IntegralSpec::new(
            "half",
            |t| c((-t).exp() / t.sqrt()),
            -0.5,
            Tail::Exponential { rate: 1.0 },
        );
        let r = integrate_semi_infinite(&s, 1e-12).unwrap();
        assert!((r.value.re - PI.sqrt()).abs() < 1e-11);
        let s = IntegralSpec::new(
            "diff",
            |t| c((-2.0 * t).exp() / t.sqrt() * (1.0 - (-t).exp())),
            0.5,
            Tail::Exponential { rate: 2.0 },
        );
        let r = integrate_semi_infinite(&s, 1e-12).unwrap();
        let want = PI.sqrt() * (0.5f64.sqrt() - (1.0f64 / 3.0).sqrt());
        assert!((r.value.re - want).abs() < 1e-11);
    }

    #[test]
    fn algebraic_tail() {
        // int_0^inf dt / ((1 + t) sqrt t) = pi
        let s = IntegralSpec::new(
            "alg",
            |t| c(1.0 / ((1.0 + t) * t.sqrt())),
            -0.5,
            Tail::Algebraic { power: -1.5 },
        );
        let r = integrate_semi_infinite(&s, 1e-11).unwrap();
        assert!((r.value.re - PI).abs() < 1e-10);
    }

    #[test]
    fn rejects_bad_specs() {
        let s = IntegralSpec::new("x", |t| c(1.0 / t), -1.0, Tail::Exponential { rate: 1.0 });
        assert!(integrate_semi_infinite(&s, 1e-8).is_err());
        let s = IntegralSpec::new("x", |t| c(t), 0.0, Tail::Exponential { rate: 0.0 });
        assert!(integrate_semi_infinite(&s, 1e-8).is_err());
    }

    #[test]
    fn substitution_powers() {
        assert_eq!(substitution_power(-0.5), 2.0);
        assert_eq!(substitution_power(-5.0 / 6.0), 6.0);
        assert_eq!(substitution_power(0.0), 1.0);
        assert_eq!(substitution_power(1.5), 2.0);
    }
}
