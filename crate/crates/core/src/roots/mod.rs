//! Roots of the trinomial x^n - x + t = 0: hypergeometric and Lagrange series,
//! and closed forms for n = 2, 3, 4.

pub mod cubic;
pub mod quartic;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::cx::{self, c, Complex, ONE, ZERO};
use crate::error::{Error, Result};
use crate::specfun::hyper::{hyp_pfq, HypergeometricSpec, SeriesControl};

pub use cubic::{cubic_case, cubic_roots, cubic_roots_raw, depressed_cubic_complex, CubicCase, CubicSign, CubicSpec};
pub use quartic::{quartic_descartes, quartic_roots, resolvent_roots, DescartesFactors, QuarticSpec};

/// Largest |z| accepted by the series route.
pub const SERIES_CUTOFF: f64 = 0.999;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrinomialInstance {
    pub n: u32,
    pub t: Complex,
}

impl TrinomialInstance {
    pub fn new(n: u32, t: Complex) -> Self {
        Self { n, t }
    }

    /// Argument n (n t / (n-1))^{n-1} of the hypergeometric form.
    pub fn series_argument(&self) -> Complex {
        let n = self.n as f64;
        n * (self.t * n / (n - 1.0)).powi(self.n as i32 - 1)
    }

    /// Radius in |t| of the series disc.
    pub fn disc_radius(n: u32) -> f64 {
        let nf = n as f64;
        (nf - 1.0) / nf * (1.0 / nf).powf(1.0 / (nf - 1.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Series,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootSet {
    pub roots: Vec<Complex>,
    pub method: Method,
    pub residuals: Vec<f64>,
}

pub(crate) fn sort_roots(mut roots: Vec<Complex>) -> Vec<Complex> {
    roots.sort_by(|a, b| match a.re.total_cmp(&b.re) {
        Ordering::Equal => a.im.total_cmp(&b.im),
        o => o,
    });
    roots
}

/// |x^n - x + t|.
pub fn residual(inst: &TrinomialInstance, x: Complex) -> f64 {
    (x.powi(inst.n as i32) - x + inst.t).norm()
}

fn check_degree(n: u32, f: &'static str) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(f, format!("degree {n} < 2")));
    }
    Ok(())
}

/// t * nF_{n-1}(1/n, .., n/n; 2/(n-1), .., n/(n-1); z), equal parameters cancelled.
pub fn root_hypergeometric(inst: &TrinomialInstance, ctrl: &SeriesControl) -> Result<Complex> {
    const F: &str = "root_hypergeometric";
    check_degree(inst.n, F)?;
    if inst.t == ZERO {
        return Ok(ZERO);
    }
    let n = inst.n as u64;
    let z = inst.series_argument();
    if !(z.norm() <= SERIES_CUTOFF) {
        return Err(Error::domain(
            F,
            format!("|z| = {} outside the series disc (cutoff {SERIES_CUTOFF})", z.norm()),
        ));
    }
    let mut upper = Vec::new();
    let mut lower: Vec<u64> = (2..=n).collect();
    for j in 1..=n {
        // j/n == k/(n-1)  <=>  j (n-1) == k n
        if let Some(pos) = lower.iter().position(|&k| j * (n - 1) == k * n) {
            lower.remove(pos);
        } else {
            upper.push(c(j as f64 / n as f64));
        }
    }
    let lower: Vec<Complex> = lower.into_iter().map(|k| c(k as f64 / (n - 1) as f64)).collect();
    let spec = HypergeometricSpec::new(&upper, &lower, z);
    let r = hyp_pfq(&spec, ctrl)?.into_value(F)?;
    Ok(inst.t * r)
}

/// (nk)! / (k! (nk-k+1)!), exact while it fits in u128.
pub fn lagrange_coefficient(n: u32, k: u32) -> f64 {
    let (n, k) = (n as u128, k as u128);
    let top = n * k;
    // C(nk, k) built as a running binomial, always integral
    let mut b: u128 = 1;
    let mut exact = true;
    for i in 1..=k {
        match b.checked_mul(top - k + i) {
            Some(v) => b = v / i,
            None => {
                exact = false;
                break;
            }
        }
    }
    if exact {
        let d = top - k + 1;
        if b % d == 0 {
            return (b / d) as f64;
        }
        return b as f64 / d as f64;
    }
    let mut v = 1.0f64;
    for i in 1..=k {
        v *= (top - k + i) as f64 / i as f64;
    }
    v / (top - k + 1) as f64
}

/// t [1 + sum_{k=1}^K c_k t^{(n-1)k}].
pub fn root_lagrange_partial(inst: &TrinomialInstance, k_max: u32) -> Complex {
    if inst.t == ZERO {
        return ZERO;
    }
    let step = inst.t.powi(inst.n as i32 - 1);
    let mut pow = ONE;
    let mut sum = ONE;
    for k in 1..=k_max {
        pow *= step;
        sum += lagrange_coefficient(inst.n, k) * pow;
    }
    inst.t * sum
}

/// {(1 - sqrt(1-4t))/2, (1 + sqrt(1-4t))/2}; the first entry is the series branch.
pub fn quadratic_roots(t: Complex) -> RootSet {
    let d = cx::sqrt(ONE - 4.0 * t);
    let plus = (ONE + d) * 0.5;
    // 2t/(1+d) equals (1-d)/2 without the cancellation near t = 0
    let minus = if plus == ZERO { (ONE - d) * 0.5 } else { t / plus };
    let inst = TrinomialInstance::new(2, t);
    let roots = vec![minus, plus];
    let residuals = roots.iter().map(|&x| residual(&inst, x)).collect();
    RootSet {
        roots,
        method: Method::ClosedForm,
        residuals,
    }
}

/// g(z) = -z^{1/6} cosh(acosh(-1/sqrt z)/3).
pub fn g_function(z: Complex) -> Result<Complex> {
    if z == ZERO {
        return Err(Error::Pole {
            function: "g_function",
            at: "z = 0".into(),
        });
    }
    let a = cx::acosh(-ONE / cx::sqrt(z)) / 3.0;
    Ok(-cx::powf(z, 1.0 / 6.0) * a.cosh())
}

/// Root x1 of x^4 - x + tau for tau = (3/4) 4^{-1/3} z^{1/3}, written through g(z).
fn quartic_x1_from_g(z: Complex) -> Result<Complex> {
    let g = g_function(z)?;
    let alpha = 2f64.powf(1.0 / 3.0) * cx::sqrt(g);
    let tau = 0.75 * 4f64.powf(-1.0 / 3.0) * cx::cbrt(z);
    let gamma = (alpha * alpha - ONE / alpha) * 0.5;
    if gamma == ZERO {
        return Err(Error::Degenerate {
            function: "series_branch_closed_form",
            reason: "gamma = 0".into(),
        });
    }
    let beta = tau / gamma;
    let d = cx::sqrt(alpha * alpha - 4.0 * beta);
    let s = alpha + d;
    // (-alpha + d)/2 = -2 beta/(alpha + d), the second form is stable for small tau
    Ok(if s.norm() > alpha.norm() * 0.5 {
        -2.0 * beta / s
    } else {
        (d - alpha) * 0.5
    })
}

/// The closed-form root that continues the series branch x(0) = 0.
///
/// n = 2: (1 - sqrt(1-4t))/2. n = 3: (cos th - sqrt3 sin th)/sqrt3 with
/// th = acos(3 sqrt3 t/2)/3. n = 4: the Descartes root x1 at the principal
/// tau = (3/4) 4^{-1/3} z^{1/3}, rotated by t/tau (the equation is invariant
/// under x -> w x, t -> w t for w^3 = 1).
pub fn series_branch_closed_form(inst: &TrinomialInstance) -> Result<Complex> {
    const F: &str = "series_branch_closed_form";
    let t = inst.t;
    match inst.n {
        2 => Ok(quadratic_roots(t).roots[0]),
        3 => {
            let r3 = 3f64.sqrt();
            let th = cx::acos(t * (1.5 * r3)) / 3.0;
            Ok((th.cos() - r3 * th.sin()) / r3)
        }
        4 => {
            if t == ZERO {
                return Ok(ZERO);
            }
            let z = 4.0 * (t * 4.0 / 3.0).powi(3);
            let tau = 0.75 * 4f64.powf(-1.0 / 3.0) * cx::cbrt(z);
            Ok(t / tau * quartic_x1_from_g(z)?)
        }
        n => Err(Error::domain(F, format!("no closed form for n = {n}"))),
    }
}

/// All roots by the radical/trigonometric route, n in {2, 3, 4}.
pub fn closed_form_roots(inst: &TrinomialInstance) -> Result<RootSet> {
    const F: &str = "closed_form_roots";
    let mut set = match inst.n {
        2 => return Ok(quadratic_roots(inst.t)),
        3 => cubic_roots(&CubicSpec {
            sign: CubicSign::Minus,
            m: 1.0 / 3.0,
            nn: inst.t * 0.5,
        })?,
        4 => quartic_roots(&QuarticSpec {
            p: ZERO,
            q: -ONE,
            r: inst.t,
        })?,
        n => return Err(Error::domain(F, format!("no closed form for n = {n}"))),
    };
    set.residuals = set.roots.iter().map(|&x| residual(inst, x)).collect();
    Ok(set)
}

/// Series route packaged as a one-root set.
pub fn series_roots(inst: &TrinomialInstance, ctrl: &SeriesControl) -> Result<RootSet> {
    let x = root_hypergeometric(inst, ctrl)?;
    Ok(RootSet {
        roots: vec![x],
        method: Method::Series,
        residuals: vec![residual(inst, x)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: u32, t: f64) -> TrinomialInstance {
        TrinomialInstance::new(n, c(t))
    }

    #[test]
    fn quadratic_examples() {
        let r = quadratic_roots(ZERO);
        assert_eq!(r.roots, vec![ZERO, ONE]);
        let r = quadratic_roots(c(0.25));
        assert!((r.roots[0] - c(0.5)).norm() < 1e-15 && (r.roots[1] - c(0.5)).norm() < 1e-15);
        let r = quadratic_roots(c(0.21));
        assert!((r.roots[0] - c(0.3)).norm() < 1e-15);
        assert!((r.roots[1] - c(0.7)).norm() < 1e-15);
    }

    #[test]
    fn series_matches_quadratic_formula() {
        let ctrl = SeriesControl::default();
        let x = root_hypergeometric(&inst(2, 0.1), &ctrl).unwrap();
        let want = (1.0 - 0.6f64.sqrt()) / 2.0;
        assert!((x.re - want).abs() < 1e-12);
        assert_eq!(root_hypergeometric(&inst(2, 0.0), &ctrl).unwrap(), ZERO);
    }

    #[test]
    fn series_outside_disc_rejected() {
        let ctrl = SeriesControl::default();
        assert!(root_hypergeometric(&inst(2, 0.3), &ctrl).is_err());
        assert!(root_hypergeometric(&inst(1, 0.1), &ctrl).is_err());
    }

    #[test]
    fn cubic_series_residual() {
        let i = inst(3, 0.2);
        let x = root_hypergeometric(&i, &SeriesControl::default()).unwrap();
        assert!(residual(&i, x) < 1e-10);
        let cf = series_branch_closed_form(&i).unwrap();
        assert!((x - cf).norm() < 1e-10);
        let set = closed_form_roots(&i).unwrap();
        assert!(set.roots.iter().any(|r| (r - x).norm() < 1e-10));
    }

    #[test]
    fn residual_examples() {
        assert_eq!(residual(&inst(2, 0.0), ZERO), 0.0);
        assert!(residual(&inst(2, 0.21), c(0.3)) < 1e-16);
        assert_eq!(residual(&inst(3, 0.0), c(2.0)), 6.0);
    }

    #[test]
    fn catalan_coefficients() {
        let want = [1.0, 1.0, 2.0, 5.0, 14.0, 42.0, 132.0, 429.0, 1430.0, 4862.0, 16796.0];
        for (k, w) in want.iter().enumerate().skip(1) {
            assert_eq!(lagrange_coefficient(2, k as u32), *w);
        }
        assert_eq!(root_lagrange_partial(&inst(3, 0.0), 10), ZERO);
    }

    #[test]
    fn lagrange_matches_series() {
        let i = inst(3, 0.1);
        let x = root_hypergeometric(&i, &SeriesControl::default()).unwrap();
        assert!((root_lagrange_partial(&i, 30) - x).norm() < 1e-10);
    }

    #[test]
    fn g_at_one() {
        let g = g_function(ONE).unwrap();
        assert!((g - c(-0.5)).norm() < 1e-15);
        assert!(g_function(ZERO).is_err());
    }

    #[test]
    fn g_solves_resolvent() {
        for t in [0.05, 0.1, -0.1] {
            let z = 4.0 * (4.0 * t / 3.0f64).powi(3);
            let xi = 2f64.powf(2.0 / 3.0) * g_function(c(z)).unwrap();
            // principal cube root of z fixes the sector of tau
            let tau = 0.75 * 4f64.powf(-1.0 / 3.0) * cx::cbrt(c(z));
            let r = xi * xi * xi - 4.0 * tau * xi - 1.0;
            assert!(r.norm() < 1e-10, "t={t}: {r}");
        }
    }

    #[test]
    fn quartic_series_branch() {
        let i = inst(4, 0.05);
        let x = root_hypergeometric(&i, &SeriesControl::default()).unwrap();
        let cf = series_branch_closed_form(&i).unwrap();
        assert!((x - cf).norm() < 1e-12, "{x} vs {cf}");
        let f = quartic_descartes(&QuarticSpec {
            p: ZERO,
            q: -ONE,
            r: c(0.05),
        })
        .unwrap();
        assert!(f.roots().iter().any(|r| (r - x).norm() < 1e-12));
    }

    #[test]
    fn closed_form_unsupported_degree() {
        assert!(closed_form_roots(&inst(5, 0.1)).is_err());
    }

    #[test]
    fn disc_radii() {
        assert!((TrinomialInstance::disc_radius(2) - 0.25).abs() < 1e-15);
        assert!((TrinomialInstance::disc_radius(3) - 2.0 / (3.0 * 3f64.sqrt())).abs() < 1e-15);
    }
}
