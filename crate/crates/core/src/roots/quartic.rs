use serde::{Deserialize, Serialize};

use super::cubic::depressed_cubic_complex;
use super::{sort_roots, Method, RootSet};
use crate::cx::{self, Complex, ZERO};
use crate::error::{Error, Result};

/// x^4 + p x^2 + q x + r = 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuarticSpec {
    pub p: Complex,
    pub q: Complex,
    pub r: Complex,
}

/// Descartes factorization (x^2 + alpha x + beta)(x^2 - alpha x + gamma).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DescartesFactors {
    pub alpha: Complex,
    pub beta: Complex,
    pub gamma: Complex,
    /// Roots of the resolvent in xi = alpha^2.
    pub xi: [Complex; 3],
}

impl DescartesFactors {
    /// x1, x2 from the first factor, x3, x4 from the second.
    pub fn roots(&self) -> [Complex; 4] {
        let (a, b, g) = (self.alpha, self.beta, self.gamma);
        let d1 = cx::sqrt(a * a - 4.0 * b);
        let d2 = cx::sqrt(a * a - 4.0 * g);
        [(-a + d1) * 0.5, (-a - d1) * 0.5, (a + d2) * 0.5, (a - d2) * 0.5]
    }
}

/// Resolvent xi^3 + 2p xi^2 + (p^2 - 4r) xi - q^2 = 0, solved through its depressed form.
pub fn resolvent_roots(spec: &QuarticSpec) -> [Complex; 3] {
    let QuarticSpec { p, q, r } = *spec;
    let pp = -p * p / 3.0 - 4.0 * r;
    let qq = -2.0 * p * p * p / 27.0 + 8.0 * p * r / 3.0 - q * q;
    let ys = depressed_cubic_complex(-pp / 3.0, qq * 0.5);
    ys.map(|y| y - 2.0 * p / 3.0)
}

pub fn quartic_descartes(spec: &QuarticSpec) -> Result<DescartesFactors> {
    const F: &str = "quartic_roots";
    if spec.q == ZERO {
        return Err(Error::Degenerate {
            function: F,
            reason: "q = 0 (biquadratic)".into(),
        });
    }
    let xi = resolvent_roots(spec);
    // largest |alpha^2| first; fall through to the next root when gamma vanishes
    let mut order = xi;
    order.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
    for cand in order {
        let alpha = cx::sqrt(cand);
        if alpha == ZERO {
            continue;
        }
        let gamma = (spec.p + alpha * alpha + spec.q / alpha) * 0.5;
        let scale = 1.0 + spec.p.norm() + alpha.norm_sqr() + (spec.q / alpha).norm();
        if gamma.norm() <= 1e-14 * scale {
            continue;
        }
        return Ok(DescartesFactors {
            alpha,
            beta: spec.r / gamma,
            gamma,
            xi,
        });
    }
    Err(Error::Degenerate {
        function: F,
        reason: "gamma = 0 for every resolvent root".into(),
    })
}

pub fn quartic_residual(spec: &QuarticSpec, x: Complex) -> f64 {
    let x2 = x * x;
    (x2 * x2 + spec.p * x2 + spec.q * x + spec.r).norm()
}

pub fn quartic_roots(spec: &QuarticSpec) -> Result<RootSet> {
    let f = quartic_descartes(spec)?;
    let roots = sort_roots(f.roots().to_vec());
    let residuals = roots.iter().map(|&x| quartic_residual(spec, x)).collect();
    Ok(RootSet {
        roots,
        method: Method::ClosedForm,
        residuals,
    })
}
