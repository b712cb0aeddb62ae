use serde::{Deserialize, Serialize};

use super::{sort_roots, Method, RootSet};
use crate::cx::{self, c, Complex, ZERO};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CubicSign {
    Plus,
    Minus,
}

/// x^3 + 3mx + 2n = 0 (Plus) or x^3 - 3mx + 2n = 0 (Minus), m > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CubicSpec {
    pub sign: CubicSign,
    pub m: f64,
    pub nn: Complex,
}

/// Which trigonometric form produced the roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CubicCase {
    Sinh,
    Cosh,
    Cos,
}

fn cubic_residual(spec: &CubicSpec, x: Complex) -> f64 {
    let s = match spec.sign {
        CubicSign::Plus => 3.0,
        CubicSign::Minus => -3.0,
    };
    (x * x * x + s * spec.m * x + 2.0 * spec.nn).norm()
}

/// Case selection: sinh for '+', cosh for real n with n^2 > m^3, cos otherwise.
pub fn cubic_case(spec: &CubicSpec) -> CubicCase {
    match spec.sign {
        CubicSign::Plus => CubicCase::Sinh,
        CubicSign::Minus => {
            let n = spec.nn;
            if n.im == 0.0 && n.re * n.re > spec.m.powi(3) {
                CubicCase::Cosh
            } else {
                CubicCase::Cos
            }
        }
    }
}

/// The three roots in the order x1, x2, x3 of the trigonometric forms (unsorted).
pub fn cubic_roots_raw(spec: &CubicSpec) -> Result<[Complex; 3]> {
    if !(spec.m > 0.0) {
        return Err(Error::domain("cubic_roots", format!("m = {} must be positive", spec.m)));
    }
    let sm = spec.m.sqrt();
    let w = spec.nn / spec.m.powf(1.5);
    let r3 = 3f64.sqrt();
    Ok(match cubic_case(spec) {
        CubicCase::Sinh => {
            let th = cx::asinh(w) / 3.0;
            let (s, ch) = (th.sinh(), th.cosh());
            [-2.0 * sm * s, sm * (s + cx::I * r3 * ch), sm * (s - cx::I * r3 * ch)]
        }
        CubicCase::Cosh => {
            let th = cx::acosh(w) / 3.0;
            let (ch, s) = (th.cosh(), th.sinh());
            [-2.0 * sm * ch, sm * (ch + cx::I * r3 * s), sm * (ch - cx::I * r3 * s)]
        }
        CubicCase::Cos => {
            // clamp onto [-1, 1] on the real boundary
            let w = if w.im == 0.0 { c(w.re.clamp(-1.0, 1.0)) } else { w };
            let th = cx::acos(w) / 3.0;
            let (co, s) = (th.cos(), th.sin());
            [-2.0 * sm * co, sm * (co + r3 * s), sm * (co - r3 * s)]
        }
    })
}

pub fn cubic_roots(spec: &CubicSpec) -> Result<RootSet> {
    let roots = sort_roots(cubic_roots_raw(spec)?.to_vec());
    let residuals = roots.iter().map(|&x| cubic_residual(spec, x)).collect();
    Ok(RootSet {
        roots,
        method: Method::ClosedForm,
        residuals,
    })
}

/// Roots of y^3 - 3my + 2n = 0 for arbitrary complex m, n (cos form, or cube roots when m = 0).
pub fn depressed_cubic_complex(m: Complex, n: Complex) -> [Complex; 3] {
    if m == ZERO {
        let r = cx::cbrt(-2.0 * n);
        let w = Complex::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        return [r, r * w, r * w * w];
    }
    let sm = cx::sqrt(m);
    let w = n / (m * sm);
    let th = cx::acos(w) / 3.0;
    let (co, s) = (th.cos(), th.sin());
    let r3 = 3f64.sqrt();
    [-2.0 * sm * co, sm * (co + r3 * s), sm * (co - r3 * s)]
}
