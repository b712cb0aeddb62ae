use std::f64::consts::PI;

use crate::cx::{self, Complex, ONE, ZERO};
use crate::error::{Error, Result};

// Lanczos kernel, g = 7, nine coefficients.
const G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// log Gamma on Re z >= 1/2 (not the principal log-gamma branch; only exp of it is used).
fn ln_gamma_right(z: Complex) -> Complex {
    let z = z - ONE;
    let mut x = Complex::new(LANCZOS[0], 0.0);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        x += p / (z + i as f64);
    }
    let t = z + G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + x.ln()
}

/// sin(pi z) with the integer part removed first.
pub(crate) fn sin_pi(z: Complex) -> Complex {
    let n = z.re.round();
    let r = z - n;
    let s = (PI * r).sin();
    if (n as i64).rem_euclid(2) == 1 {
        -s
    } else {
        s
    }
}

/// Complex gamma function.
pub fn gamma(z: Complex) -> Result<Complex> {
    if let Some(n) = cx::nonpositive_integer(z) {
        return Err(Error::Pole {
            function: "gamma",
            at: format!("-{n}"),
        });
    }
    let v = if z.re >= 0.5 {
        ln_gamma_right(z).exp()
    } else {
        PI / (sin_pi(z) * ln_gamma_right(ONE - z).exp())
    };
    if !cx::is_finite(v) {
        return Err(Error::Overflow { function: "gamma" });
    }
    Ok(v)
}

/// 1/Gamma(z), entire; exactly 0 at the poles of Gamma.
pub fn rgamma(z: Complex) -> Complex {
    if cx::nonpositive_integer(z).is_some() {
        return ZERO;
    }
    if z.re >= 0.5 {
        (-ln_gamma_right(z)).exp()
    } else {
        sin_pi(z) * ln_gamma_right(ONE - z).exp() / PI
    }
}

/// Real-argument convenience wrapper.
pub fn gamma_real(x: f64) -> Result<f64> {
    gamma(cx::c(x)).map(|v| v.re)
}

/// Rising factorial (a)_k.
pub fn pochhammer(a: Complex, k: usize) -> Complex {
    let mut p = ONE;
    for j in 0..k {
        p *= a + j as f64;
    }
    p
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}
