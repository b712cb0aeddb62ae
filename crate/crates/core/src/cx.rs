//! Complex scalar type and principal-branch elementary functions.
//!
//! Every multivalued function here takes arg in (-pi, pi]. A signed zero in the
//! imaginary part is folded to +0 first, so values on a cut always land on the
//! upper side.

use num_complex::Complex64;

pub type Complex = Complex64;

pub const I: Complex = Complex::new(0.0, 1.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const ZERO: Complex = Complex::new(0.0, 0.0);

#[inline]
pub fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

#[inline]
fn canon(z: Complex) -> Complex {
    Complex::new(z.re + 0.0, z.im + 0.0)
}

pub fn ln(z: Complex) -> Complex {
    canon(z).ln()
}

pub fn sqrt(z: Complex) -> Complex {
    canon(z).sqrt()
}

/// Principal `z^w`; `0^w` is 0 for Re w > 0 and 1 for w = 0.
pub fn pow(z: Complex, w: Complex) -> Complex {
    if z == ZERO {
        if w == ZERO {
            return ONE;
        }
        if w.re > 0.0 {
            return ZERO;
        }
        return Complex::new(f64::INFINITY, 0.0);
    }
    if w.im == 0.0 {
        return powf(z, w.re);
    }
    (w * ln(z)).exp()
}

pub fn powf(z: Complex, w: f64) -> Complex {
    if z == ZERO {
        return if w == 0.0 {
            ONE
        } else if w > 0.0 {
            ZERO
        } else {
            Complex::new(f64::INFINITY, 0.0)
        };
    }
    if w.fract() == 0.0 && w.abs() <= 64.0 {
        return z.powi(w as i32);
    }
    let z = canon(z);
    Complex::from_polar(z.norm().powf(w), w * z.arg())
}

pub fn cbrt(z: Complex) -> Complex {
    powf(z, 1.0 / 3.0)
}

pub fn asin(z: Complex) -> Complex {
    let z = canon(z);
    -I * ln(I * z + sqrt(ONE - z * z))
}

pub fn acos(z: Complex) -> Complex {
    let z = canon(z);
    -I * ln(z + I * sqrt(ONE - z * z))
}

pub fn asinh(z: Complex) -> Complex {
    let z = canon(z);
    ln(z + sqrt(z * z + ONE))
}

pub fn acosh(z: Complex) -> Complex {
    let z = canon(z);
    ln(z + sqrt(z + ONE) * sqrt(z - ONE))
}

/// Relative distance with an absolute floor, used for tolerance checks.
pub fn rel_err(a: Complex, b: Complex) -> f64 {
    let d = (a - b).norm();
    let s = a.norm().max(b.norm());
    if s == 0.0 {
        d
    } else {
        d / s
    }
}

pub fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Nonpositive integer test, exact on the representable grid.
pub fn nonpositive_integer(z: Complex) -> Option<u64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 && z.re > -1e15 {
        Some((-z.re) as u64)
    } else {
        None
    }
}

/// Formats with 15 significant digits, `re+imi` when the imaginary part is nonzero.
pub fn format(z: Complex) -> String {
    let re = format_real(z.re);
    if z.im == 0.0 {
        return re;
    }
    let im = format_real(z.im.abs());
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

pub fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&exp) {
        let s = format!("{:.14e}", x);
        let (mant, e) = s.split_once('e').unwrap();
        let mant = trim_zeros(mant);
        return format!("{mant}e{e}");
    }
    let decimals = (14 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Parses `a`, `a+bi`, `a-bi`, `bi`, `i`, `-i`.
pub fn parse(s: &str) -> Option<Complex> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Ok(x) = s.parse::<f64>() {
        return Some(c(x));
    }
    let body = s.strip_suffix('i')?;
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            split = Some(k);
            break;
        }
    }
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let re: f64 = re.parse().ok()?;
    let im: f64 = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse().ok()?,
    };
    Some(Complex::new(re, im))
}
