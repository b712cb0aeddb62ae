//! Left- and right-hand sides of the catalog entries.
//!
//! Left sides go through the hypergeometric, incomplete-gamma/beta and Legendre
//! evaluators; right sides use only elementary functions, gamma and Pochhammer.
//! The two never call each other.

use std::f64::consts::PI;

use crate::check::Params;
use crate::cx::{self, c, Complex, I, ONE, ZERO};
use crate::error::{Error, Result};
use crate::roots::g_function;
use crate::specfun::{
    bell_polynomial, factorial, hyp1f1, hyp2f1, hyp2f1_regularized, hyp3f2, incomplete_beta,
    legendre_p, legendre_polynomial, lower_incomplete_gamma, pochhammer,
};

/// A right-hand value with the cancellation factor of its final subtraction.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Rhs {
    pub value: Complex,
    pub cond: f64,
}

impl Rhs {
    fn exact(value: Complex) -> Self {
        Self { value, cond: 1.0 }
    }
}

/// sum_{k<=m} (a)_k/k! w^k together with sum of |terms|.
fn partial(a: f64, m: usize, w: Complex) -> (Complex, f64) {
    let mut term = ONE;
    let mut sum = ONE;
    let mut mag = 1.0;
    for k in 0..m {
        term *= (a + k as f64) / (k + 1) as f64 * w;
        sum += term;
        mag += term.norm();
    }
    (sum, mag)
}

fn cond(mag: f64, v: Complex) -> f64 {
    if v.norm() == 0.0 {
        f64::INFINITY
    } else {
        (mag / v.norm()).max(1.0)
    }
}

fn sign(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn half_poch(n: usize) -> Complex {
    pochhammer(c(0.5), n)
}

fn n_of(p: &Params) -> Result<usize> {
    Ok(p.int("n")? as usize)
}

fn divergent(f: &'static str) -> Error {
    Error::divergent(f, "t = 1 with n >= 1")
}

// I01

pub(crate) fn i01_lhs(p: &Params) -> Result<Complex> {
    hyp2f1(c(0.5), ONE, c(2.0), p.complex("t")?)
}

pub(crate) fn i01_rhs(p: &Params) -> Result<Rhs> {
    let t = p.complex("t")?;
    if t == ZERO {
        return Ok(Rhs::exact(ONE));
    }
    let q = cx::sqrt(ONE - t);
    let br = ONE - q;
    Ok(Rhs {
        value: 2.0 / t * br,
        cond: cond(1.0 + q.norm(), br),
    })
}

// I02 / I05 share the left side

pub(crate) fn i02_lhs(p: &Params) -> Result<Complex> {
    let n = n_of(p)? as f64;
    hyp2f1(c(0.5 + n), c(1.0 + n), c(2.0 + n), p.complex("t")?)
}

fn i02_pref(n: usize, t: Complex) -> Complex {
    2.0 * sign(n) * factorial(n + 1) / (half_poch(n) * t.powi(n as i32 + 1))
}

pub(crate) fn i02_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let t = p.complex("t")?;
    if t == ZERO {
        return Ok(Rhs::exact(ONE));
    }
    if t == ONE {
        return if n == 0 { Ok(Rhs::exact(c(2.0))) } else { Err(divergent("I02 rhs")) };
    }
    let q = cx::sqrt(ONE - t);
    let (s, mag) = partial(-0.5, n, t / (t - 1.0));
    let br = ONE - q * s;
    Ok(Rhs {
        value: i02_pref(n, t) * br,
        cond: cond(1.0 + q.norm() * mag, br),
    })
}

pub(crate) fn i05_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let t = p.complex("t")?;
    if t == ZERO {
        return Ok(Rhs::exact(ONE));
    }
    if t == ONE {
        return if n == 0 { Ok(Rhs::exact(c(2.0))) } else { Err(divergent("I05 rhs")) };
    }
    let f = cx::powf(ONE - t, 0.5 - n as f64);
    let (s, mag) = partial(0.5 - n as f64, n, t);
    let br = ONE - f * s;
    Ok(Rhs {
        value: i02_pref(n, t) * br,
        cond: cond(1.0 + f.norm() * mag, br),
    })
}

// I03

pub(crate) fn i03_lhs(p: &Params) -> Result<Complex> {
    let n = n_of(p)? as f64;
    hyp2f1(c(1.0 + 2.0 * n), c(1.5 + n), c(3.0 + 2.0 * n), p.complex("t")?)
}

pub(crate) fn i03_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let t = p.complex("t")?;
    if t == ZERO {
        return Ok(Rhs::exact(ONE));
    }
    if t == ONE {
        return if n == 0 { Ok(Rhs::exact(c(4.0))) } else { Err(divergent("I03 rhs")) };
    }
    let q = cx::sqrt(ONE - t);
    let u = t / (2.0 * cx::sqrt(t - 1.0));
    let (s, mag) = partial(-0.5, n, u * u);
    let br = 2.0 - t - 2.0 * q * s;
    let pref = sign(n) * factorial(n + 1) / half_poch(n) * (2.0 / t).powi(2 * (n as i32 + 1));
    Ok(Rhs {
        value: pref * br,
        cond: cond(2.0 + t.norm() + 2.0 * q.norm() * mag, br),
    })
}

// I04

pub(crate) fn i04_lhs(p: &Params) -> Result<Complex> {
    let n = n_of(p)? as f64;
    incomplete_beta(c(1.0 + n), c(0.5 - n), p.complex("t")?)
}

pub(crate) fn i04_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let t = p.complex("t")?;
    let k = 2.0 * sign(n) * factorial(n) / half_poch(n);
    if t == ZERO {
        return Ok(Rhs::exact(ZERO));
    }
    if t == ONE {
        return Ok(Rhs::exact(k));
    }
    let q = cx::sqrt(ONE - t);
    let (s, mag) = partial(-0.5, n, t / (t - 1.0));
    let br = ONE - q * s;
    Ok(Rhs {
        value: k * br,
        cond: cond(1.0 + q.norm() * mag, br),
    })
}

// I06

pub(crate) fn i06_lhs(p: &Params) -> Result<Complex> {
    let n = n_of(p)? as f64;
    hyp2f1_regularized(c(0.5), ONE, c(1.0 - n), p.complex("t")?)
}

pub(crate) fn i06_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let t = p.complex("t")?;
    if t == ONE {
        return Err(Error::Pole {
            function: "I06 rhs",
            at: "t = 1".into(),
        });
    }
    Ok(Rhs::exact(
        half_poch(n) / cx::sqrt(ONE - t) * (t / (ONE - t)).powi(n as i32),
    ))
}

// I07 / I08 / I09 share the left side

pub(crate) fn i07_lhs(p: &Params) -> Result<Complex> {
    let n = n_of(p)? as f64;
    hyp2f1(c(0.5), ONE, c(2.0 + n), p.complex("t")?)
}

fn i07_unit(n: usize) -> Complex {
    c(2.0 * (n as f64 + 1.0) / (2.0 * n as f64 + 1.0))
}

pub(crate) fn i07_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let t = p.complex("t")?;
    if t == ZERO {
        return Ok(Rhs::exact(ONE));
    }
    if t == ONE {
        return Ok(Rhs::exact(i07_unit(n)));
    }
    let q = cx::sqrt(ONE - t);
    let (s, mag) = partial(0.5, n, t / (t - 1.0));
    let br = ONE - s / q;
    let pref = 2.0 * factorial(n + 1) / (pochhammer(c(1.5), n) * q) * ((t - 1.0) / t).powi(n as i32 + 1);
    Ok(Rhs {
        value: pref * br,
        cond: cond(1.0 + mag / q.norm(), br),
    })
}

pub(crate) fn i08_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let t = p.complex("t")?;
    if t == ZERO {
        return Ok(Rhs::exact(ONE));
    }
    if t == ONE {
        return Ok(Rhs::exact(i07_unit(n)));
    }
    let q = cx::sqrt(ONE - t);
    let a = 2.0 / q * ((t - 1.0) / t).powi(n as i32 + 1);
    let v = ONE - ONE / q;
    let mut s = ZERO;
    let mut mag = 0.0;
    for k in 0..=n {
        let term = pochhammer(c(n as f64 + 1.0), k) / (factorial(k) * 2f64.powi((k + n) as i32))
            * v.powi(k as i32 - n as i32);
        s += term;
        mag += term.norm();
    }
    let br = a + s / (ONE - q);
    Ok(Rhs {
        value: 2.0 * factorial(n + 1) / pochhammer(c(1.5), n) * br,
        cond: cond(a.norm() + mag / (ONE - q).norm(), br),
    })
}

pub(crate) fn i09_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let t = p.complex("t")?;
    if t == ZERO {
        return Ok(Rhs::exact(ONE));
    }
    let f = cx::powf(ONE - t, n as f64 + 0.5);
    let (s, mag) = partial(-(n as f64) - 0.5, n, t);
    let br = f - s;
    let pref = 2.0 * factorial(n + 1) / (pochhammer(c(1.5), n) * (-t).powi(n as i32 + 1));
    Ok(Rhs {
        value: pref * br,
        cond: cond(f.norm() + mag, br),
    })
}

// I10

fn i10_x(t: Complex) -> Complex {
    ONE / cx::sqrt(ONE - t)
}

pub(crate) fn i10_lhs(p: &Params) -> Result<Complex> {
    let n = c(n_of(p)? as f64);
    legendre_p(-n, -n, i10_x(p.complex("t")?))
}

pub(crate) fn i10_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let t = p.complex("t")?;
    if t == ZERO {
        return Ok(Rhs::exact(ZERO));
    }
    let q = cx::sqrt(ONE - t);
    let (s, mag) = partial(0.5, n - 1, t / (t - 1.0));
    let br = ONE - s / q;
    let pref = ONE / (2f64.powi(n as i32) * half_poch(n)) * cx::powf((t - 1.0) / t, n as f64 / 2.0);
    Ok(Rhs {
        value: pref * br,
        cond: cond(1.0 + mag / q.norm(), br),
    })
}

// I11, I12

pub(crate) fn i11_lhs(p: &Params) -> Result<Complex> {
    let n = n_of(p)? as f64;
    hyp2f1_regularized(c(0.5 - n), c(1.0 - n), c(2.0 - n), p.complex("t")?)
}

pub(crate) fn i11_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let t = p.complex("t")?;
    Ok(Rhs::exact(2.0 * half_poch(n) * t.powi(n as i32 - 1)))
}

pub(crate) fn i12_lhs(p: &Params) -> Result<Complex> {
    let n = n_of(p)? as f64;
    legendre_p(c(n), c(n - 1.0), p.complex("t")?)
}

pub(crate) fn i12_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let t = p.complex("t")?;
    let v = -(-2f64).powi(n as i32) * half_poch(n) * t * cx::powf(ONE - t * t, (n as f64 - 1.0) / 2.0);
    Ok(Rhs::exact(v))
}

// I13, I14 family

fn third_asin(z: Complex) -> Complex {
    cx::asin(cx::sqrt(z)) / 3.0
}

pub(crate) fn i13_lhs(p: &Params) -> Result<Complex> {
    hyp2f1(c(1.0 / 3.0), c(2.0 / 3.0), c(1.5), p.complex("z")?)
}

pub(crate) fn i13_rhs(p: &Params) -> Result<Rhs> {
    let z = p.complex("z")?;
    if z == ZERO {
        return Ok(Rhs::exact(ONE));
    }
    Ok(Rhs::exact(3.0 / cx::sqrt(z) * third_asin(z).sin()))
}

/// Piecewise form for real z: (3/sqrt z) sin(asin(sqrt z)/3) for z <= 1, and
/// (3/(2 sqrt z)) [cosh(acosh(sqrt z)/3) - i sqrt3 sinh(acosh(sqrt z)/3)] for z > 1.
pub fn i13_piecewise(z: f64) -> Complex {
    if z <= 1.0 {
        return c(3.0 / z.sqrt() * ((z.sqrt()).asin() / 3.0).sin());
    }
    let h = z.sqrt().acosh() / 3.0;
    Complex::new(h.cosh(), -(3f64.sqrt()) * h.sinh()) * (1.5 / z.sqrt())
}

/// n-th derivative of sin(asin(sqrt z)/3) by Faa di Bruno over Bell polynomials.
pub fn faa_di_bruno_derivative(n: usize, z: Complex) -> Result<Complex> {
    const F: &str = "faa_di_bruno_derivative";
    if n == 0 {
        return Err(Error::domain(F, "n must be >= 1"));
    }
    if z == ZERO || z == ONE {
        return Err(Error::Pole {
            function: F,
            at: format!("z = {}", cx::format(z)),
        });
    }
    let w = cx::sqrt(z) * cx::sqrt(ONE - z);
    let y = (ONE - 2.0 * z) / (2.0 * I * w);
    // h_s = d^s/dz^s of asin(sqrt z)/3
    let h: Vec<Complex> = (1..=n)
        .map(|s| {
            (-I).powi(s as i32 - 1) * factorial(s - 1) / (6.0 * w.powi(s as i32))
                * legendre_polynomial(s - 1, y)
        })
        .collect();
    let u = third_asin(z);
    let mut sum = ZERO;
    for k in 1..=n {
        let outer = (u + k as f64 * PI / 2.0).sin();
        sum += outer * bell_polynomial(n, k, &h[..n - k + 1])?;
    }
    Ok(sum)
}

pub(crate) fn i14_lhs(p: &Params) -> Result<Complex> {
    let n = n_of(p)? as f64;
    hyp2f1_regularized(c(1.0 / 3.0), c(2.0 / 3.0), c(1.5 - n), p.complex("z")?)
}

pub(crate) fn i14_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let z = p.complex("z")?;
    let d = faa_di_bruno_derivative(n, z)?;
    Ok(Rhs::exact(6.0 * cx::powf(z, n as f64 - 0.5) / PI.sqrt() * d))
}

pub(crate) fn i14a_lhs(p: &Params) -> Result<Complex> {
    hyp2f1(c(1.0 / 3.0), c(2.0 / 3.0), c(0.5), p.complex("z")?)
}

pub(crate) fn i14a_rhs(p: &Params) -> Result<Rhs> {
    let z = p.complex("z")?;
    Ok(Rhs::exact(third_asin(z).cos() / cx::sqrt(ONE - z)))
}

pub(crate) fn i14b_lhs(p: &Params) -> Result<Complex> {
    hyp2f1(c(1.0 / 3.0), c(2.0 / 3.0), c(-0.5), p.complex("z")?)
}

pub(crate) fn i14b_rhs(p: &Params) -> Result<Rhs> {
    let z = p.complex("z")?;
    let a = third_asin(z);
    let top = (3.0 - 6.0 * z) * a.cos() + cx::sqrt(-z * (z - 1.0)) * a.sin();
    Ok(Rhs::exact(top / (3.0 * cx::powf(ONE - z, 1.5))))
}

// I15, I16, I17

/// sqrt(g + 3 z^{1/3} sqrt g/(1 - 2 g^{3/2})) - sqrt g, with its cancellation factor.
fn quartic_bracket(z: Complex) -> Result<(Complex, f64)> {
    let g = g_function(z)?;
    let sg = cx::sqrt(g);
    let inner = g + 3.0 * cx::cbrt(z) * sg / (ONE - 2.0 * sg * sg * sg);
    let r = cx::sqrt(inner);
    let br = r - sg;
    Ok((br, cond(r.norm() + sg.norm(), br)))
}

pub(crate) fn i15_lhs(p: &Params) -> Result<Complex> {
    hyp3f2([c(0.25), c(0.5), c(0.75)], [c(2.0 / 3.0), c(4.0 / 3.0)], p.complex("z")?)
}

fn i15_value(z: Complex) -> Result<Rhs> {
    if z == ZERO {
        return Ok(Rhs::exact(ONE));
    }
    let (br, k) = quartic_bracket(z)?;
    Ok(Rhs {
        value: 4.0 / 3.0 / cx::cbrt(z) * br,
        cond: k,
    })
}

pub(crate) fn i15_rhs(p: &Params) -> Result<Rhs> {
    i15_value(p.complex("z")?)
}

pub(crate) fn i16_lhs(p: &Params) -> Result<Complex> {
    hyp3f2([c(0.5), c(5.0 / 6.0), c(1.0 / 6.0)], [c(2.0 / 3.0), c(4.0 / 3.0)], p.complex("z")?)
}

pub(crate) fn i16_rhs(p: &Params) -> Result<Rhs> {
    let z = p.complex("z")?;
    if z == ONE {
        return Err(Error::Pole {
            function: "I16 rhs",
            at: "z = 1".into(),
        });
    }
    let w = -4.0 * z / ((ONE - z) * (ONE - z));
    let h = i15_value(w)?;
    Ok(Rhs {
        value: h.value / cx::sqrt(ONE - z),
        cond: h.cond,
    })
}

fn i17_x(z: Complex) -> Complex {
    cx::sqrt(2.0 / (ONE + cx::sqrt(ONE - z)))
}

pub(crate) fn i17_lhs(p: &Params) -> Result<Complex> {
    let x = i17_x(p.complex("z")?);
    let nu = c(-1.0 / 6.0);
    Ok(legendre_p(nu, c(1.0 / 3.0), x)? * legendre_p(nu, c(-1.0 / 3.0), x)?)
}

pub(crate) fn i17_rhs(p: &Params) -> Result<Rhs> {
    let z = p.complex("z")?;
    if z == ZERO {
        return Err(Error::BranchPoint {
            function: "I17 rhs",
            at: "z = 0".into(),
        });
    }
    let (br, k) = quartic_bracket(z)?;
    let pref = cx::sqrt(6.0 * (ONE + cx::sqrt(ONE - z))) / (PI * cx::cbrt(z));
    Ok(Rhs {
        value: pref * br,
        cond: k,
    })
}

// I18: pairs of elementary representations

pub(crate) fn i18_sides(p: &Params) -> Result<(fn(&Params) -> Result<Rhs>, fn(&Params) -> Result<Rhs>)> {
    Ok(match p.int("pair")? {
        0 => (i02_rhs, i05_rhs),
        1 => (i07_rhs, i08_rhs),
        2 => (i07_rhs, i09_rhs),
        k => return Err(Error::Params(format!("pair {k} not in 0..=2"))),
    })
}

// K01, K02

pub(crate) fn k01_lhs(p: &Params) -> Result<Complex> {
    let n = n_of(p)? as f64;
    hyp1f1(c(n), c(n + 1.0), p.complex("z")?)
}

pub(crate) fn k01_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let z = p.complex("z")?;
    if z == ZERO {
        return Ok(Rhs::exact(ONE));
    }
    let g = lower_incomplete_gamma(c(n as f64), -z)?;
    Ok(Rhs::exact(n as f64 * (-z).powi(-(n as i32)) * g))
}

pub(crate) fn k02_lhs(p: &Params) -> Result<Complex> {
    let n = n_of(p)? as f64;
    hyp1f1(ONE, c(n + 1.0), p.complex("y")?)
}

pub(crate) fn k02_rhs(p: &Params) -> Result<Rhs> {
    let n = n_of(p)?;
    let y = p.complex("y")?;
    if y == ZERO {
        return Ok(Rhs::exact(ONE));
    }
    let g = lower_incomplete_gamma(c(n as f64), y)?;
    Ok(Rhs::exact(n as f64 * y.exp() * g / y.powi(n as i32)))
}
