use super::gamma::{factorial, gamma, rgamma};
use super::hyper::hyp2f1;
use crate::cx::{self, Complex, ONE, ZERO};
use crate::error::{Error, Result};

const MAX_TERMS: usize = 20_000;

fn positive_integer(z: Complex) -> Option<usize> {
    if z.im == 0.0 && z.re >= 1.0 && z.re.fract() == 0.0 && z.re <= 170.0 {
        Some(z.re as usize)
    } else {
        None
    }
}

/// Lower incomplete gamma function.
///
/// Positive integer order with |z| > order uses the finite exponential sum;
/// everything else uses a power series chosen so its terms do not alternate
/// on the real axis.
pub fn lower_incomplete_gamma(nu: Complex, z: Complex) -> Result<Complex> {
    const F: &str = "lower_incomplete_gamma";
    let int = positive_integer(nu);
    if int.is_none() && nu.re <= 0.0 {
        return Err(Error::domain(F, format!("Re nu = {} <= 0", nu.re)));
    }
    if z == ZERO {
        return Ok(ZERO);
    }
    if let Some(n) = int {
        if z.norm() > n as f64 {
            // (n-1)! (1 - e^{-z} sum_{k<n} z^k/k!)
            let mut term = ONE;
            let mut e = ONE;
            for k in 1..n {
                term *= z / k as f64;
                e += term;
            }
            return Ok(factorial(n - 1) * (ONE - (-z).exp() * e));
        }
    }
    series(nu, z)
}

fn series(nu: Complex, z: Complex) -> Result<Complex> {
    let mut sum = ZERO;
    let mut small = 0;
    if z.re >= 0.0 {
        // z^nu e^{-z} sum z^k / (nu)_{k+1}
        let mut term = ONE / nu;
        for k in 0..MAX_TERMS {
            sum += term;
            if term.norm() <= 1e-17 * sum.norm() {
                small += 1;
                if small >= 3 {
                    return Ok(cx::pow(z, nu) * (-z).exp() * sum);
                }
            } else {
                small = 0;
            }
            term *= z / (nu + (k + 1) as f64);
        }
    } else {
        // z^nu sum (-z)^k / (k! (nu + k))
        let mut p = ONE;
        for k in 0..MAX_TERMS {
            let term = p / (nu + k as f64);
            sum += term;
            if term.norm() <= 1e-17 * sum.norm() {
                small += 1;
                if small >= 3 {
                    return Ok(cx::pow(z, nu) * sum);
                }
            } else {
                small = 0;
            }
            p *= -z / (k + 1) as f64;
        }
    }
    Err(Error::NonConvergence {
        function: "lower_incomplete_gamma",
        terms: MAX_TERMS,
    })
}

/// Incomplete beta B(nu, mu, t) = (t^nu / nu) 2F1(nu, 1 - mu; nu + 1; t).
///
/// At t = 1 returns Gamma(nu)Gamma(mu)/Gamma(nu+mu), continued in mu.
pub fn incomplete_beta(nu: Complex, mu: Complex, t: Complex) -> Result<Complex> {
    const F: &str = "incomplete_beta";
    if nu.re <= 0.0 {
        return Err(Error::domain(F, format!("Re nu = {} <= 0", nu.re)));
    }
    if t == ZERO {
        return Ok(ZERO);
    }
    if t == ONE {
        if cx::nonpositive_integer(mu).is_some() {
            return Err(Error::divergent(F, "mu at a pole of Gamma"));
        }
        return Ok(gamma(nu)? * gamma(mu)? * rgamma(nu + mu));
    }
    Ok(cx::pow(t, nu) / nu * hyp2f1(nu, ONE - mu, nu + 1.0, t)?)
}
