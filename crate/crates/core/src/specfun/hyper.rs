//! Generalized hypergeometric series, plain and regularized.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::gamma::{gamma, rgamma};
use crate::cx::{self, c, Complex, ONE, ZERO};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypergeometricSpec {
    pub upper: Vec<Complex>,
    pub lower: Vec<Complex>,
    pub argument: Complex,
}

impl HypergeometricSpec {
    pub fn new(upper: &[Complex], lower: &[Complex], argument: Complex) -> Self {
        Self {
            upper: upper.to_vec(),
            lower: lower.to_vec(),
            argument,
        }
    }

    pub fn real(upper: &[f64], lower: &[f64], argument: Complex) -> Self {
        Self {
            upper: upper.iter().map(|&a| c(a)).collect(),
            lower: lower.iter().map(|&b| c(b)).collect(),
            argument,
        }
    }

    /// Parameter excess sum(b) - sum(a).
    pub fn excess(&self) -> Complex {
        self.lower.iter().sum::<Complex>() - self.upper.iter().sum::<Complex>()
    }

    /// Degree of the polynomial when some upper parameter is a nonpositive integer.
    pub fn terminating_degree(&self) -> Option<u64> {
        self.upper.iter().filter_map(|&a| cx::nonpositive_integer(a)).min()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub consecutive_small: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            rel_tol: 1e-13,
            max_terms: 10_000,
            consecutive_small: 3,
        }
    }
}

/// `est_error` is the size of the last retained term (truncation estimate only).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub value: Complex,
    pub terms_used: usize,
    pub converged: bool,
    pub est_error: f64,
}

impl SeriesResult {
    fn exact(value: Complex) -> Self {
        Self {
            value,
            terms_used: 0,
            converged: true,
            est_error: 0.0,
        }
    }

    /// The value, or a non-convergence error.
    pub fn into_value(self, function: &'static str) -> Result<Complex> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::NonConvergence {
                function,
                terms: self.terms_used,
            })
        }
    }
}

enum Regime {
    Series,
    UnitArgument,
}

fn regime(spec: &HypergeometricSpec, function: &'static str) -> Result<Regime> {
    if spec.terminating_degree().is_some() {
        return Ok(Regime::Series);
    }
    let (p, q) = (spec.upper.len(), spec.lower.len());
    let z = spec.argument;
    if p <= q {
        return Ok(Regime::Series);
    }
    if p > q + 1 {
        return Err(Error::domain(function, format!("{p}F{q} series diverges for z != 0")));
    }
    let r = z.norm();
    if r < 1.0 {
        return Ok(Regime::Series);
    }
    if z == ONE {
        let s = spec.excess();
        if s.re <= 0.0 {
            return Err(Error::divergent(
                function,
                format!("unit argument with Re(sum b - sum a) = {} <= 0", s.re),
            ));
        }
        return Ok(Regime::UnitArgument);
    }
    Err(Error::domain(
        function,
        format!("|z| = {r} outside the unit disc; continuation unsupported"),
    ))
}

/// Sums from `first` at index `k0` with the ratio recurrence.
fn sum_terms(
    first: Complex,
    k0: usize,
    spec: &HypergeometricSpec,
    ctrl: &SeriesControl,
    degree: Option<u64>,
) -> Result<SeriesResult> {
    let z = spec.argument;
    let mut term = first;
    let mut sum = first;
    let mut small = 0usize;
    let mut k = k0;
    let mut used = 1usize;
    loop {
        if let Some(m) = degree {
            if k as u64 >= m {
                return Ok(SeriesResult {
                    value: sum,
                    terms_used: used,
                    converged: true,
                    est_error: 0.0,
                });
            }
        }
        if used >= ctrl.max_terms {
            return Ok(SeriesResult {
                value: sum,
                terms_used: used,
                converged: false,
                est_error: term.norm(),
            });
        }
        let kf = k as f64;
        let mut ratio = z / (kf + 1.0);
        for &a in &spec.upper {
            ratio *= a + kf;
        }
        for &b in &spec.lower {
            ratio /= b + kf;
        }
        term *= ratio;
        sum += term;
        k += 1;
        used += 1;
        if !cx::is_finite(sum) {
            return Err(Error::Overflow {
                function: "hypergeometric series",
            });
        }
        if term.norm() <= ctrl.rel_tol * sum.norm() {
            small += 1;
            if small >= ctrl.consecutive_small {
                return Ok(SeriesResult {
                    value: sum,
                    terms_used: used,
                    converged: true,
                    est_error: term.norm(),
                });
            }
        } else {
            small = 0;
        }
    }
}

/// pFq(a; b; z) by direct summation; z = 1 uses Gauss, Whipple or accelerated summation.
pub fn hyp_pfq(spec: &HypergeometricSpec, ctrl: &SeriesControl) -> Result<SeriesResult> {
    const F: &str = "hyp_pfq";
    if spec.argument == ZERO {
        return Ok(SeriesResult::exact(ONE));
    }
    let degree = spec.terminating_degree();
    for &b in &spec.lower {
        if let Some(l) = cx::nonpositive_integer(b) {
            if degree.map_or(true, |m| m > l) {
                return Err(Error::domain(
                    F,
                    format!("lower parameter {} is a nonpositive integer", b.re),
                ));
            }
        }
    }
    match regime(spec, F)? {
        Regime::Series => sum_terms(ONE, 0, spec, ctrl, degree),
        Regime::UnitArgument => unit_argument(spec).map(|(v, e)| SeriesResult {
            value: v,
            terms_used: 0,
            converged: true,
            est_error: e,
        }),
    }
}

/// Regularized series sum (a)_k / prod Gamma(b_j + k) z^k / k!.
pub fn hyp_pfq_regularized(spec: &HypergeometricSpec, ctrl: &SeriesControl) -> Result<SeriesResult> {
    const F: &str = "hyp_pfq_regularized";
    // first index where every Gamma(b_j + k) is finite
    let k0 = spec
        .lower
        .iter()
        .filter_map(|&b| cx::nonpositive_integer(b))
        .map(|l| l as usize + 1)
        .max()
        .unwrap_or(0);
    let degree = spec.terminating_degree();
    if let Some(m) = degree {
        if (m as usize) < k0 {
            return Ok(SeriesResult::exact(ZERO));
        }
    }
    let z = spec.argument;
    if z == ZERO {
        let v = if k0 == 0 {
            spec.lower.iter().map(|&b| rgamma(b)).product()
        } else {
            ZERO
        };
        return Ok(SeriesResult::exact(v));
    }
    match regime(spec, F)? {
        Regime::Series => {
            let mut first = ONE;
            for &a in &spec.upper {
                first *= super::gamma::pochhammer(a, k0);
            }
            for &b in &spec.lower {
                first *= rgamma(b + k0 as f64);
            }
            first *= cx::powf(z, k0 as f64) / super::gamma::factorial(k0);
            if first == ZERO {
                // an upper parameter vanishes inside the skipped block
                return Ok(SeriesResult::exact(ZERO));
            }
            sum_terms(first, k0, spec, ctrl, degree)
        }
        Regime::UnitArgument => {
            if k0 > 0 {
                return Err(Error::domain(
                    F,
                    "unit argument with a nonpositive-integer lower parameter",
                ));
            }
            let (v, e) = unit_argument(spec)?;
            let w: Complex = spec.lower.iter().map(|&b| rgamma(b)).product();
            Ok(SeriesResult {
                value: v * w,
                terms_used: 0,
                converged: true,
                est_error: e * w.norm(),
            })
        }
    }
}

fn unit_argument(spec: &HypergeometricSpec) -> Result<(Complex, f64)> {
    let (a, b) = (&spec.upper, &spec.lower);
    let v = match (a.len(), b.len()) {
        (2, 1) => Some(gauss_sum(a[0], a[1], b[0])?),
        (3, 2) => whipple_sum(a, b)?,
        _ => None,
    };
    match v {
        Some(v) => Ok((v, 16.0 * f64::EPSILON * v.norm())),
        None => accelerated_unit_sum(a, b),
    }
}

/// Gauss: Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)).
fn gauss_sum(a: Complex, b: Complex, cc: Complex) -> Result<Complex> {
    Ok(gamma(cc)? * gamma(cc - a - b)? * rgamma(cc - a) * rgamma(cc - b))
}

fn close(x: Complex, y: Complex) -> bool {
    (x - y).norm() <= 1e-13 * (1.0 + x.norm().max(y.norm()))
}

/// Whipple's sum for 3F2(a, 1-a, c; d, 2c-d+1; 1), if the parameters match in some order.
fn whipple_sum(a: &[Complex], b: &[Complex]) -> Result<Option<Complex>> {
    for ci in 0..3 {
        let cc = a[ci];
        let rest: Vec<Complex> = (0..3).filter(|&j| j != ci).map(|j| a[j]).collect();
        if !close(rest[0] + rest[1], ONE) || !close(b[0] + b[1], 2.0 * cc + 1.0) {
            continue;
        }
        let aa = rest[0];
        let d = b[0];
        let e = b[1];
        let num = PI * cx::pow(c(2.0), ONE - 2.0 * cc) * gamma(d)? * gamma(e)?;
        let den = rgamma((aa + d) * 0.5)
            * rgamma((aa + e) * 0.5)
            * rgamma((ONE - aa + d) * 0.5)
            * rgamma((ONE - aa + e) * 0.5);
        return Ok(Some(num * den));
    }
    Ok(None)
}

/// Unit-argument sum of a (q+1)Fq series by Richardson extrapolation of partial sums.
///
/// Partial sums are taken at N = 32 * 2^i, i = 0..9, and the tail exponents
/// N^-(s+j) with s = sum(b) - sum(a) are eliminated one after another.
/// Returns the value and the last correction as an error estimate.
pub fn hyp_pfq_unit_accelerated(upper: &[Complex], lower: &[Complex]) -> Result<(Complex, f64)> {
    const F: &str = "hyp_pfq_unit_accelerated";
    if upper.len() != lower.len() + 1 {
        return Err(Error::domain(F, "needs p = q + 1"));
    }
    let s: Complex = lower.iter().sum::<Complex>() - upper.iter().sum::<Complex>();
    if s.re <= 0.0 {
        return Err(Error::divergent(F, "Re(sum b - sum a) <= 0"));
    }
    if lower.iter().any(|&b| cx::nonpositive_integer(b).is_some()) {
        return Err(Error::domain(F, "nonpositive-integer lower parameter"));
    }
    accelerated_unit_sum(upper, lower)
}

fn accelerated_unit_sum(upper: &[Complex], lower: &[Complex]) -> Result<(Complex, f64)> {
    const LEVELS: usize = 9;
    let s: Complex = lower.iter().sum::<Complex>() - upper.iter().sum::<Complex>();
    let mut partial = Vec::with_capacity(LEVELS + 1);
    let mut acc = ZERO;
    let mut term = ONE;
    let mut k = 0usize;
    for i in 0..=LEVELS {
        let n = 32usize << i;
        while k < n {
            acc += term;
            let kf = k as f64;
            let mut r = ONE / (kf + 1.0);
            for &a in upper {
                r *= a + kf;
            }
            for &b in lower {
                r /= b + kf;
            }
            term *= r;
            k += 1;
        }
        partial.push(acc);
    }
    let mut row = partial;
    let mut prev_best = row[row.len() - 1];
    for j in 1..=LEVELS {
        let f = cx::pow(c(2.0), s + (j as f64 - 1.0));
        let next: Vec<Complex> = (1..row.len())
            .map(|i| (f * row[i] - row[i - 1]) / (f - 1.0))
            .collect();
        prev_best = row[row.len() - 1];
        row = next;
    }
    let best = row[row.len() - 1];
    if !cx::is_finite(best) {
        return Err(Error::Overflow {
            function: "hyp_pfq_unit_accelerated",
        });
    }
    Ok((best, (best - prev_best).norm()))
}

/// 2F1(a, b; c; z), erroring on non-convergence.
pub fn hyp2f1(a: Complex, b: Complex, cc: Complex, z: Complex) -> Result<Complex> {
    hyp_pfq(&HypergeometricSpec::new(&[a, b], &[cc], z), &SeriesControl::default())?
        .into_value("hyp2f1")
}

pub fn hyp2f1_regularized(a: Complex, b: Complex, cc: Complex, z: Complex) -> Result<Complex> {
    hyp_pfq_regularized(&HypergeometricSpec::new(&[a, b], &[cc], z), &SeriesControl::default())?
        .into_value("hyp2f1_regularized")
}

pub fn hyp1f1(a: Complex, b: Complex, z: Complex) -> Result<Complex> {
    hyp_pfq(&HypergeometricSpec::new(&[a], &[b], z), &SeriesControl::default())?
        .into_value("hyp1f1")
}

pub fn hyp3f2(a: [Complex; 3], b: [Complex; 2], z: Complex) -> Result<Complex> {
    hyp_pfq(&HypergeometricSpec::new(&a, &b, z), &SeriesControl::default())?.into_value("hyp3f2")
}
