use std::io::Write;

use hyperroots::cx::{self, Complex};
use hyperroots::identities;
use hyperroots::quad::{self, IntegralId, IntegralSpec, Tail};
use hyperroots::roots::{self, TrinomialInstance};
use hyperroots::specfun::{self, HypergeometricSpec, SeriesControl};
use hyperroots::{CheckRecord, Verdict};

use crate::error::{CliError, CliResult, EXIT_FAILURES, EXIT_OK};
use crate::expr;

/// Name, argument list and summary of every function reachable from `eval`.
pub const FUNCTIONS: &[(&str, &str, &str)] = &[
    ("gamma", "z", "gamma function"),
    ("rgamma", "z", "reciprocal gamma, zero at the poles"),
    ("poch", "a k", "Pochhammer symbol (a)_k"),
    ("2f1", "a b c z", "Gauss hypergeometric function"),
    ("2f1r", "a b c z", "regularized 2F1"),
    ("1f1", "a b z", "Kummer function"),
    ("3f2", "a1 a2 a3 b1 b2 z", "3F2 series (z = 1 by summation formulas)"),
    ("lower_gamma", "nu z", "lower incomplete gamma"),
    ("beta_inc", "nu mu t", "incomplete beta B(nu, mu, t)"),
    ("legendre_p", "nu mu x", "Legendre function P_nu^mu(x)"),
    ("legendre", "n x", "Legendre polynomial P_n(x)"),
    ("pcfd", "nu z", "parabolic cylinder function D_nu(z)"),
    ("bell", "n k x1 .. x(n-k+1)", "partial Bell polynomial"),
    ("g", "z", "auxiliary g(z) of the quartic root"),
];

/// Tighter than the library default so that 15 printed digits are all significant.
const EVAL_CTRL: SeriesControl = SeriesControl {
    rel_tol: 1e-16,
    max_terms: 200_000,
    consecutive_small: 3,
};

fn series(upper: &[Complex], lower: &[Complex], z: Complex, regularized: bool) -> CliResult<Complex> {
    let spec = HypergeometricSpec::new(upper, lower, z);
    let r = if regularized {
        specfun::hyp_pfq_regularized(&spec, &EVAL_CTRL)?
    } else {
        specfun::hyp_pfq(&spec, &EVAL_CTRL)?
    };
    Ok(r.into_value("eval")?)
}

pub fn parse_complex(s: &str) -> CliResult<Complex> {
    cx::parse(s).ok_or_else(|| CliError::usage(format!("`{s}` is not a number (use a, a+bi or a-bi)")))
}

fn index(z: Complex, what: &str) -> CliResult<usize> {
    if z.im == 0.0 && z.re >= 0.0 && z.re.fract() == 0.0 {
        Ok(z.re as usize)
    } else {
        Err(CliError::usage(format!("{what} must be a nonnegative integer, got {}", cx::format(z))))
    }
}

pub fn eval_function(name: &str, args: &[Complex]) -> CliResult<Complex> {
    let Some(&(_, sig, _)) = FUNCTIONS.iter().find(|f| f.0 == name) else {
        return Err(CliError::usage(format!("unknown function `{name}`")));
    };
    let arity = sig.split_whitespace().count();
    if name != "bell" && args.len() != arity {
        return Err(CliError::usage(format!("{name} takes {arity} argument(s): {sig}")));
    }
    let a = args;
    Ok(match name {
        "gamma" => specfun::gamma(a[0])?,
        "rgamma" => specfun::rgamma(a[0]),
        "poch" => specfun::pochhammer(a[0], index(a[1], "k")?),
        "2f1" => series(&a[..2], &a[2..3], a[3], false)?,
        "2f1r" => series(&a[..2], &a[2..3], a[3], true)?,
        "1f1" => series(&a[..1], &a[1..2], a[2], false)?,
        "3f2" => series(&a[..3], &a[3..5], a[5], false)?,
        "lower_gamma" => specfun::lower_incomplete_gamma(a[0], a[1])?,
        "beta_inc" => specfun::incomplete_beta(a[0], a[1], a[2])?,
        "legendre_p" => specfun::legendre_p(a[0], a[1], a[2])?,
        "legendre" => specfun::legendre_polynomial(index(a[0], "n")?, a[1]),
        "pcfd" => specfun::parabolic_cylinder_d(a[0], a[1])?,
        "bell" => {
            if a.len() < 2 {
                return Err(CliError::usage(format!("bell takes {sig}")));
            }
            specfun::bell_polynomial(index(a[0], "n")?, index(a[1], "k")?, &a[2..])?
        }
        "g" => roots::g_function(a[0])?,
        _ => unreachable!("registry and dispatch disagree on `{name}`"),
    })
}

pub fn cmd_eval(out: &mut dyn Write, name: &str, args: &[String]) -> CliResult<i32> {
    let vals = args.iter().map(|s| parse_complex(s)).collect::<CliResult<Vec<_>>>()?;
    let v = eval_function(name, &vals)?;
    writeln!(out, "{}", cx::format(v)).ok();
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RootMethod {
    Series,
    Closed,
    Both,
}

fn write_set(out: &mut dyn Write, label: &str, set: &roots::RootSet) {
    for (x, e) in set.roots.iter().zip(&set.residuals) {
        writeln!(out, "{label:<12} x = {:<40} residual = {}", cx::format(*x), cx::format_real(*e)).ok();
    }
}

pub fn cmd_roots(out: &mut dyn Write, n: u32, t: Complex, method: RootMethod, json: bool) -> CliResult<i32> {
    let inst = TrinomialInstance::new(n, t);
    let ctrl = SeriesControl::default();
    let series = match method {
        RootMethod::Closed => None,
        _ => Some(roots::series_roots(&inst, &ctrl)?),
    };
    let closed = match method {
        RootMethod::Series => None,
        _ => Some(roots::closed_form_roots(&inst)?),
    };
    let deviation = match &series {
        Some(s) if closed.is_some() => Some((s.roots[0] - roots::series_branch_closed_form(&inst)?).norm()),
        _ => None,
    };
    if json {
        let v = serde_json::json!({
            "n": n,
            "t": cx::format(t),
            "series": series,
            "closed_form": closed,
            "deviation": deviation,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable")).ok();
        return Ok(EXIT_OK);
    }
    writeln!(out, "x^{n} - x + t = 0, t = {}", cx::format(t)).ok();
    if let Some(s) = &series {
        write_set(out, "series", s);
    }
    if let Some(cf) = &closed {
        write_set(out, "closed_form", cf);
    }
    if let Some(d) = deviation {
        writeln!(out, "deviation = {}", cx::format_real(d)).ok();
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Default)]
pub struct IntegrateOptions {
    pub n: Option<u32>,
    pub s: Option<Complex>,
    pub p: Option<Complex>,
    pub x: Option<Complex>,
    pub alpha: Option<Complex>,
    pub a: Vec<Complex>,
    pub b: Vec<Complex>,
    pub tol: Option<f64>,
    pub exponent: f64,
    pub rate: Option<f64>,
    pub power: Option<f64>,
}

fn need<T: Copy>(v: Option<T>, flag: &str, id: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::usage(format!("{id} needs --{flag}")))
}

fn write_record(out: &mut dyn Write, r: &CheckRecord) {
    let show = |v: Option<Complex>| v.map(cx::format).unwrap_or_else(|| "-".into());
    let err = |v: Option<f64>| v.map(cx::format_real).unwrap_or_else(|| "-".into());
    writeln!(out, "{} {}", r.identity_id, r.params).ok();
    writeln!(out, "quadrature  = {}", show(r.lhs_value)).ok();
    writeln!(out, "closed_form = {}", show(r.rhs_value)).ok();
    writeln!(out, "abs_err = {}  rel_err = {}", err(r.abs_err), err(r.rel_err)).ok();
    writeln!(out, "verdict = {}", r.verdict.as_str()).ok();
    if let Some(note) = &r.note {
        writeln!(out, "note = {note}").ok();
    }
}

pub fn cmd_integrate(out: &mut dyn Write, id: &str, expr_src: Option<&str>, o: &IntegrateOptions) -> CliResult<i32> {
    let which = IntegralId::parse(id).ok_or_else(|| CliError::usage(format!("unknown integrand `{id}`")))?;
    let rec = match which {
        IntegralId::Custom => {
            let src = expr_src.ok_or_else(|| CliError::usage("custom needs an expression in t, e.g. \"exp(-t)\""))?;
            let e = expr::parse(src).map_err(|m| CliError::usage(format!("bad expression: {m}")))?;
            let tail = match (o.power, o.rate) {
                (Some(_), Some(_)) => return Err(CliError::usage("give --rate or --power, not both")),
                (Some(power), None) => Tail::Algebraic { power },
                (None, rate) => Tail::Exponential { rate: rate.unwrap_or(1.0) },
            };
            let spec = IntegralSpec::new("custom", move |t| e.eval(t), o.exponent, tail);
            let r = quad::integrate_semi_infinite(&spec, o.tol.unwrap_or(1e-10))?;
            writeln!(out, "value = {}", cx::format(r.value)).ok();
            writeln!(out, "est_error = {}", cx::format_real(r.est_error)).ok();
            writeln!(out, "evaluations = {}", r.evaluations).ok();
            return Ok(EXIT_OK);
        }
        IntegralId::J0LaplaceHyp => quad::laplace_hyp_check(
            &o.a,
            &o.b,
            need(o.alpha, "alpha", id)?,
            need(o.s, "s", id)?,
            need(o.x, "x", id)?,
            o.tol.unwrap_or(1e-7),
        )?,
        IntegralId::J1GammaInt => {
            quad::check_integral_j1(need(o.n, "n", id)?, need(o.s, "s", id)?, need(o.x, "x", id)?, o.tol.unwrap_or(1e-6))?
        }
        IntegralId::J2GammaInt => {
            quad::check_integral_j2(need(o.n, "n", id)?, need(o.p, "p", id)?, need(o.x, "x", id)?, o.tol.unwrap_or(1e-6))?
        }
        IntegralId::J3CylinderInt => {
            quad::check_integral_j3(need(o.p, "p", id)?, need(o.x, "x", id)?, o.tol.unwrap_or(1e-5))?
        }
    };
    write_record(out, &rec);
    Ok(if rec.verdict == Verdict::Fail { EXIT_FAILURES } else { EXIT_OK })
}

pub fn cmd_list(out: &mut dyn Write) -> CliResult<i32> {
    for d in identities::list_identities().iter().chain(identities::sub_identities()) {
        let params: Vec<_> = d.params.iter().map(|p| p.name).collect();
        writeln!(out, "{:<5} tol={:e}  params={:<10} {}", d.id, d.tolerance, params.join(","), d.anchor).ok();
    }
    for c in crate::sweep::all_checks().iter().filter(|c| matches!(c, crate::sweep::Check::Integral(_))) {
        let params: Vec<_> = c.params().iter().map(|p| p.name).collect();
        writeln!(out, "{:<5} tol={:e}  params={}", c.id(), c.default_tolerance(), params.join(",")).ok();
    }
    writeln!(out, "functions for eval:").ok();
    for (name, sig, about) in FUNCTIONS {
        writeln!(out, "  {name} {sig}  ({about})").ok();
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperroots::cx::c;

    #[test]
    fn eval_examples() {
        assert_eq!(cx::format(eval_function("gamma", &[c(0.5)]).unwrap()), "1.77245385090552");
        let v = eval_function("2f1", &[c(0.5), c(1.0), c(2.0), c(0.5)]).unwrap();
        assert_eq!(cx::format(v), "1.17157287525381");
        assert!(matches!(eval_function("bogus", &[c(1.0)]), Err(CliError::Usage(_))));
        assert!(matches!(eval_function("gamma", &[]), Err(CliError::Usage(_))));
        assert_eq!(eval_function("gamma", &[c(-1.0)]).unwrap_err().exit_code(), 3);
        let b = eval_function("bell", &[c(3.0), c(2.0), c(2.0), c(5.0)]).unwrap();
        assert_eq!(b, c(30.0));
    }

    #[test]
    fn every_registered_function_dispatches() {
        let cases: [(&str, &[f64]); 14] = [
            ("gamma", &[0.3]),
            ("rgamma", &[-2.0]),
            ("poch", &[0.5, 3.0]),
            ("2f1", &[0.5, 1.0, 2.0, 0.3]),
            ("2f1r", &[0.5, 1.0, -1.0, 0.3]),
            ("1f1", &[1.0, 2.0, 0.3]),
            ("3f2", &[0.25, 0.5, 0.75, 2.0 / 3.0, 4.0 / 3.0, 1.0]),
            ("lower_gamma", &[3.0, 2.0]),
            ("beta_inc", &[2.0, 3.0, 1.0]),
            ("legendre_p", &[1.0, 0.0, 0.3]),
            ("legendre", &[3.0, 0.5]),
            ("pcfd", &[0.0, 1.0]),
            ("bell", &[3.0, 2.0, 1.0, 1.0]),
            ("g", &[1.0]),
        ];
        assert_eq!(cases.len(), FUNCTIONS.len());
        for (name, args) in cases {
            let args: Vec<Complex> = args.iter().map(|&v| c(v)).collect();
            assert!(eval_function(name, &args).is_ok(), "{name}");
        }
    }
}
