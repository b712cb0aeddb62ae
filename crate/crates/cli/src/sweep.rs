//! Check sweeps: which checks to run, on which points, and in what order.

use std::time::Instant;

use hyperroots::cx::{c, Complex};
use hyperroots::identities::{self, IdentityDescriptor, ParamKind, ParamSpec};
use hyperroots::quad::{self, IntegralId};
use hyperroots::{CheckRecord, ParamValue, Params};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::SweepConfig;
use crate::error::{CliError, CliResult};
use crate::report::Report;

const fn int(name: &'static str, min: i64, max: i64) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Int { min, max },
    }
}

const fn cplx(name: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Complex,
    }
}

static J0_PARAMS: [ParamSpec; 7] = [
    cplx("a1"),
    cplx("a2"),
    cplx("b1"),
    cplx("b2"),
    cplx("alpha"),
    cplx("s"),
    cplx("x"),
];
static J1_PARAMS: [ParamSpec; 3] = [int("n", 0, 6), cplx("s"), cplx("x")];
static J2_PARAMS: [ParamSpec; 3] = [int("n", 1, 6), cplx("p"), cplx("x")];
static J3_PARAMS: [ParamSpec; 2] = [cplx("p"), cplx("x")];

/// Kernel parameters of J0 that may be left out of a user grid.
const J0_OPTIONAL: [&str; 4] = ["a1", "a2", "b1", "b2"];

#[derive(Debug, Clone, Copy)]
pub enum Check {
    Identity(&'static IdentityDescriptor),
    Integral(IntegralId),
}

impl Check {
    pub fn id(&self) -> &'static str {
        match self {
            Check::Identity(d) => d.id,
            Check::Integral(j) => j.short(),
        }
    }

    pub fn params(&self) -> &'static [ParamSpec] {
        match self {
            Check::Identity(d) => d.params,
            Check::Integral(IntegralId::J0LaplaceHyp) => &J0_PARAMS,
            Check::Integral(IntegralId::J1GammaInt) => &J1_PARAMS,
            Check::Integral(IntegralId::J2GammaInt) => &J2_PARAMS,
            Check::Integral(_) => &J3_PARAMS,
        }
    }

    pub fn default_tolerance(&self) -> f64 {
        match self {
            Check::Identity(d) => d.tolerance,
            Check::Integral(IntegralId::J0LaplaceHyp) => 1e-7,
            Check::Integral(IntegralId::J3CylinderInt) => 1e-5,
            Check::Integral(_) => 1e-6,
        }
    }

    fn default_grid(&self, seed: u64) -> CliResult<Vec<Params>> {
        let pts = |rows: &[(i64, f64, f64)], names: [&str; 3]| -> Vec<Params> {
            rows.iter()
                .map(|&(n, a, b)| Params::new().with_int(names[0], n).with_complex(names[1], c(a)).with_complex(names[2], c(b)))
                .collect()
        };
        Ok(match self {
            Check::Identity(d) => identities::default_grid(d.id, seed)?,
            Check::Integral(IntegralId::J0LaplaceHyp) => laplace_draws(seed, 25),
            Check::Integral(IntegralId::J1GammaInt) => {
                let mut rows = Vec::new();
                for n in 0..=2 {
                    for (s, x) in [(2.0, 1.0), (3.0, 1.0), (1.0, -0.5)] {
                        rows.push((n, s, x));
                    }
                }
                pts(&rows, ["n", "s", "x"])
            }
            Check::Integral(IntegralId::J2GammaInt) => {
                let mut rows = Vec::new();
                for n in 1..=2 {
                    for (p, x) in [(0.0, 1.0), (1.0, 1.0), (2.0, 0.5)] {
                        rows.push((n, p, x));
                    }
                }
                pts(&rows, ["n", "p", "x"])
            }
            Check::Integral(_) => [(1.0, 1.0), (2.0, 0.5), (1.5, 0.25), (1.0, 0.0)]
                .iter()
                .map(|&(p, x)| Params::new().with_complex("p", c(p)).with_complex("x", c(x)))
                .collect(),
        })
    }

    /// Evaluates one point; integral-hypothesis violations become skipped records.
    pub fn evaluate(&self, p: &Params, tol: f64) -> CliResult<CheckRecord> {
        let j = match self {
            Check::Identity(d) => return Ok(identities::eval_identity(d.id, p, tol)?),
            Check::Integral(j) => *j,
        };
        let id = j.short();
        let get = |name: &str| -> CliResult<Complex> { Ok(p.complex(name)?) };
        let order = |min: i64| -> CliResult<u32> {
            let n = p.int("n")?;
            if n < min {
                return Err(CliError::usage(format!("{id}: n = {n} must be >= {min}")));
            }
            Ok(n as u32)
        };
        let res = match j {
            IntegralId::J0LaplaceHyp => {
                let pick = |prefix: &str| -> Vec<Complex> {
                    (1..=2)
                        .filter_map(|i| p.get(&format!("{prefix}{i}")).map(|v| v.as_complex()))
                        .collect()
                };
                quad::laplace_hyp_check(&pick("a"), &pick("b"), get("alpha")?, get("s")?, get("x")?, tol)
            }
            IntegralId::J1GammaInt => quad::check_integral_j1(order(0)?, get("s")?, get("x")?, tol),
            IntegralId::J2GammaInt => quad::check_integral_j2(order(1)?, get("p")?, get("x")?, tol),
            IntegralId::J3CylinderInt => quad::check_integral_j3(get("p")?, get("x")?, tol),
            IntegralId::Custom => return Err(CliError::usage("custom integrands are not sweepable")),
        };
        Ok(match res {
            Ok(mut r) => {
                r.params = p.clone();
                r
            }
            Err(e) => CheckRecord::skipped(id, p.clone(), tol, e.to_string()),
        })
    }
}

/// Random admissible parameters for the Laplace-transform check; kernels cycle through 0F0, 0F1, 1F1, 1F2, 2F2.
pub fn laplace_draws(seed: u64, count: usize) -> Vec<Params> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes = [(0usize, 0usize), (0, 1), (1, 1), (1, 2), (2, 2)];
    (0..count)
        .map(|i| {
            let (p, q) = shapes[i % shapes.len()];
            let mut out = Params::new();
            for k in 1..=p {
                out = out.with_complex(&format!("a{k}"), c(round6(rng.gen_range(0.2..2.0))));
            }
            for k in 1..=q {
                out = out.with_complex(&format!("b{k}"), c(round6(rng.gen_range(0.5..3.0))));
            }
            let alpha = round6(rng.gen_range(0.3..3.0));
            let s = Complex::new(round6(rng.gen_range(0.8..3.0)), round6(rng.gen_range(-0.5..0.5)));
            let x = Complex::from_polar(rng.gen_range(0.0..0.6) * s.re, rng.gen_range(-3.0..3.0));
            out.with_complex("alpha", c(alpha))
                .with_complex("s", s)
                .with_complex("x", Complex::new(round6(x.re), round6(x.im)))
        })
        .collect()
}

/// Keeps sampled values short in reports.
fn round6(v: f64) -> f64 {
    (v * 1e6).round() / 1e6
}

/// Every sweepable check, in report order.
pub fn all_checks() -> Vec<Check> {
    let mut out: Vec<Check> = identities::list_identities()
        .iter()
        .chain(identities::sub_identities())
        .map(Check::Identity)
        .collect();
    for j in [
        IntegralId::J0LaplaceHyp,
        IntegralId::J1GammaInt,
        IntegralId::J2GammaInt,
        IntegralId::J3CylinderInt,
    ] {
        out.push(Check::Integral(j));
    }
    out
}

pub fn resolve_ids(ids: &[String]) -> CliResult<Vec<Check>> {
    if ids.is_empty() || ids.iter().any(|s| s == "all") {
        return Ok(all_checks());
    }
    let mut out = Vec::new();
    for id in ids {
        let check = if let Some(d) = identities::find_identity(id) {
            Check::Identity(d)
        } else {
            match IntegralId::parse(id) {
                Some(IntegralId::Custom) | None => {
                    return Err(CliError::usage(format!("unknown check id `{id}`")));
                }
                Some(j) => Check::Integral(j),
            }
        };
        if !out.iter().any(|c: &Check| c.id() == check.id()) {
            out.push(check);
        }
    }
    Ok(out)
}

/// Points for one check: the user grid when it names any of the check's
/// parameters, otherwise the built-in sample. Integer parameters absent from the
/// user grid run over their whole schema range.
pub fn points_for(check: &Check, cfg: &SweepConfig) -> CliResult<Vec<Params>> {
    let schema = check.params();
    if !schema.iter().any(|s| cfg.grid.contains_key(s.name)) {
        return check.default_grid(cfg.seed);
    }
    let mut axes: Vec<(&str, ParamKind, Vec<ParamValue>)> = Vec::new();
    for s in schema {
        let values: Vec<ParamValue> = match (cfg.grid.get(s.name), s.kind) {
            (Some(axis), ParamKind::Int { .. }) => axis
                .values()
                .into_iter()
                .map(|z| {
                    if z.im == 0.0 && z.re.fract() == 0.0 {
                        Ok(ParamValue::Int(z.re as i64))
                    } else {
                        Err(CliError::usage(format!("{}: `{}` takes integers, got {z}", check.id(), s.name)))
                    }
                })
                .collect::<CliResult<_>>()?,
            (Some(axis), ParamKind::Complex) => axis.values().into_iter().map(ParamValue::Complex).collect(),
            (None, ParamKind::Int { min, max }) => (min..=max).map(ParamValue::Int).collect(),
            (None, ParamKind::Complex) => {
                if matches!(check, Check::Integral(IntegralId::J0LaplaceHyp)) && J0_OPTIONAL.contains(&s.name) {
                    continue;
                }
                return Err(CliError::usage(format!("grid for {} lacks axis `{}`", check.id(), s.name)));
            }
        };
        axes.push((s.name, s.kind, values));
    }
    let mut out = vec![Params::new()];
    for (name, _, values) in &axes {
        let mut next = Vec::with_capacity(out.len() * values.len());
        for p in &out {
            for v in values {
                let mut q = p.clone();
                q.0.push((name.to_string(), *v));
                next.push(q);
            }
        }
        out = next;
    }
    Ok(out)
}

/// Runs the sweep on `jobs` workers (0 = all cores). Output order never depends on `jobs`.
pub fn run(cfg: &SweepConfig, jobs: usize) -> CliResult<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let checks = resolve_ids(&cfg.identity_ids)?;
    let mut tasks = Vec::new();
    for check in &checks {
        let tol = cfg.tolerance.unwrap_or_else(|| check.default_tolerance());
        for p in points_for(check, cfg)? {
            tasks.push((*check, p, tol));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::usage(format!("cannot start {jobs} workers: {e}")))?;
    let mut records = pool.install(|| {
        tasks
            .par_iter()
            .map(|(check, p, tol)| check.evaluate(p, *tol))
            .collect::<CliResult<Vec<_>>>()
    })?;
    records.sort_by(|a, b| {
        a.identity_id
            .cmp(&b.identity_id)
            .then_with(|| a.params.cmp_values(&b.params))
    });
    let mut echo = cfg.clone();
    echo.identity_ids = checks.iter().map(|c| c.id().to_string()).collect();
    Ok(Report::new(echo, records, start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_grid_arg;
    use hyperroots::Verdict;

    fn cfg(ids: &[&str], grids: &[&str]) -> SweepConfig {
        SweepConfig {
            identity_ids: ids.iter().map(|s| s.to_string()).collect(),
            grid: grids.iter().map(|g| parse_grid_arg(g).unwrap()).collect(),
            ..Default::default()
        }
    }

    #[test]
    fn all_means_catalog_sub_identities_and_integrals() {
        let ids: Vec<_> = resolve_ids(&["all".into()]).unwrap().iter().map(|c| c.id()).collect();
        assert_eq!(ids.len(), 26);
        assert!(ids.contains(&"I14a") && ids.contains(&"J3"));
        assert!(resolve_ids(&["I77".into()]).is_err());
        assert!(resolve_ids(&["custom".into()]).is_err());
    }

    #[test]
    fn missing_int_axis_uses_schema_range() {
        let c = cfg(&["I02"], &["t=0.5"]);
        let check = resolve_ids(&c.identity_ids).unwrap()[0];
        let pts = points_for(&check, &c).unwrap();
        let ParamKind::Int { min, max } = check.params()[0].kind else { panic!() };
        assert_eq!(pts.len() as i64, max - min + 1);
        let c = cfg(&["I02"], &["n=1.5", "t=0.5"]);
        assert!(points_for(&check, &c).is_err());
        let c = cfg(&["I13"], &["t=0.5"]);
        let check = resolve_ids(&c.identity_ids).unwrap()[0];
        assert_eq!(points_for(&check, &c).unwrap().len(), 200);
    }

    #[test]
    fn i01_user_grid() {
        let r = run(&cfg(&["I01"], &["t:-0.9:0.9:50"]), 2).unwrap();
        assert_eq!(r.records.len(), 50);
        assert_eq!(r.summary.fail, 0);
        assert!(r.summary.pass >= 48);
    }

    #[test]
    fn integral_hypothesis_violations_are_skipped() {
        let r = run(&cfg(&["J3"], &["p=0.4,1", "x=1"]), 1).unwrap();
        assert_eq!(r.records[0].verdict, Verdict::SkippedDomain);
        assert_eq!(r.records[1].verdict, Verdict::Pass);
    }

    #[test]
    fn job_count_does_not_change_records() {
        let c = cfg(&["I07", "J1", "J0"], &[]);
        let a = run(&c, 1).unwrap();
        let b = run(&c, 4).unwrap();
        assert_eq!(a.records, b.records);
    }
}
