//! Catalog of reduction identities with independently coded sides, and the
//! differential checker that compares them.

mod formulas;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::check::{CheckRecord, Params};
use crate::cx::{self, c, Complex, ONE, ZERO};
use crate::error::{Error, Result};

use formulas as f;
pub use formulas::{faa_di_bruno_derivative, i13_piecewise};

pub const DEFAULT_GRID_SIZE: usize = 200;
pub const DEFAULT_SEED: u64 = 20_240_917;

/// Floating-point budget used to judge whether an elementary side can reach `tol`.
const ROUNDING: f64 = 10.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParamKind {
    Int { min: i64, max: i64 },
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    #[serde(flatten)]
    pub kind: ParamKind,
}

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

type LhsFn = fn(&Params) -> Result<Complex>;
type RhsFn = fn(&Params) -> Result<f::Rhs>;
type DomainFn = fn(&Params) -> Option<String>;
type SampleFn = fn(&mut ChaCha8Rng) -> Params;
type SpecialFn = fn() -> Vec<Params>;

#[derive(Serialize)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub params: &'static [ParamSpec],
    pub domain: &'static str,
    pub anchor: &'static str,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    #[serde(skip)]
    lhs: LhsFn,
    #[serde(skip)]
    rhs: RhsFn,
    #[serde(skip)]
    admissible: DomainFn,
    #[serde(skip)]
    sample: SampleFn,
    #[serde(skip)]
    special: SpecialFn,
}

impl std::fmt::Debug for IdentityDescriptor {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fm.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("params", &self.params)
            .field("domain", &self.domain)
            .field("anchor", &self.anchor)
            .finish()
    }
}

impl IdentityDescriptor {
    /// Checks names, kinds and integer ranges against the schema.
    pub fn validate(&self, p: &Params) -> Result<()> {
        for (name, _) in &p.0 {
            if !self.params.iter().any(|s| s.name == name) {
                return Err(Error::Params(format!("{}: unknown parameter `{name}`", self.id)));
            }
        }
        for s in self.params {
            match (s.kind, p.get(s.name)) {
                (_, None) => {
                    return Err(Error::Params(format!("{}: missing parameter `{}`", self.id, s.name)))
                }
                (ParamKind::Int { min, max }, Some(_)) => {
                    let v = p.int(s.name)?;
                    if v < min || v > max {
                        return Err(Error::Params(format!(
                            "{}: `{}` = {v} outside {min}..={max}",
                            self.id, s.name
                        )));
                    }
                }
                (ParamKind::Complex, Some(_)) => {}
            }
        }
        Ok(())
    }

    /// Normalizes integer-valued parameters given as reals to `Int`.
    fn normalize(&self, p: &Params) -> Params {
        let mut out = Params::new();
        for s in self.params {
            if let Some(v) = p.get(s.name) {
                out = match s.kind {
                    ParamKind::Int { .. } => out.with_int(s.name, p.int(s.name).unwrap_or(0)),
                    ParamKind::Complex => out.with_complex(s.name, v.as_complex()),
                };
            }
        }
        out
    }

    /// Evaluates both sides at a validated point.
    pub fn evaluate(&self, p: &Params, tol: f64) -> CheckRecord {
        if let Some(reason) = (self.admissible)(p) {
            return CheckRecord::skipped(self.id, p.clone(), tol, reason);
        }
        let rhs = (self.rhs)(p);
        if let Ok(r) = &rhs {
            if r.cond * ROUNDING > tol {
                return CheckRecord::skipped(
                    self.id,
                    p.clone(),
                    tol,
                    format!("elementary side loses {:.1e} to cancellation", r.cond),
                );
            }
        }
        let lhs = (self.lhs)(p);
        CheckRecord::compare(self.id, p.clone(), lhs, rhs.map(|r| r.value), tol)
    }

    pub fn lhs(&self, p: &Params) -> Result<Complex> {
        (self.lhs)(p)
    }

    pub fn rhs(&self, p: &Params) -> Result<Complex> {
        (self.rhs)(p).map(|r| r.value)
    }

    /// Reason the point lies outside the admissible region, if it does.
    pub fn outside_domain(&self, p: &Params) -> Option<String> {
        (self.admissible)(p)
    }

    /// Explicit limit points followed by seeded samples, `size` in total.
    pub fn default_grid(&self, seed: u64, size: usize) -> Vec<Params> {
        let mut out = (self.special)();
        out.truncate(size);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(self.id));
        while out.len() < size {
            out.push((self.sample)(&mut rng));
        }
        out
    }
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

// sampling helpers

fn annulus(rng: &mut ChaCha8Rng, r0: f64, r1: f64) -> Complex {
    let r = rng.gen_range(r0 * r0..=r1 * r1).sqrt();
    let th = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    Complex::from_polar(r, th)
}

fn nt(n: i64, t: Complex) -> Params {
    Params::new().with_int("n", n).with_complex("t", t)
}

fn nz(n: i64, name: &str, z: Complex) -> Params {
    Params::new().with_int("n", n).with_complex(name, z)
}

fn zp(z: Complex) -> Params {
    Params::new().with_complex("z", z)
}

fn var(p: &Params, name: &str) -> Complex {
    p.get(name).map(|v| v.as_complex()).unwrap_or(ZERO)
}

/// |v| < 1, or v = 1 when `unit` is allowed.
fn in_disc(p: &Params, name: &str, unit: bool) -> Option<String> {
    let v = var(p, name);
    if v.norm() < 1.0 || (unit && v == ONE) {
        None
    } else {
        Some(format!("{name} = {} outside the series disc", cx::format(v)))
    }
}

fn disc_with_unit_t(p: &Params) -> Option<String> {
    in_disc(p, "t", true)
}

fn disc_with_unit_z(p: &Params) -> Option<String> {
    in_disc(p, "z", true)
}

fn open_disc_z(p: &Params) -> Option<String> {
    in_disc(p, "z", false)
}

fn i06_domain(p: &Params) -> Option<String> {
    if var(p, "t") == ONE {
        return Some("t = 1: both sides infinite".into());
    }
    in_disc(p, "t", false)
}

fn i10_domain(p: &Params) -> Option<String> {
    let t = var(p, "t");
    if let Some(r) = in_disc(p, "t", false) {
        return Some(r);
    }
    let x = ONE / cx::sqrt(ONE - t);
    if ((ONE - x) * 0.5).norm() >= 0.95 {
        return Some("1/sqrt(1-t) outside the Legendre series region".into());
    }
    None
}

fn everywhere(_: &Params) -> Option<String> {
    None
}

fn i14_domain(p: &Params) -> Option<String> {
    let z = var(p, "z");
    if z == ZERO || z == ONE {
        return Some("z in {0, 1}: singular derivative".into());
    }
    in_disc(p, "z", false)
}

fn i14ab_domain(p: &Params) -> Option<String> {
    if var(p, "z") == ONE {
        return Some("z = 1: both sides infinite".into());
    }
    in_disc(p, "z", false)
}

fn i17_domain(p: &Params) -> Option<String> {
    let z = var(p, "z");
    if z == ZERO {
        return Some("z = 0: Legendre branch point x = 1".into());
    }
    if let Some(r) = in_disc(p, "z", false) {
        return Some(r);
    }
    let x = cx::sqrt(2.0 / (ONE + cx::sqrt(ONE - z)));
    if ((ONE - x) * 0.5).norm() >= 0.95 {
        return Some("x outside the Legendre series region".into());
    }
    None
}

fn i18_lhs(p: &Params) -> Result<Complex> {
    let (a, _) = f::i18_sides(p)?;
    a(p).map(|r| r.value)
}

fn i18_rhs(p: &Params) -> Result<f::Rhs> {
    let (a, b) = f::i18_sides(p)?;
    let ra = a(p);
    let rb = b(p)?;
    let cond = ra.map(|r| r.cond).unwrap_or(1.0).max(rb.cond);
    Ok(f::Rhs { value: rb.value, cond })
}

fn i18_domain(p: &Params) -> Option<String> {
    in_disc(p, "t", true)
}

// samplers

fn s_i01(r: &mut ChaCha8Rng) -> Params {
    Params::new().with_complex("t", annulus(r, 0.02, 0.95))
}
fn s_n0_4(r: &mut ChaCha8Rng) -> Params {
    let n = r.gen_range(0..=4);
    nt(n, annulus(r, 0.15, 0.92))
}
fn s_i03(r: &mut ChaCha8Rng) -> Params {
    let n = r.gen_range(0..=3);
    // the bracket cancels like t^(2n+2); stay where that costs < 1e5
    nt(n, annulus(r, 0.25 + 0.15 * n as f64, 0.92))
}
fn s_i06(r: &mut ChaCha8Rng) -> Params {
    let n = r.gen_range(0..=5);
    nt(n, annulus(r, 0.0, 0.9))
}
fn s_i10(r: &mut ChaCha8Rng) -> Params {
    let n = r.gen_range(1..=4);
    loop {
        let t = annulus(r, 0.15, 0.8);
        let p = nt(n, t);
        if i10_domain(&p).is_none() {
            return p;
        }
    }
}
fn s_i11(r: &mut ChaCha8Rng) -> Params {
    let n = r.gen_range(1..=5);
    nt(n, annulus(r, 0.0, 2.0))
}
fn s_i12(r: &mut ChaCha8Rng) -> Params {
    let n = r.gen_range(1..=5);
    nt(n, annulus(r, 0.0, 0.95))
}
fn s_z95(r: &mut ChaCha8Rng) -> Params {
    zp(annulus(r, 0.0, 0.95))
}
fn s_i14(r: &mut ChaCha8Rng) -> Params {
    let n = r.gen_range(1..=4);
    nz(n, "z", annulus(r, 0.05, 0.92))
}
fn s_i14ab(r: &mut ChaCha8Rng) -> Params {
    zp(annulus(r, 0.0, 0.92))
}
fn s_i15(r: &mut ChaCha8Rng) -> Params {
    zp(annulus(r, 0.01, 0.95))
}
fn s_i16(r: &mut ChaCha8Rng) -> Params {
    zp(annulus(r, 0.01, 0.9))
}
fn s_i17(r: &mut ChaCha8Rng) -> Params {
    loop {
        let p = zp(annulus(r, 0.01, 0.95));
        if i17_domain(&p).is_none() {
            return p;
        }
    }
}
fn s_i18(r: &mut ChaCha8Rng) -> Params {
    let pair = r.gen_range(0..=2);
    let n = r.gen_range(0..=4);
    Params::new()
        .with_int("pair", pair)
        .with_int("n", n)
        .with_complex("t", annulus(r, 0.15, 0.92))
}
fn s_k01(r: &mut ChaCha8Rng) -> Params {
    let n = r.gen_range(1..=5);
    nz(n, "z", annulus(r, 0.0, 8.0))
}
fn s_k02(r: &mut ChaCha8Rng) -> Params {
    let n = r.gen_range(1..=5);
    nz(n, "y", annulus(r, 0.0, 8.0))
}

// explicit limit points

fn sp_none() -> Vec<Params> {
    Vec::new()
}
fn sp_i01() -> Vec<Params> {
    vec![Params::new().with_complex("t", ZERO), Params::new().with_complex("t", ONE)]
}
fn sp_i02() -> Vec<Params> {
    vec![nt(0, ZERO), nt(2, ZERO), nt(0, ONE), nt(1, ONE), nt(2, ONE)]
}
fn sp_i03() -> Vec<Params> {
    vec![nt(0, ZERO), nt(1, ZERO), nt(0, ONE), nt(1, ONE)]
}
fn sp_i04() -> Vec<Params> {
    vec![nt(0, ZERO), nt(2, ZERO), nt(0, ONE), nt(1, ONE), nt(3, ONE)]
}
fn sp_i06() -> Vec<Params> {
    vec![nt(1, ONE), nt(2, ZERO)]
}
fn sp_i07() -> Vec<Params> {
    vec![nt(0, ZERO), nt(3, ZERO), nt(0, ONE), nt(1, ONE), nt(4, ONE)]
}
fn sp_i10() -> Vec<Params> {
    vec![nt(1, ZERO), nt(3, ZERO)]
}
fn sp_i11() -> Vec<Params> {
    vec![nt(1, c(0.3)), nt(1, Complex::new(-1.5, 0.7)), nt(2, ZERO)]
}
fn sp_z01() -> Vec<Params> {
    vec![zp(ZERO), zp(ONE)]
}
fn sp_z0() -> Vec<Params> {
    vec![zp(ZERO)]
}
fn sp_i18() -> Vec<Params> {
    let mut v = Vec::new();
    for pair in 0..=2 {
        for n in [0, 2] {
            v.push(Params::new().with_int("pair", pair).with_int("n", n).with_complex("t", ONE));
        }
    }
    v
}
fn sp_k01() -> Vec<Params> {
    vec![nz(1, "z", ZERO), nz(3, "z", ZERO)]
}
fn sp_k02() -> Vec<Params> {
    vec![nz(1, "y", ZERO), nz(3, "y", ZERO)]
}

const P_T: &[ParamSpec] = &[cplx("t")];
const P_NT0: &[ParamSpec] = &[int("n", 0, 12), cplx("t")];
const P_NT1: &[ParamSpec] = &[int("n", 1, 12), cplx("t")];
const P_Z: &[ParamSpec] = &[cplx("z")];
const P_NZ1: &[ParamSpec] = &[int("n", 1, 8), cplx("z")];
const P_NZ_K: &[ParamSpec] = &[int("n", 1, 12), cplx("z")];
const P_NY_K: &[ParamSpec] = &[int("n", 1, 12), cplx("y")];
const P_PAIR: &[ParamSpec] = &[int("pair", 0, 2), int("n", 0, 12), cplx("t")];

const CORE_TOL: f64 = 1e-8;
const STACKED_TOL: f64 = 1e-6;

macro_rules! entry {
    ($id:expr, $params:expr, $domain:expr, $anchor:expr, $tol:expr, $note:expr,
     $lhs:expr, $rhs:expr, $adm:expr, $sample:expr, $special:expr) => {
        IdentityDescriptor {
            id: $id,
            params: $params,
            domain: $domain,
            anchor: $anchor,
            tolerance: $tol,
            note: $note,
            lhs: $lhs,
            rhs: $rhs,
            admissible: $adm,
            sample: $sample,
            special: $special,
        }
    };
}

static CATALOG: [IdentityDescriptor; 20] = [
    entry!("I01", P_T, "|t| < 1 or t = 1", "2F1(1/2,1;2;t) = (2/t)(1 - sqrt(1-t))", CORE_TOL, None,
        f::i01_lhs, f::i01_rhs, disc_with_unit_t, s_i01, sp_i01),
    entry!("I02", P_NT0, "|t| < 1 or t = 1; t = 0 gives 1, t = 1 gives 2 (n = 0) or diverges (n >= 1)",
        "2F1(1/2+n,1+n;2+n;t) as a finite (-1/2)_k sum", CORE_TOL, None,
        f::i02_lhs, f::i02_rhs, disc_with_unit_t, s_n0_4, sp_i02),
    entry!("I03", P_NT0, "|t| < 1 or t = 1; t = 0 gives 1, t = 1 gives 4 (n = 0) or diverges (n >= 1)",
        "2F1(1+2n,3/2+n;3+2n;t) via the quadratic transformation", CORE_TOL, None,
        f::i03_lhs, f::i03_rhs, disc_with_unit_t, s_i03, sp_i03),
    entry!("I04", P_NT0, "|t| < 1 or t = 1; t = 0 gives 0",
        "incomplete beta B(1+n, 1/2-n, t) in elementary form", CORE_TOL, None,
        f::i04_lhs, f::i04_rhs, disc_with_unit_t, s_n0_4, sp_i04),
    entry!("I05", P_NT0, "as I02", "2F1(1/2+n,1+n;2+n;t) with a (1-t)^(1/2-n) prefactor", CORE_TOL, None,
        f::i02_lhs, f::i05_rhs, disc_with_unit_t, s_n0_4, sp_i02),
    entry!("I06", P_NT0, "|t| < 1; t = 1 excluded (both sides infinite)",
        "regularized 2F1(1/2,1;1-n;t) = (1/2)_n (t/(1-t))^n / sqrt(1-t)", CORE_TOL, None,
        f::i06_lhs, f::i06_rhs, i06_domain, s_i06, sp_i06),
    entry!("I07", P_NT0, "|t| < 1 or t = 1; t = 1 gives 2(n+1)/(2n+1)",
        "2F1(1/2,1;2+n;t) as a finite (1/2)_k sum", CORE_TOL, None,
        f::i07_lhs, f::i07_rhs, disc_with_unit_t, s_n0_4, sp_i07),
    entry!("I08", P_NT0, "as I07", "2F1(1/2,1;2+n;t) in powers of 1 - 1/sqrt(1-t)", CORE_TOL, None,
        f::i07_lhs, f::i08_rhs, disc_with_unit_t, s_n0_4, sp_i07),
    entry!("I09", P_NT0, "as I07", "2F1(1/2,1;2+n;t) with (1-t)^(n+1/2) and a (-n-1/2)_k sum", CORE_TOL,
        Some("the overall sign is (-t)^-(n+1); the value at t = 1 comes from the formula itself"),
        f::i07_lhs, f::i09_rhs, disc_with_unit_t, s_n0_4, sp_i07),
    entry!("I10", P_NT1, "|t| < 1 with |1 - 1/sqrt(1-t)|/2 < 0.95; t = 0 gives 0",
        "P_{-n}^{-n}(1/sqrt(1-t)) in elementary form", CORE_TOL,
        Some("Legendre functions use the ((1+x)/(1-x))^(mu/2) normalization"),
        f::i10_lhs, f::i10_rhs, i10_domain, s_i10, sp_i10),
    entry!("I11", P_NT1, "all t", "regularized 2F1(1/2-n,1-n;2-n;t) = 2 (1/2)_n t^(n-1)", CORE_TOL,
        Some("n = 1 is the constant 1"),
        f::i11_lhs, f::i11_rhs, everywhere, s_i11, sp_i11),
    entry!("I12", P_NT1, "|t| < 1", "P_n^{n-1}(t) = -(-2)^n (1/2)_n t (1-t^2)^((n-1)/2)", CORE_TOL, None,
        f::i12_lhs, f::i12_rhs, open_disc_z_t, s_i12, sp_none),
    entry!("I13", P_Z, "|z| < 1 or z = 1", "2F1(1/3,2/3;3/2;z) = (3/sqrt z) sin(asin(sqrt z)/3)", CORE_TOL, None,
        f::i13_lhs, f::i13_rhs, disc_with_unit_z, s_z95, sp_z01),
    entry!("I14", P_NZ1, "|z| < 1, z not in {0, 1}",
        "regularized 2F1(1/3,2/3;3/2-n;z) through Bell polynomials of Legendre-polynomial derivatives",
        STACKED_TOL, None,
        f::i14_lhs, f::i14_rhs, i14_domain, s_i14, sp_none),
    entry!("I15", P_Z, "|z| < 1 or z = 1; z = 1 gives 4/3",
        "3F2(1/4,1/2,3/4;2/3,4/3;z) through the quartic resolvent g(z)", STACKED_TOL,
        Some("lower parameters are 2/3 and 4/3"),
        f::i15_lhs, f::i15_rhs, disc_with_unit_z, s_i15, sp_z01),
    entry!("I16", P_Z, "|z| < 1", "3F2(1/2,5/6,1/6;2/3,4/3;z) = H(-4z/(1-z)^2)/sqrt(1-z)", STACKED_TOL,
        Some("H is the I15 right side evaluated at w = -4z/(1-z)^2, including w^(1/3)"),
        f::i16_lhs, f::i16_rhs, open_disc_z, s_i16, sp_z0),
    entry!("I17", P_Z, "0 < |z| < 1 with x = sqrt(2/(1+sqrt(1-z))) in the Legendre series region",
        "P_{-1/6}^{1/3}(x) P_{-1/6}^{-1/3}(x) in closed form", STACKED_TOL,
        Some("P_{-1/6}^{-1/3} and P_{-5/6}^{-1/3} coincide (degree nu and -nu-1)"),
        f::i17_lhs, f::i17_rhs, i17_domain, s_i17, sp_none),
    entry!("I18", P_PAIR, "|t| < 1 or t = 1",
        "equivalent elementary forms: pair 0 = I02/I05, 1 = I07/I08, 2 = I07/I09", CORE_TOL, None,
        i18_lhs, i18_rhs, i18_domain, s_i18, sp_i18),
    entry!("K01", P_NZ_K, "all z; z = 0 gives 1", "1F1(n;1+n;z) = n (-z)^(-n) gamma(n,-z)", CORE_TOL, None,
        f::k01_lhs, f::k01_rhs, everywhere, s_k01, sp_k01),
    entry!("K02", P_NY_K, "all y; y = 0 gives 1", "1F1(1;1+n;y) = n e^y gamma(n,y) / y^n", CORE_TOL, None,
        f::k02_lhs, f::k02_rhs, everywhere, s_k02, sp_k02),
];

static SUB_IDENTITIES: [IdentityDescriptor; 2] = [
    entry!("I14a", P_Z, "|z| < 1", "2F1(1/3,2/3;1/2;z) = cos(asin(sqrt z)/3)/sqrt(1-z)", STACKED_TOL, None,
        f::i14a_lhs, f::i14a_rhs, i14ab_domain, s_i14ab, sp_z0),
    entry!("I14b", P_Z, "|z| < 1", "2F1(1/3,2/3;-1/2;z) in elementary form", STACKED_TOL, None,
        f::i14b_lhs, f::i14b_rhs, i14ab_domain, s_i14ab, sp_z0),
];

fn open_disc_z_t(p: &Params) -> Option<String> {
    in_disc(p, "t", false)
}

/// The twenty catalog entries, ordered by id.
pub fn list_identities() -> &'static [IdentityDescriptor] {
    &CATALOG
}

/// The explicit n = 1, 2 forms that accompany I14.
pub fn sub_identities() -> &'static [IdentityDescriptor] {
    &SUB_IDENTITIES
}

pub fn find_identity(id: &str) -> Option<&'static IdentityDescriptor> {
    CATALOG.iter().chain(SUB_IDENTITIES.iter()).find(|d| d.id == id)
}

fn lookup(id: &str) -> Result<&'static IdentityDescriptor> {
    find_identity(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

pub fn eval_identity(id: &str, params: &Params, tol: f64) -> Result<CheckRecord> {
    let d = lookup(id)?;
    if !(tol > 0.0) {
        return Err(Error::Params(format!("tolerance {tol} must be positive")));
    }
    d.validate(params)?;
    Ok(d.evaluate(&d.normalize(params), tol))
}

/// One record per grid point, in grid order.
pub fn check_grid(id: &str, grid: &[Params], tol: f64) -> Result<Vec<CheckRecord>> {
    let d = lookup(id)?;
    grid.iter().map(|p| eval_identity(d.id, p, tol)).collect()
}

/// Default sample for `id`: explicit limit points, then seeded random points.
pub fn default_grid(id: &str, seed: u64) -> Result<Vec<Params>> {
    Ok(lookup(id)?.default_grid(seed, DEFAULT_GRID_SIZE))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Verdict;

    #[test]
    fn catalog_shape() {
        let ids: Vec<_> = list_identities().iter().map(|d| d.id).collect();
        assert_eq!(ids.len(), 20);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, ids);
        assert!(list_identities().iter().all(|d| !d.anchor.is_empty()));
    }

    #[test]
    fn examples() {
        let r = eval_identity("I01", &Params::new().with_complex("t", c(0.5)), 1e-9).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!((r.lhs_value.unwrap().re - 1.171_572_875).abs() < 1e-9);
        let r = eval_identity("I07", &nt(1, ONE), 1e-9).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!((r.rhs_value.unwrap().re - 4.0 / 3.0).abs() < 1e-12);
        let r = eval_identity("I15", &zp(ONE), 1e-6).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        let r = eval_identity("I02", &nt(2, ONE), 1e-9).unwrap();
        assert_eq!(r.verdict, Verdict::DivergentBoth);
        let r = eval_identity("I06", &nt(1, ONE), 1e-9).unwrap();
        assert_eq!(r.verdict, Verdict::SkippedDomain);
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(
            eval_identity("I99", &zp(ONE), 1e-8),
            Err(Error::UnknownIdentity(_))
        ));
        assert!(eval_identity("I02", &Params::new().with_complex("t", c(0.5)), 1e-8).is_err());
        assert!(eval_identity("I13", &nt(1, c(0.5)), 1e-8).is_err());
    }

    #[test]
    fn default_grids_pass() {
        for d in list_identities().iter().chain(sub_identities()) {
            let grid = d.default_grid(DEFAULT_SEED, DEFAULT_GRID_SIZE);
            assert_eq!(grid.len(), DEFAULT_GRID_SIZE);
            let recs = check_grid(d.id, &grid, d.tolerance).unwrap();
            let fails: Vec<_> = recs.iter().filter(|r| r.verdict == Verdict::Fail).collect();
            let skips = recs.iter().filter(|r| r.verdict == Verdict::SkippedDomain).count();
            assert!(fails.is_empty(), "{}: {} fails, first {:?}", d.id, fails.len(), fails.first());
            assert!(skips <= 10, "{}: {skips} skips", d.id);
        }
    }
}
