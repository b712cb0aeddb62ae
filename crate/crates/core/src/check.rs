//! Differential-check records shared by the identity catalog and the integral checks.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::cx::{self, Complex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Complex(Complex),
}

impl ParamValue {
    pub fn as_complex(&self) -> Complex {
        match *self {
            ParamValue::Int(n) => cx::c(n as f64),
            ParamValue::Complex(z) => z,
        }
    }

    /// Integer view when the value is an exact integer.
    pub fn as_int(&self) -> Option<i64> {
        match *self {
            ParamValue::Int(n) => Some(n),
            ParamValue::Complex(z) if z.im == 0.0 && z.re.fract() == 0.0 => Some(z.re as i64),
            ParamValue::Complex(_) => None,
        }
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ParamValue::Int(a), ParamValue::Int(b)) => a.cmp(b),
            _ => {
                let (a, b) = (self.as_complex(), other.as_complex());
                a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
            }
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Complex(z) => write!(f, "{}", cx::format(*z)),
        }
    }
}

/// Named parameter values in schema order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Params(pub Vec<(String, ParamValue)>);

impl Params {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn with_int(mut self, name: &str, v: i64) -> Self {
        self.0.push((name.to_string(), ParamValue::Int(v)));
        self
    }

    pub fn with_complex(mut self, name: &str, v: Complex) -> Self {
        self.0.push((name.to_string(), ParamValue::Complex(v)));
        self
    }

    pub fn get(&self, name: &str) -> Option<ParamValue> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }

    pub fn int(&self, name: &str) -> Result<i64> {
        match self.get(name) {
            Some(ParamValue::Int(n)) => Ok(n),
            Some(ParamValue::Complex(z)) if z.im == 0.0 && z.re.fract() == 0.0 => Ok(z.re as i64),
            Some(_) => Err(Error::Params(format!("`{name}` must be an integer"))),
            None => Err(Error::Params(format!("missing parameter `{name}`"))),
        }
    }

    pub fn complex(&self, name: &str) -> Result<Complex> {
        self.get(name)
            .map(|v| v.as_complex())
            .ok_or_else(|| Error::Params(format!("missing parameter `{name}`")))
    }

    /// Lexicographic order over the values, used to sort report records.
    pub fn cmp_values(&self, other: &Self) -> Ordering {
        for ((_, a), (_, b)) in self.0.iter().zip(other.0.iter()) {
            let o = a.cmp_key(b);
            if o != Ordering::Equal {
                return o;
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    SkippedDomain,
    DivergentBoth,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::SkippedDomain => "skipped_domain",
            Verdict::DivergentBoth => "divergent_both",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub identity_id: String,
    pub params: Params,
    pub lhs_value: Option<Complex>,
    pub rhs_value: Option<Complex>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub tolerance: f64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn skipped(id: &str, params: Params, tol: f64, note: impl Into<String>) -> Self {
        Self {
            identity_id: id.to_string(),
            params,
            lhs_value: None,
            rhs_value: None,
            abs_err: None,
            rel_err: None,
            tolerance: tol,
            verdict: Verdict::SkippedDomain,
            note: Some(note.into()),
        }
    }

    /// Builds a record from two evaluations.
    ///
    /// Pass when rel_err <= tol, or abs_err <= tol while |lhs| < 1.
    pub fn compare(
        id: &str,
        params: Params,
        lhs: Result<Complex>,
        rhs: Result<Complex>,
        tol: f64,
    ) -> Self {
        let mut rec = Self::skipped(id, params, tol, "");
        rec.note = None;
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                rec.lhs_value = Some(l);
                rec.rhs_value = Some(r);
                if !cx::is_finite(l) || !cx::is_finite(r) {
                    rec.verdict = Verdict::Fail;
                    rec.note = Some("non-finite value".into());
                    return rec;
                }
                let abs = (l - r).norm();
                let rel = if r.norm() > 0.0 { abs / r.norm() } else { abs };
                rec.abs_err = Some(abs);
                rec.rel_err = Some(rel);
                let pass = rel <= tol || (l.norm() < 1.0 && abs <= tol);
                rec.verdict = if pass { Verdict::Pass } else { Verdict::Fail };
            }
            (Err(Error::Divergent { .. }), Err(Error::Divergent { .. })) => {
                rec.verdict = Verdict::DivergentBoth;
            }
            (l, r) => {
                let lerr = l.as_ref().err().cloned();
                let rerr = r.as_ref().err().cloned();
                rec.lhs_value = l.ok();
                rec.rhs_value = r.ok();
                let domain = lerr.iter().chain(rerr.iter()).any(|e| e.is_domain_like());
                let note = lerr
                    .iter()
                    .map(|e| format!("lhs: {e}"))
                    .chain(rerr.iter().map(|e| format!("rhs: {e}")))
                    .collect::<Vec<_>>()
                    .join("; ");
                rec.verdict = if domain {
                    Verdict::SkippedDomain
                } else {
                    Verdict::Fail
                };
                rec.note = Some(note);
            }
        }
        rec
    }
}
