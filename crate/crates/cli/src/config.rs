use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use hyperroots::cx::{self, Complex};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CliError, CliResult};

pub const DEFAULT_SEED: u64 = hyperroots::identities::DEFAULT_SEED;

/// A complex number read from JSON as a number or an `a+bi` string.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scalar(pub Complex);

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.im == 0.0 {
            s.serialize_f64(self.0.re)
        } else {
            s.serialize_str(&cx::format(self.0))
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Scalar;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number or a complex string like 1-2i")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Scalar, E> {
                Ok(Scalar(cx::c(v)))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
                Ok(Scalar(cx::c(v as f64)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
                Ok(Scalar(cx::c(v as f64)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
                cx::parse(v)
                    .map(Scalar)
                    .ok_or_else(|| E::custom(format!("bad complex value `{v}`")))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GridAxis {
    Range { min: Scalar, max: Scalar, count: usize },
    List(Vec<Scalar>),
}

impl GridAxis {
    /// Evenly spaced points from min to max inclusive, or the list as given.
    pub fn values(&self) -> Vec<Complex> {
        match self {
            GridAxis::List(v) => v.iter().map(|s| s.0).collect(),
            GridAxis::Range { min, max, count } => {
                if *count == 1 {
                    return vec![min.0];
                }
                let step = (max.0 - min.0) / (*count - 1) as f64;
                (0..*count)
                    .map(|k| if k + 1 == *count { max.0 } else { min.0 + step * k as f64 })
                    .collect()
            }
        }
    }

    fn validate(&self, name: &str) -> CliResult<()> {
        let n = match self {
            GridAxis::Range { count, .. } => *count,
            GridAxis::List(v) => v.len(),
        };
        if n == 0 {
            return Err(CliError::usage(format!("grid axis `{name}` has no points")));
        }
        Ok(())
    }
}

/// `name:min:max:count` or `name=v1,v2,...`.
pub fn parse_grid_arg(arg: &str) -> CliResult<(String, GridAxis)> {
    let bad = |why: &str| CliError::usage(format!("bad --grid `{arg}`: {why}"));
    let num = |s: &str| cx::parse(s).map(Scalar).ok_or_else(|| bad(&format!("`{s}` is not a number")));
    if let Some((name, list)) = arg.split_once('=') {
        let vals = list.split(',').map(num).collect::<CliResult<Vec<_>>>()?;
        return Ok((name.to_string(), GridAxis::List(vals)));
    }
    let parts: Vec<&str> = arg.split(':').collect();
    if parts.len() != 4 {
        return Err(bad("expected name:min:max:count or name=v1,v2,..."));
    }
    let count: usize = parts[3].parse().map_err(|_| bad("count must be a positive integer"))?;
    if count == 0 {
        return Err(bad("count must be at least 1"));
    }
    Ok((
        parts[0].to_string(),
        GridAxis::Range {
            min: num(parts[1])?,
            max: num(parts[2])?,
            count,
        },
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(format!("unknown format `{s}` (json or csv)")),
        }
    }
}

fn default_seed() -> u64 {
    DEFAULT_SEED
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    /// Empty means every catalog entry, the explicit I14 forms and the integral checks.
    #[serde(default)]
    pub identity_ids: Vec<String>,
    #[serde(default)]
    pub grid: BTreeMap<String, GridAxis>,
    /// None uses each check's own tolerance.
    #[serde(default)]
    pub tolerance: Option<f64>,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub output_format: OutputFormat,
    #[serde(default)]
    pub output_path: Option<String>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            identity_ids: Vec::new(),
            grid: BTreeMap::new(),
            tolerance: None,
            seed: DEFAULT_SEED,
            output_format: OutputFormat::Json,
            output_path: None,
        }
    }
}

impl SweepConfig {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|e| CliError::Config {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }

    pub fn validate(&self) -> CliResult<()> {
        if let Some(t) = self.tolerance {
            if !(t > 0.0) {
                return Err(CliError::usage(format!("tolerance {t} must be positive")));
            }
        }
        for (name, axis) in &self.grid {
            axis.validate(name)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperroots::cx::c;

    #[test]
    fn grid_args() {
        let (name, axis) = parse_grid_arg("t:-0.9:0.9:3").unwrap();
        assert_eq!(name, "t");
        assert_eq!(axis.values(), vec![c(-0.9), c(0.0), c(0.9)]);
        let (_, axis) = parse_grid_arg("z=0.1,0.2+0.5i").unwrap();
        assert_eq!(axis.values(), vec![c(0.1), Complex::new(0.2, 0.5)]);
        assert!(parse_grid_arg("t:0:1").is_err());
        assert!(parse_grid_arg("t:0:1:0").is_err());
        assert!(parse_grid_arg("t=a").is_err());
    }

    #[test]
    fn config_round_trip() {
        let json = r#"{"identity_ids":["I01"],"grid":{"t":{"min":-0.5,"max":"0.5+0.1i","count":4},"n":[1,2]},"tolerance":1e-9,"seed":3}"#;
        let cfg: SweepConfig = serde_json::from_str(json).unwrap();
        assert_eq!(cfg.grid["n"].values(), vec![c(1.0), c(2.0)]);
        assert_eq!(cfg.output_format, OutputFormat::Json);
        let back: SweepConfig = serde_json::from_str(&serde_json::to_string(&cfg).unwrap()).unwrap();
        assert_eq!(back, cfg);
        assert!(serde_json::from_str::<SweepConfig>(r#"{"bogus":1}"#).is_err());
    }
}
