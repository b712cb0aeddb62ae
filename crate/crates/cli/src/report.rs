use std::time::Duration;

use hyperroots::{CheckRecord, Verdict};
use serde::Serialize;

use crate::config::SweepConfig;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped_domain: usize,
    pub divergent_both: usize,
}

impl Summary {
    pub fn of(records: &[CheckRecord]) -> Self {
        let mut s = Summary {
            total: records.len(),
            ..Default::default()
        };
        for r in records {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::SkippedDomain => s.skipped_domain += 1,
                Verdict::DivergentBoth => s.divergent_both += 1,
            }
        }
        s
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "total={} pass={} fail={} skipped_domain={} divergent_both={}",
            self.total, self.pass, self.fail, self.skipped_domain, self.divergent_both
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: String,
    pub config: SweepConfig,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(config: SweepConfig, records: Vec<CheckRecord>, elapsed: Duration) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            summary: Summary::of(&records),
            records,
            wall_time_ms: elapsed.as_millis() as u64,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        // shortest round-trip form, exponent for tiny or huge values, no negative zero
        let opt = |v: Option<f64>| v.map(|x| format!("{:?}", x + 0.0)).unwrap_or_default();
        w.write_record([
            "identity_id",
            "params",
            "lhs_re",
            "lhs_im",
            "rhs_re",
            "rhs_im",
            "abs_err",
            "rel_err",
            "verdict",
        ])
        .expect("in-memory write");
        for r in &self.records {
            w.write_record([
                r.identity_id.clone(),
                r.params.to_string(),
                opt(r.lhs_value.map(|z| z.re)),
                opt(r.lhs_value.map(|z| z.im)),
                opt(r.rhs_value.map(|z| z.re)),
                opt(r.rhs_value.map(|z| z.im)),
                opt(r.abs_err),
                opt(r.rel_err),
                r.verdict.as_str().to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}
