//! Named verification sweeps and their reports.
//!
//! A check maps a parameter range to a list of per-instance [`Detail`]
//! records. Records are emitted in parameter order, so reports are
//! byte-identical between runs; the wall-clock time is kept on the report but
//! only rendered on request.

mod checks;
mod render;

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};

pub use render::{render, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One checked instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub info: String,
}

impl Detail {
    pub fn new(
        inputs: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        ok: bool,
    ) -> Self {
        Self {
            inputs: inputs.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            ok,
            info: String::new(),
        }
    }

    /// `ok` is `expected == actual` on the rendered values.
    pub fn eq(inputs: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (e, a) = (expected.to_string(), actual.to_string());
        let ok = e == a;
        Self::new(inputs, e, a, ok)
    }

    pub fn with_info(mut self, info: impl Into<String>) -> Self {
        self.info = info.into();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub parameter_range: String,
    pub status: Status,
    pub details: Vec<Detail>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn from_details(
        check_id: &str,
        parameter_range: String,
        details: Vec<Detail>,
        notes: Vec<String>,
    ) -> Self {
        let status = if details.is_empty() {
            Status::Skipped
        } else if details.iter().all(|d| d.ok) {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            check_id: check_id.to_string(),
            parameter_range,
            status,
            details,
            notes,
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn failures(&self) -> impl Iterator<Item = &Detail> {
        self.details.iter().filter(|d| !d.ok)
    }
}

/// Optional overrides of a check's default `n` range.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub n_min: Option<u32>,
    pub n_max: Option<u32>,
}

impl CheckParams {
    pub fn n_max(n_max: u32) -> Self {
        Self {
            n_min: None,
            n_max: Some(n_max),
        }
    }

    /// The effective range: defaults overridden by the params, validated
    /// against the check's floor and cap.
    fn range(&self, spec: &CheckSpec) -> Result<RangeInclusive<u32>> {
        let lo = self.n_min.unwrap_or(spec.default.0);
        let hi = self.n_max.unwrap_or(spec.default.1);
        if lo < spec.floor {
            return Err(Error::InvalidArgument(format!(
                "check `{}` needs n >= {}, got {lo}",
                spec.id, spec.floor
            )));
        }
        if hi > spec.cap {
            return Err(Error::CapExceeded(format!(
                "check `{}` allows n <= {}, got {hi}",
                spec.id, spec.cap
            )));
        }
        Ok(lo..=hi)
    }
}

/// Registration data for one check.
#[derive(Debug, Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub summary: &'static str,
    /// Default inclusive `n` range.
    pub default: (u32, u32),
    /// Smallest admissible `n`.
    pub floor: u32,
    /// Largest admissible `n`.
    pub cap: u32,
}

const fn spec(
    id: &'static str,
    summary: &'static str,
    default: (u32, u32),
    floor: u32,
    cap: u32,
) -> CheckSpec {
    CheckSpec {
        id,
        summary,
        default,
        floor,
        cap,
    }
}

/// Every registered check, in canonical order.
pub const CHECKS: &[CheckSpec] = &[
    spec(
        "main-theorem",
        "gonality of the strip graphs via sumsets",
        (0, 10),
        0,
        14,
    ),
    spec(
        "genus-fib",
        "covering numbers of the fan, strip and signed-square sets",
        (3, 12),
        2,
        16,
    ),
    spec(
        "freiman-fan",
        "automorphism-induced Freiman isomorphisms on the fan set",
        (3, 8),
        2,
        12,
    ),
    spec(
        "freiman-strip",
        "automorphism-induced Freiman isomorphisms on the strip set",
        (3, 8),
        2,
        12,
    ),
    spec(
        "fan-gonality",
        "brute-force fan gonality against the closed formula",
        (2, 8),
        1,
        9,
    ),
    spec(
        "strip-gonality-restated",
        "strip gonality from the closed-form set",
        (2, 12),
        2,
        14,
    ),
    spec(
        "kappa-closed-forms",
        "two-forest counts against Fibonacci closed forms and enumeration",
        (1, 14),
        1,
        30,
    ),
    spec(
        "cyclicity",
        "Smith invariants of the fan and strip Laplacians",
        (2, 14),
        1,
        30,
    ),
    spec(
        "set-a-leading-terms",
        "Zeckendorf leading terms of the strip set",
        (3, 14),
        3,
        40,
    ),
    spec(
        "classify-2a",
        "leading-term classification of 2A",
        (8, 14),
        7,
        16,
    ),
    spec(
        "classify-3a",
        "leading-term classification of 3A minus 2A",
        (8, 12),
        8,
        14,
    ),
    spec(
        "negation-table",
        "Zeckendorf forms of negated strip elements",
        (7, 14),
        7,
        40,
    ),
    spec(
        "upper-bound-identity",
        "the degree-5 Fibonacci identity",
        (3, 30),
        3,
        40,
    ),
    spec(
        "bound-of-3",
        "no element D of A with D - A inside A",
        (4, 10),
        4,
        14,
    ),
    spec(
        "bound-of-4",
        "no element D of 2A with D - A inside 2A",
        (6, 10),
        6,
        14,
    ),
    spec(
        "rank-degree-5",
        "3v0 + 2v1 has positive rank on the strip graphs",
        (8, 10),
        2,
        12,
    ),
    spec(
        "mfgon",
        "multiplicity-free gonality against the independence number",
        (2, 8),
        1,
        10,
    ),
    spec(
        "dhar-traces",
        "worked Dhar reductions on the strip graphs",
        (8, 8),
        8,
        8,
    ),
    spec(
        "cross-method-gonality",
        "divisor search against sumset gonality",
        (2, 8),
        2,
        9,
    ),
];

pub fn find_check(id: &str) -> Result<&'static CheckSpec> {
    CHECKS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs one registered check.
pub fn run_check(check_id: &str, params: &CheckParams) -> Result<VerificationReport> {
    let spec = find_check(check_id)?;
    let range = params.range(spec)?;
    let start = Instant::now();
    let (details, notes) = checks::dispatch(spec.id, range.clone())?;
    let label = if spec.id == "dhar-traces" {
        "fixed instances".to_string()
    } else if range.is_empty() {
        "empty".to_string()
    } else {
        format!("n = {}..={}", range.start(), range.end())
    };
    let mut report = VerificationReport::from_details(spec.id, label, details, notes);
    report.elapsed = start.elapsed();
    Ok(report)
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete_and_unique() {
        assert_eq!(CHECKS.len(), 19);
        let mut ids: Vec<_> = CHECKS.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 19);
        assert!(matches!(find_check("nope"), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn range_validation() {
        let s = find_check("classify-2a").unwrap();
        assert_eq!(CheckParams::default().range(s).unwrap(), 8..=14);
        assert!(matches!(
            CheckParams::n_max(40).range(s),
            Err(Error::CapExceeded(_))
        ));
        let low = CheckParams {
            n_min: Some(3),
            n_max: None,
        };
        assert!(matches!(low.range(s), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn empty_range_is_skipped() {
        let r = run_check("bound-of-4", &CheckParams::n_max(5)).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.passed());
    }
}
