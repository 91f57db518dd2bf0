//! Run configuration and machine-readable certificates.
//!
//! Certificates aggregate per-m check results. Their JSON form is canonical:
//! objects are serialized with sorted keys (serde_json's default map), and
//! the only nondeterministic fields (wall-clock timings and the generation
//! timestamp) live in a single `meta` object that [`Certificate::canonical_json`]
//! strips, so identical `(config, seed)` runs hash identically.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::lemmas::{CheckResult, Status};
use crate::{Error, Result};

pub const SCHEMA_VERSION: &str = "1";

/// Which checks to run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LemmaFilter {
    All,
    Ids(Vec<String>),
}

impl LemmaFilter {
    pub fn includes(&self, id: &str) -> bool {
        match self {
            LemmaFilter::All => true,
            LemmaFilter::Ids(ids) => ids.iter().any(|i| i == id),
        }
    }
}

/// Configuration of a verification run. Everything that influences results
/// is explicit here and echoed into the certificate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub m_values: Vec<u32>,
    pub seed: u64,
    pub bsgs_degree_cap: usize,
    pub closure_cap: usize,
    pub ball_radius: u32,
    pub ball_max_vertices: usize,
    /// Largest m for which the per-m certificate includes ball checks.
    pub ball_m_cap: u32,
    pub jordan_budget: usize,
    pub lemmas: LemmaFilter,
    /// Deliberately corrupt the `y` table before checking; a falsification
    /// control that must flip checks to fail.
    pub negative_control: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            m_values: Vec::new(),
            seed: 1,
            bsgs_degree_cap: 256,
            closure_cap: 1 << 20,
            ball_radius: 6,
            ball_max_vertices: 2_000_000,
            ball_m_cap: 5,
            jordan_budget: 100_000,
            lemmas: LemmaFilter::All,
            negative_control: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        // An empty range is valid and yields an empty, passing certificate.
        if let Some(&m) = self.m_values.iter().find(|&&m| m < 4) {
            return Err(Error::InvalidConfig(format!("m must be at least 4, got {m}")));
        }
        if self.bsgs_degree_cap == 0
            || self.closure_cap == 0
            || self.ball_max_vertices == 0
            || self.jordan_budget == 0
        {
            return Err(Error::InvalidConfig("caps must be positive".into()));
        }
        Ok(())
    }
}

/// All checks for one value of m.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceReport {
    pub m: u32,
    pub checks: Vec<CheckResult>,
}

/// Tool identification embedded in certificates.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

/// Nondeterministic bookkeeping, excluded from the canonical form.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CertificateMeta {
    pub generated_at_unix_ms: u64,
    /// Wall-clock per check, keyed `m<m>/<check id>`.
    pub timings_ms: BTreeMap<String, u64>,
}

/// A structured record of check outcomes for a range of m, serializable to
/// canonical JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: String,
    pub tool: ToolInfo,
    pub config: RunConfig,
    pub results: Vec<InstanceReport>,
    pub overall: Status,
    pub meta: CertificateMeta,
}

impl Certificate {
    /// Overall status: fail iff any asserted check failed.
    pub fn compute_overall(results: &[InstanceReport]) -> Status {
        let failed = results
            .iter()
            .flat_map(|r| &r.checks)
            .any(|c| c.status == Status::Fail);
        if failed {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    /// Full JSON, pretty-printed with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("certificate serializes");
        serde_json::to_string_pretty(&value).expect("value prints")
    }

    /// Canonical JSON: the full certificate minus the `meta` object. Two runs
    /// with identical config and seed produce byte-identical canonical forms.
    pub fn canonical_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("certificate serializes");
        if let Some(obj) = value.as_object_mut() {
            obj.remove("meta");
        }
        serde_json::to_string_pretty(&value).expect("value prints")
    }

    /// Human-readable table keyed by check id and anchor label.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for report in &self.results {
            out.push_str(&format!("m = {}\n", report.m));
            for check in &report.checks {
                out.push_str(&format!(
                    "  {:<18} {:<44} {}\n",
                    check.id,
                    check.anchor,
                    check.status.as_str()
                ));
                if check.status == Status::Fail {
                    for (key, value) in &check.details {
                        out.push_str(&format!("      {key}: {value}\n"));
                    }
                }
            }
        }
        out.push_str(&format!("overall: {}\n", self.overall.as_str()));
        out
    }

    /// Checks that failed, as `(m, id)` pairs.
    pub fn failures(&self) -> Vec<(u32, String)> {
        self.results
            .iter()
            .flat_map(|r| {
                r.checks
                    .iter()
                    .filter(|c| c.status == Status::Fail)
                    .map(move |c| (r.m, c.id.clone()))
            })
            .collect()
    }
}
