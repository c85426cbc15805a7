use serde::{Deserialize, Serialize};

use super::{SuiteConfig, PRNG_NAME};
use crate::root_system::SystemId;

/// Failing witnesses kept per check; the failure count is always exact.
pub const MAX_WITNESSES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

impl Witness {
    pub fn new(detail: impl Into<String>) -> Self {
        Witness { detail: detail.into(), residual: None }
    }

    pub fn with_residual(detail: impl Into<String>, residual: impl Into<String>) -> Self {
        Witness { detail: detail.into(), residual: Some(residual.into()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub attempted: u64,
    pub passed: u64,
    pub failures: Vec<Witness>,
}

impl CheckResult {
    /// Builds a check from per-case outcomes, `None` meaning the case held.
    pub fn from_outcomes(name: impl Into<String>, outcomes: impl IntoIterator<Item = Option<Witness>>) -> Self {
        let mut c = CheckResult { name: name.into(), attempted: 0, passed: 0, failures: Vec::new() };
        for o in outcomes {
            c.attempted += 1;
            match o {
                None => c.passed += 1,
                Some(w) if c.failures.len() < MAX_WITNESSES => c.failures.push(w),
                Some(_) => {}
            }
        }
        c
    }

    pub fn failed(&self) -> u64 {
        self.attempted - self.passed
    }

    pub fn ok(&self) -> bool {
        self.attempted > 0 && self.passed == self.attempted
    }

    /// One human-readable line, e.g. `PASS jacobi.antisymmetry 120/120`.
    pub fn line(&self) -> String {
        format!("{} {} {}/{}", if self.ok() { "PASS" } else { "FAIL" }, self.name, self.passed, self.attempted)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub system: SystemId,
    pub seed: u64,
    pub samples: Option<usize>,
    pub rings: Vec<String>,
    pub prng: String,
    pub attempted: u64,
    pub passed: u64,
    pub checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(config: &SuiteConfig, checks: Vec<CheckResult>) -> Self {
        VerificationReport {
            suite: config.suite.name().to_string(),
            system: config.system,
            seed: config.seed,
            samples: config.samples,
            rings: config.rings().iter().map(|r| r.to_string()).collect(),
            prng: PRNG_NAME.to_string(),
            attempted: checks.iter().map(|c| c.attempted).sum(),
            passed: checks.iter().map(|c| c.passed).sum(),
            checks,
            wall_time_ms: None,
        }
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(CheckResult::ok)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}
