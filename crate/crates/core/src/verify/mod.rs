//! Verification suites: structure-constant identities, square combinatorics,
//! the case-identity ledger, commutator reductions and orbit membership.

mod combinatorics;
mod commutator;
mod identities;
mod ledger;
mod orbit;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use combinatorics::combinatorics_suite;
pub use commutator::{
    commutator_decomposition, commutator_suite, orthogonal_fixes_forms, verify_commutator_reduction, Decomposition,
};
pub use identities::jacobi_suite;
pub use ledger::{ledger_entries, ledger_suite, verify_case_identity, LedgerEntry, SubCase};
pub use orbit::{negative_control, verify_orbit_membership, words_suite};
pub use report::{CheckResult, VerificationReport, Witness};

use crate::error::{Error, Result};
use crate::ring::RingSpec;
use crate::root_system::{RootSystem, SystemId};
use crate::signs::SignTable;

pub const PRNG_NAME: &str = "ChaCha8Rng";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Jacobi,
    Combinatorics,
    Cases,
    Commutator,
    Words,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Jacobi => "jacobi",
            Suite::Combinatorics => "combinatorics",
            Suite::Cases => "cases",
            Suite::Commutator => "commutator",
            Suite::Words => "words",
            Suite::All => "all",
        }
    }

    /// Sample count used when none is configured.
    pub fn default_samples(self) -> usize {
        match self {
            Suite::Jacobi => 100_000,
            Suite::Combinatorics => 10_000,
            Suite::Cases | Suite::Commutator | Suite::Words | Suite::All => 100,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "jacobi" => Suite::Jacobi,
            "combinatorics" => Suite::Combinatorics,
            "cases" => Suite::Cases,
            "commutator" => Suite::Commutator,
            "words" | "orbit" => Suite::Words,
            "all" => Suite::All,
            other => return Err(Error::InvalidConfig(format!("unknown suite '{}'", other))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub system: SystemId,
    pub suite: Suite,
    pub seed: u64,
    /// `None` picks a per-suite default.
    pub samples: Option<usize>,
    /// Rings for the word suite; `None` means `int`, `zmod:4` and `zmod:7`.
    pub ring: Option<RingSpec>,
    /// Record wall time in the report (makes it non-reproducible).
    pub timing: bool,
}

impl SuiteConfig {
    pub fn new(system: SystemId, suite: Suite) -> Self {
        SuiteConfig { system, suite, seed: 0, samples: None, ring: None, timing: false }
    }

    pub fn samples_for(&self, suite: Suite) -> usize {
        self.samples.unwrap_or_else(|| suite.default_samples())
    }

    pub fn rings(&self) -> Vec<RingSpec> {
        match self.ring {
            Some(r) => vec![r],
            None => vec![RingSpec::Integers, RingSpec::IntegersMod(4), RingSpec::IntegersMod(7)],
        }
    }
}

/// A generator for one named check, independent of every other check.
pub(crate) fn rng_for(seed: u64, label: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// Runs the configured suite and collects every check into one report.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    if config.samples == Some(0) {
        return Err(Error::InvalidConfig("samples must be positive".into()));
    }
    if matches!(config.ring, Some(RingSpec::Polynomials)) {
        return Err(Error::InvalidConfig("word suite runs over int or zmod:m".into()));
    }
    let start = Instant::now();
    let rs = RootSystem::new(config.system)?;
    let signs = SignTable::new(&rs);
    let suites = match config.suite {
        Suite::All => vec![Suite::Jacobi, Suite::Combinatorics, Suite::Cases, Suite::Commutator, Suite::Words],
        s => vec![s],
    };
    let mut checks = Vec::new();
    for s in suites {
        let n = config.samples_for(s);
        let seed = config.seed;
        checks.extend(match s {
            Suite::Jacobi => jacobi_suite(&rs, &signs, seed, n),
            Suite::Combinatorics => combinatorics_suite(&rs, &signs, seed, n),
            Suite::Cases => ledger_suite(&rs, &signs, seed, n),
            Suite::Commutator => commutator_suite(&rs, &signs, seed, n),
            Suite::Words => words_suite(&rs, &signs, seed, n, &config.rings())?,
            Suite::All => unreachable!(),
        });
    }
    let mut report = VerificationReport::new(config, checks);
    if config.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}
