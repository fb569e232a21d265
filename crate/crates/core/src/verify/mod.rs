//! Named verification suites over the whole engine, with deterministic reports.

pub mod config;
pub mod properties;
pub mod report;
pub mod suites;

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::SuiteError;
use crate::models::{DualSteenrod, HMu};

pub use config::{Fault, VerifyConfig};
pub use report::{CheckResult, Format, Status, VerificationReport};

/// Result of one check: whether it passed and what was computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub pass: bool,
    pub witness: String,
}

impl Outcome {
    pub fn holds(pass: bool, witness: impl Into<String>) -> Self {
        Self { pass, witness: witness.into() }
    }

    /// Passes when the computed text equals the expected text.
    pub fn matches(actual: impl Into<String>, expected: &str) -> Self {
        let actual = actual.into();
        let pass = actual == expected;
        let witness = if pass { actual } else { format!("{actual} (expected {expected})") };
        Self { pass, witness }
    }
}

type Runner = Box<dyn Fn(&Env) -> Result<Outcome, String> + Send + Sync>;

pub struct Check {
    pub id: &'static str,
    pub anchor: &'static str,
    pub imported: bool,
    run: Runner,
}

impl Check {
    pub fn new(
        id: &'static str,
        anchor: &'static str,
        run: impl Fn(&Env) -> Result<Outcome, String> + Send + Sync + 'static,
    ) -> Self {
        Self { id, anchor, imported: false, run: Box::new(run) }
    }

    /// A step taken as given; it always reports pass with `imported` set.
    pub fn imported(id: &'static str, anchor: &'static str) -> Self {
        Self {
            id,
            anchor,
            imported: true,
            run: Box::new(|_| Ok(Outcome::holds(true, "imported, not machine-checked"))),
        }
    }
}

/// Shared state for the checks of one run; models are built on first use.
pub struct Env {
    pub config: VerifyConfig,
    dual: OnceLock<Arc<DualSteenrod>>,
    hmu: OnceLock<Arc<HMu>>,
}

impl Env {
    pub fn new(config: VerifyConfig) -> Self {
        Self { config, dual: OnceLock::new(), hmu: OnceLock::new() }
    }

    pub fn dual(&self) -> &DualSteenrod {
        self.dual.get_or_init(|| Arc::new(DualSteenrod::new(self.config.max_degree)))
    }

    pub fn hmu(&self) -> &HMu {
        self.hmu.get_or_init(|| Arc::new(HMu::new(self.config.max_degree)))
    }
}

fn execute(check: &Check, env: &Env, prefix: &str) -> CheckResult {
    let start = Instant::now();
    let outcome = (check.run)(env);
    let elapsed_ms = if env.config.timing { start.elapsed().as_millis() as u64 } else { 0 };
    let (status, witness) = match outcome {
        Ok(o) if o.pass => (Status::Pass, o.witness),
        Ok(o) => (Status::Fail, o.witness),
        Err(e) => (Status::Error, e),
    };
    CheckResult {
        id: format!("{prefix}{}", check.id),
        status,
        witness,
        elapsed_ms,
        anchor: check.anchor.into(),
        imported: check.imported,
    }
}

fn run_checks(checks: &[Check], env: &Env, prefix: &str) -> Vec<CheckResult> {
    if env.config.parallel {
        checks.par_iter().map(|c| execute(c, env, prefix)).collect()
    } else {
        checks.iter().map(|c| execute(c, env, prefix)).collect()
    }
}

/// Runs a registered suite; `all` runs every suite with ids prefixed by suite name.
pub fn run_suite(name: &str, config: &VerifyConfig) -> Result<VerificationReport, SuiteError> {
    let env = Env::new(config.clone());
    let results = if name == "all" {
        let mut out = Vec::new();
        for suite in suites::SUITE_NAMES {
            let checks = suites::checks(suite)?;
            out.extend(run_checks(&checks, &env, &format!("{suite}/")));
        }
        out
    } else {
        run_checks(&suites::checks(name)?, &env, "")
    };
    Ok(VerificationReport::new(name, results, config.echo()))
}
