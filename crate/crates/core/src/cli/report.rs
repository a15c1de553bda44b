use std::fmt;
use std::time::Instant;

use serde::Serialize;

/// Stored counterexamples are capped; the total count is always reported.
const MAX_WITNESSES: usize = 25;

/// Outcome of one `verify` run.
///
/// A failing report always carries at least one witness, written with exact
/// values (rationals as `p/q`).
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub parameters: Vec<(String, String)>,
    pub pass: bool,
    pub checks: usize,
    pub violations: usize,
    pub witnesses: Vec<String>,
    pub statistics: Vec<(String, String)>,
    pub elapsed_ms: u128,
    #[serde(skip)]
    started: Option<Instant>,
}

impl VerificationReport {
    pub fn new(claim: &str) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            parameters: Vec::new(),
            pass: true,
            checks: 0,
            violations: 0,
            witnesses: Vec::new(),
            statistics: Vec::new(),
            elapsed_ms: 0,
            started: Some(Instant::now()),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.push((key.to_string(), value.to_string()));
        self
    }

    pub fn stat(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.statistics.push((key.to_string(), value.to_string()));
        self
    }

    /// Records one check; on failure the witness closure is evaluated.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok {
            self.pass = false;
            self.violations += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
        ok
    }

    /// Stops the clock.
    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.elapsed_ms = t.elapsed().as_millis();
        }
        debug_assert!(self.pass || !self.witnesses.is_empty());
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        let obj = |pairs: &[(String, String)]| {
            serde_json::Value::Object(
                pairs.iter().map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone()))).collect(),
            )
        };
        serde_json::json!({
            "claim": self.claim,
            "parameters": obj(&self.parameters),
            "pass": self.pass,
            "checks": self.checks,
            "violations": self.violations,
            "witnesses": self.witnesses,
            "statistics": obj(&self.statistics),
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim: {}", self.claim)?;
        for (k, v) in &self.parameters {
            writeln!(f, "  {k} = {v}")?;
        }
        writeln!(
            f,
            "result: {} ({} checks, {} violations)",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks,
            self.violations
        )?;
        for (k, v) in &self.statistics {
            writeln!(f, "  {k}: {v}")?;
        }
        if !self.witnesses.is_empty() {
            writeln!(f, "witnesses:")?;
            for w in &self.witnesses {
                writeln!(f, "  - {w}")?;
            }
            if self.violations > self.witnesses.len() {
                writeln!(f, "  ... {} more", self.violations - self.witnesses.len())?;
            }
        }
        write!(f, "elapsed: {} ms", self.elapsed_ms)
    }
}
