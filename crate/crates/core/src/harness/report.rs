use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Result;

use super::Instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// `0` pass, `1` fail, `2` inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    /// Failure dominates inconclusiveness, which dominates success.
    pub fn combine(statuses: impl IntoIterator<Item = Status>) -> Status {
        let mut out = Status::Pass;
        for s in statuses {
            match s {
                Status::Fail => return Status::Fail,
                Status::Inconclusive => out = Status::Inconclusive,
                Status::Pass => {}
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub hard: bool,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub check: String,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceMeta {
    pub e: usize,
    pub s: usize,
    pub p: u32,
    pub seed: u64,
    pub seed_used: u64,
    pub retries: u32,
    pub effective_e: usize,
    pub t: usize,
    pub r: usize,
    pub truncation: usize,
    pub hilbert_function: Vec<usize>,
    pub generic_coordinates: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub instance: InstanceMeta,
    pub checks: Vec<CheckRecord>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Vec<Timing>>,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.check(name).is_some_and(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Accumulates check records for one suite run.
pub(crate) struct ReportBuilder {
    suite: String,
    instance: InstanceMeta,
    checks: Vec<CheckRecord>,
    timings: Option<Vec<Timing>>,
}

impl ReportBuilder {
    pub fn new(suite: &str, inst: &Instance, truncation: usize) -> Self {
        let prof = inst.config.profile();
        ReportBuilder {
            suite: suite.to_string(),
            instance: InstanceMeta {
                e: inst.config.e,
                s: inst.config.s,
                p: inst.config.p,
                seed: inst.config.seed,
                seed_used: inst.seed_used,
                retries: inst.retries,
                effective_e: inst.compressed.effective_e,
                t: prof.t,
                r: prof.r,
                truncation,
                hilbert_function: inst.compressed.hilbert_function.clone(),
                generic_coordinates: inst.coordinate_change.is_some(),
            },
            checks: Vec::new(),
            timings: inst.config.timings.then(Vec::new),
        }
    }

    /// Runs `body` and records its verdict; an error becomes a failure with
    /// the message as witness.
    pub fn check<F>(&mut self, name: &str, anchor: &str, hard: bool, body: F)
    where
        F: FnOnce() -> Result<(Status, Value)>,
    {
        debug_assert!(self.checks.iter().all(|c| c.name != name), "duplicate check {name}");
        let start = Instant::now();
        let (status, witness) = match body() {
            Ok(v) => v,
            Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
        };
        if let Some(t) = self.timings.as_mut() {
            t.push(Timing {
                check: name.to_string(),
                millis: start.elapsed().as_millis() as u64,
            });
        }
        self.checks.push(CheckRecord {
            name: name.to_string(),
            anchor: anchor.to_string(),
            status,
            hard,
            witness,
        });
    }

    pub fn finish(self) -> VerificationReport {
        let status = Status::combine(self.checks.iter().filter(|c| c.hard).map(|c| c.status));
        VerificationReport {
            schema: 1,
            suite: self.suite,
            instance: self.instance,
            checks: self.checks,
            status,
            timings: self.timings,
        }
    }
}
