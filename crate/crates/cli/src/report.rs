//! JSON verification report.

use serde::{Deserialize, Serialize};
use splitcheck_core::verify::{CheckOutcome, Verdict};

use crate::error::CliError;

pub const SCHEMA: u32 = 1;
pub const TOOL: &str = "splitcheck";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutcomeRecord {
    pub instance: String,
    pub check: String,
    /// `pass`, `fail` or `budget-exceeded`.
    pub verdict: String,
    pub witness: Vec<String>,
    /// Wall time in microseconds; omitted for timing-free reports.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub budget_exceeded: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub registry_hash: String,
    pub outcomes: Vec<OutcomeRecord>,
    pub summary: Summary,
}

pub fn parse_verdict(s: &str) -> Option<Verdict> {
    [Verdict::Pass, Verdict::Fail, Verdict::BudgetExceeded]
        .into_iter()
        .find(|v| v.name() == s)
}

impl OutcomeRecord {
    pub fn from_outcome(o: &CheckOutcome, timing: bool) -> OutcomeRecord {
        OutcomeRecord {
            instance: o.instance.clone(),
            check: o.check.clone(),
            verdict: o.verdict.name().to_string(),
            witness: o.witness.clone(),
            elapsed_us: timing.then_some(o.elapsed.as_micros() as u64),
        }
    }
}

impl Summary {
    pub fn tally(outcomes: &[OutcomeRecord]) -> Summary {
        let mut s = Summary {
            total: outcomes.len(),
            ..Summary::default()
        };
        for o in outcomes {
            match parse_verdict(&o.verdict) {
                Some(Verdict::Pass) => s.pass += 1,
                Some(Verdict::Fail) => s.fail += 1,
                Some(Verdict::BudgetExceeded) => s.budget_exceeded += 1,
                None => {}
            }
        }
        s
    }
}

impl Report {
    pub fn new(registry_hash: String, outcomes: Vec<OutcomeRecord>) -> Report {
        Report {
            schema: SCHEMA,
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            registry_hash,
            summary: Summary::tally(&outcomes),
            outcomes,
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Parses and validates a report.
    pub fn from_json(text: &str) -> Result<Report, CliError> {
        let r: Report = serde_json::from_str(text)?;
        if r.schema != SCHEMA {
            return Err(CliError::Report(format!("unsupported schema {}", r.schema)));
        }
        if let Some(o) = r.outcomes.iter().find(|o| parse_verdict(&o.verdict).is_none()) {
            return Err(CliError::Report(format!("unknown verdict `{}`", o.verdict)));
        }
        if Summary::tally(&r.outcomes) != r.summary {
            return Err(CliError::Report("summary counts do not match the outcomes".into()));
        }
        Ok(r)
    }

    /// Same report with timing fields removed.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for o in &mut r.outcomes {
            o.elapsed_us = None;
        }
        r
    }

    /// 0 when everything passed, 1 on any failure, otherwise 3 when some
    /// check ran out of budget.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.budget_exceeded > 0 {
            3
        } else {
            0
        }
    }
}
