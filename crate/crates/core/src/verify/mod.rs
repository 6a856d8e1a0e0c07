//! Checks that certify the structural claims about chart ideals.

mod checks;
mod smooth;

use std::fmt;
use std::time::{Duration, Instant};

pub use checks::{
    check_blowup, check_blowup_flat, check_blowup_flat_with, check_blowup_using, check_blowup_with, check_components, check_components_with,
    check_flat, check_kottwitz_wedge, check_raw_equiv, check_raw_equiv_with, check_smoothness,
    components_of, special_fiber,
};
pub use smooth::{check_smooth, smooth_finding};

use crate::chart::{build_chart, build_raw_chart, build_simplified_chart, ChartKind, ChartSpec};
use crate::ideal::Ideal;
use crate::error::{Error, Result};
use crate::ideal::Budget;

pub const FLAT: &str = "flat";
pub const COMPONENTS: &str = "components";
pub const SMOOTH: &str = "smooth";
pub const KOTTWITZ_WEDGE: &str = "kottwitz-wedge";
pub const RAW_EQUIV: &str = "raw-equiv";
pub const BLOWUP_FLAT: &str = "blowup-flat";
pub const BLOWUP: &str = "blowup";
pub const SPEC: &str = "spec";

pub const ALL_CHECKS: [&str; 7] = [FLAT, COMPONENTS, SMOOTH, KOTTWITZ_WEDGE, RAW_EQUIV, BLOWUP_FLAT, BLOWUP];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    BudgetExceeded,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::BudgetExceeded => "budget-exceeded",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub check: String,
    pub instance: String,
    pub verdict: Verdict,
    /// Evidence lines; never empty for a failure.
    pub witness: Vec<String>,
    pub elapsed: Duration,
}

/// Limits applied to every ideal a check builds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub budget: Budget,
    /// Largest number of Jacobian minors a smoothness check may form.
    pub max_minors: u128,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            budget: Budget::default(),
            max_minors: 500_000,
        }
    }
}

/// Result of a check body before timing and error mapping.
#[derive(Clone, Debug, PartialEq)]
pub struct Finding {
    pub pass: bool,
    pub witness: Vec<String>,
}

impl Finding {
    pub fn pass(witness: Vec<String>) -> Finding {
        Finding { pass: true, witness }
    }

    pub fn fail(witness: Vec<String>) -> Finding {
        Finding { pass: false, witness }
    }

    /// Appends `other`, failing if either failed.
    pub fn merge(&mut self, label: &str, other: Finding) {
        self.pass &= other.pass;
        self.witness.extend(other.witness.into_iter().map(|w| format!("{label}: {w}")));
    }
}

/// Runs `body`, mapping budget errors to [`Verdict::BudgetExceeded`] and
/// any other error to a failure carrying the message.
pub fn run_check(check: &str, instance: &str, body: impl FnOnce() -> Result<Finding>) -> CheckOutcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let (verdict, mut witness) = match result {
        Ok(f) if f.pass => (Verdict::Pass, f.witness),
        Ok(f) => (Verdict::Fail, f.witness),
        Err(e @ (Error::BudgetExceeded(_) | Error::MinorBudget { .. })) => (Verdict::BudgetExceeded, vec![e.to_string()]),
        Err(e) => (Verdict::Fail, vec![format!("error: {e}")]),
    };
    if verdict == Verdict::Fail && witness.is_empty() {
        witness.push("no witness recorded".into());
    }
    CheckOutcome {
        check: check.into(),
        instance: instance.into(),
        verdict,
        witness,
        elapsed,
    }
}

/// Checks that apply to `spec`, in execution order.
pub fn applicable_checks(spec: &ChartSpec) -> Vec<&'static str> {
    match spec.kind {
        ChartKind::SimplifiedA | ChartKind::SimplifiedB => ALL_CHECKS.to_vec(),
        ChartKind::Unified if spec.unit_in_first_block() => ALL_CHECKS.to_vec(),
        ChartKind::Unified => vec![FLAT, COMPONENTS, SMOOTH, KOTTWITZ_WEDGE, RAW_EQUIV],
        ChartKind::Raw => vec![RAW_EQUIV],
        ChartKind::BlowupPatch(_) => vec![FLAT, BLOWUP],
        ChartKind::ReesProj => vec![BLOWUP],
    }
}

pub fn run_instance(spec: &ChartSpec, config: &VerifyConfig) -> Vec<CheckOutcome> {
    run_selected(spec, config, None)
}

/// Runs the applicable checks of `spec` that appear in `only` (all when
/// `None`). An invalid spec yields a single failing `spec` outcome.
pub fn run_selected(spec: &ChartSpec, config: &VerifyConfig, only: Option<&[&str]>) -> Vec<CheckOutcome> {
    run_selected_on(spec, None, config, only)
}

/// [`run_selected`] with `supplied` standing in for the ideal of `spec`
/// wherever a check reads it. `smooth` and `blowup-flat` depend on the
/// spec alone and ignore it.
pub fn run_selected_on(
    spec: &ChartSpec,
    supplied: Option<&Ideal>,
    config: &VerifyConfig,
    only: Option<&[&str]>,
) -> Vec<CheckOutcome> {
    let instance = spec.to_string();
    let spec_fail = |e: Error| vec![run_check(SPEC, &instance, || Err(e))];
    if let Err(e) = spec.validate() {
        return spec_fail(e);
    }
    let built = match build_chart(spec) {
        Ok(c) => c,
        Err(e) => return spec_fail(e),
    };
    let chart = match supplied {
        Some(s) if !s.ring().same_vars(built.ring()) => {
            return spec_fail(Error::InvalidChart(format!(
                "supplied ideal ring {} differs from {}",
                s.ring().header(),
                built.ring().header()
            )))
        }
        Some(s) => s.embed(built.ring()).map(|i| i.with_budget(config.budget)),
        None => Ok(built.with_budget(config.budget)),
    };
    let chart = match chart {
        Ok(c) => c,
        Err(e) => return spec_fail(e),
    };
    let mut out = Vec::new();
    for check in applicable_checks(spec) {
        if only.is_some_and(|sel| !sel.contains(&check)) {
            continue;
        }
        let outcome = match (check, spec.kind) {
            (FLAT, _) => check_flat(&chart, &instance),
            (COMPONENTS, _) => check_components(spec, &chart, config),
            (SMOOTH, _) => check_smoothness(spec, config),
            (KOTTWITZ_WEDGE, _) => check_kottwitz_wedge(spec, &chart),
            (RAW_EQUIV, _) if supplied.is_none() => check_raw_equiv(spec, config),
            (RAW_EQUIV, ChartKind::Raw) => {
                let base = spec.simplified_base();
                match build_simplified_chart(&base) {
                    Ok(simplified) => check_raw_equiv_with(&base, &chart, &simplified),
                    Err(e) => run_check(RAW_EQUIV, &instance, || Err(e)),
                }
            }
            (RAW_EQUIV, _) => match build_raw_chart(&spec.with_kind(ChartKind::Raw)) {
                Ok(raw) => check_raw_equiv_with(spec, &raw.with_budget(config.budget), &chart),
                Err(e) => run_check(RAW_EQUIV, &instance, || Err(e)),
            },
            (BLOWUP_FLAT, _) => check_blowup_flat(spec, config),
            (BLOWUP, ChartKind::BlowupPatch(j)) => {
                let base = spec.simplified_base();
                match build_simplified_chart(&base) {
                    Ok(c) => check_blowup_using(&base, Some(j), &c.with_budget(config.budget), Some(&chart), config),
                    Err(e) => run_check(BLOWUP, &instance, || Err(e)),
                }
            }
            (BLOWUP, ChartKind::ReesProj) => check_blowup(&spec.simplified_base(), None, config),
            (BLOWUP, _) => check_blowup_using(spec, None, &chart, None, config),
            _ => unreachable!("unknown check {check}"),
        };
        out.push(CheckOutcome { instance: instance.clone(), ..outcome });
    }
    out
}
