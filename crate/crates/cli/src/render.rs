//! Markdown rendering of a [`Report`].

use std::fmt::Write as _;

use splitcheck_core::verify;

use crate::report::Report;

const EXCERPT: usize = 160;

/// The claim a check certifies, in plain words.
pub fn claim(check: &str) -> &'static str {
    match check {
        verify::FLAT => "chart ideal is flat over the base: saturating by pi changes nothing",
        verify::COMPONENTS => "special fiber is the reduced union of the listed components, each of dimension n-1",
        verify::SMOOTH => "components are smooth away from the predicted singular locus",
        verify::KOTTWITZ_WEDGE => "wedge and spin conditions imply the Kottwitz condition",
        verify::RAW_EQUIV => "raw chart with X and Y eliminated equals the simplified chart",
        verify::BLOWUP_FLAT => "every affine patch of the blow-up is flat",
        verify::BLOWUP => "blow-up of the worst point is semi-stable",
        verify::SPEC => "instance descriptor is valid",
        _ => "",
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

fn excerpt(lines: &[String]) -> String {
    let joined = lines.join("; ");
    if joined.chars().count() <= EXCERPT {
        return joined;
    }
    let cut: String = joined.chars().take(EXCERPT).collect();
    format!("{cut}...")
}

fn time(us: Option<u64>) -> String {
    match us {
        None => "-".into(),
        Some(us) if us < 1000 => format!("{us} µs"),
        Some(us) if us < 1_000_000 => format!("{:.1} ms", us as f64 / 1e3),
        Some(us) => format!("{:.2} s", us as f64 / 1e6),
    }
}

pub fn render_markdown(report: &Report) -> String {
    let s = report.summary;
    let mut out = String::new();
    let _ = writeln!(out, "# {} report\n", report.tool);
    let _ = writeln!(out, "- version: {}", report.version);
    let _ = writeln!(out, "- registry: `{}`", report.registry_hash);
    let _ = writeln!(
        out,
        "- outcomes: {} total, {} pass, {} fail, {} budget-exceeded\n",
        s.total, s.pass, s.fail, s.budget_exceeded
    );
    out.push_str("| instance | check | verdict | time | claim | witness |\n");
    out.push_str("|---|---|---|---|---|---|\n");
    for o in &report.outcomes {
        let verdict = match o.verdict.as_str() {
            "pass" => "pass".to_string(),
            other => format!("**{}**", other.to_uppercase()),
        };
        let witness = if o.verdict == "pass" { String::new() } else { cell(&excerpt(&o.witness)) };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} |",
            cell(&o.instance),
            cell(&o.check),
            verdict,
            time(o.elapsed_us),
            claim(&o.check),
            witness
        );
    }
    out
}
