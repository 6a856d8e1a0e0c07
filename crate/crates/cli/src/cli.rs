//! Argument parsing and the `chart`, `verify` and `render` commands.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use splitcheck_core::chart::{build_chart, ChartSpec};
use splitcheck_core::ideal::Ideal;
use splitcheck_core::poly::{Polynomial, VarTable};
use splitcheck_core::verify::{run_selected_on, ALL_CHECKS};

use crate::error::CliError;
use crate::registry::{Entry, Registry};
use crate::render::render_markdown;
use crate::report::{OutcomeRecord, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "splitcheck", version, about = "Build and verify local-model chart ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the generators of a chart ideal.
    Chart {
        /// Instance string, e.g. n=5,l=1,i0=3,kind=simplified-B
        instance: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run checks on one instance or on every registry entry ("all").
    Verify {
        instance: String,
        /// Comma-separated subset of checks.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        /// S-pair budget per Groebner computation.
        #[arg(long)]
        budget: Option<u64>,
        /// Largest number of Jacobian minors a smoothness check may form.
        #[arg(long)]
        max_minors: Option<u128>,
        /// Instances run concurrently.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Registry file; the built-in default registry otherwise.
        #[arg(long)]
        registry: Option<PathBuf>,
        /// Serialized ideal verified in place of the chart (single instance).
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the JSON report here; stdout gets a text summary.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Leave timing fields out of the report.
        #[arg(long)]
        no_timing: bool,
    },
    /// Render a JSON report as a Markdown table.
    Render {
        report: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ChartJson {
    pub instance: String,
    pub ring: Vec<String>,
    pub generators: Vec<String>,
}

impl ChartJson {
    pub fn new(spec: &ChartSpec, ideal: &Ideal) -> ChartJson {
        ChartJson {
            instance: spec.to_string(),
            ring: ideal.ring().names().to_vec(),
            generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<Ideal, CliError> {
        let ring = VarTable::new(&self.ring)?;
        let gens = self
            .generators
            .iter()
            .map(|g| Polynomial::parse(&ring, g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::new(&ring, gens)?)
    }
}

fn parse_instance(s: &str) -> Result<ChartSpec, CliError> {
    let spec: ChartSpec = s.parse().map_err(|e| CliError::Usage(format!("bad instance `{s}`: {e}")))?;
    spec.validate()
        .map_err(|e| CliError::Usage(format!("bad instance `{s}`: {e}")))?;
    Ok(spec)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, text),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e)),
    }
}

/// Chart ideal serialized in `format`.
pub fn chart_text(spec: &ChartSpec, format: Format) -> Result<String, CliError> {
    let ideal = build_chart(spec)?;
    Ok(match format {
        Format::Text => ideal.to_text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&ChartJson::new(spec, &ideal))?;
            s.push('\n');
            s
        }
    })
}

/// Verifies every entry, `jobs` at a time; outcomes keep registry order.
pub fn verify_entries(entries: &[Entry], checks: Option<&[&str]>, jobs: usize, timing: bool) -> Vec<OutcomeRecord> {
    let run = |e: &Entry| -> Vec<OutcomeRecord> {
        run_selected_on(&e.spec, e.ideal.as_ref(), &e.config, checks)
            .iter()
            .map(|o| OutcomeRecord::from_outcome(o, timing))
            .collect()
    };
    let nested: Vec<Vec<OutcomeRecord>> = if jobs <= 1 {
        entries.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        pool.install(|| entries.par_iter().map(run).collect())
    };
    nested.into_iter().flatten().collect()
}

/// Outcome lines (only the non-passing ones when `all` is false) and a
/// closing count.
fn text_summary(report: &Report, all: bool) -> String {
    let mut out = String::new();
    for o in report.outcomes.iter().filter(|o| all || o.verdict != "pass") {
        out.push_str(&format!("{} {} {}\n", o.instance, o.check, o.verdict));
        if o.verdict != "pass" {
            for w in &o.witness {
                out.push_str(&format!("    {w}\n"));
            }
        }
    }
    let s = report.summary;
    out.push_str(&format!(
        "{} outcomes: {} pass, {} fail, {} budget-exceeded\n",
        s.total, s.pass, s.fail, s.budget_exceeded
    ));
    out
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    out: &mut dyn Write,
    instance: &str,
    checks: Option<Vec<String>>,
    budget: Option<u64>,
    max_minors: Option<u128>,
    jobs: usize,
    registry: Option<PathBuf>,
    ideal: Option<PathBuf>,
    format: Format,
    out_path: Option<PathBuf>,
    timing: bool,
) -> Result<i32, CliError> {
    if let Some(bad) = checks.iter().flatten().find(|c| !ALL_CHECKS.contains(&c.as_str())) {
        return Err(CliError::Usage(format!(
            "unknown check `{bad}`; expected one of {}",
            ALL_CHECKS.join(", ")
        )));
    }
    if jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let registry = match &registry {
        Some(p) => Registry::load(p)?,
        None => Registry::default_registry(),
    };
    let mut entries = if instance == "all" {
        if ideal.is_some() {
            return Err(CliError::Usage("--ideal needs a single instance".into()));
        }
        registry.entries.clone()
    } else {
        let spec = parse_instance(instance)?;
        let mut entry = registry.find(&spec).cloned().unwrap_or(Entry {
            spec,
            config: Default::default(),
            ideal: None,
        });
        if let Some(p) = &ideal {
            entry.ideal = Some(Ideal::from_text(&read(p)?)?);
        }
        vec![entry]
    };
    for e in &mut entries {
        if let Some(b) = budget {
            e.config.budget.max_pairs = b;
        }
        if let Some(m) = max_minors {
            e.config.max_minors = m;
        }
    }
    let hash = Registry { entries: entries.clone() }.hash();
    let selected: Option<Vec<&str>> = checks.as_ref().map(|c| c.iter().map(String::as_str).collect());
    let outcomes = verify_entries(&entries, selected.as_deref(), jobs, timing);
    let report = Report::new(hash, outcomes);
    match (&out_path, format) {
        (Some(p), _) => {
            write_file(p, &report.to_json())?;
            emit(out, None, &text_summary(&report, false))?;
        }
        (None, Format::Json) => emit(out, None, &report.to_json())?,
        (None, Format::Text) => emit(out, None, &text_summary(&report, true))?,
    }
    Ok(report.exit_code())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Chart { instance, format, out: path } => {
            let spec = parse_instance(&instance)?;
            emit(out, path.as_deref(), &chart_text(&spec, format)?)?;
            Ok(EXIT_PASS)
        }
        Command::Verify {
            instance,
            checks,
            budget,
            max_minors,
            jobs,
            registry,
            ideal,
            format,
            out: path,
            no_timing,
        } => cmd_verify(out, &instance, checks, budget, max_minors, jobs, registry, ideal, format, path, !no_timing),
        Command::Render { report, out: path } => {
            let report = Report::from_json(&read(&report)?)?;
            emit(out, path.as_deref(), &render_markdown(&report))?;
            Ok(EXIT_PASS)
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. Errors are reported on `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
