//! Instance registry.
//!
//! The config format is line based. `#` starts a comment. A line
//! `key = value` sets a default budget for the entries that follow it; any
//! other line is an instance string optionally followed by per-instance
//! overrides:
//!
//! ```text
//! max_pairs = 1000000
//! n=5,l=1,i0=1,kind=simplified-A
//! n=8,l=2,i0=1,kind=simplified-A max_minors=100000
//! n=5,l=1,i0=2,kind=simplified-A ideal=broken.txt
//! ```
//!
//! Keys are `max_pairs`, `max_terms` and `max_minors`; `ideal` (instance
//! lines only) names a serialized ideal, relative to the registry file, that
//! replaces the built chart.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use sha2::{Digest, Sha256};
use splitcheck_core::chart::{ChartKind, ChartSpec};
use splitcheck_core::ideal::Ideal;
use splitcheck_core::verify::VerifyConfig;

use crate::error::CliError;

/// Rank pairs of the default registry.
pub const DEFAULT_SIZES: [(usize, usize); 5] = [(5, 1), (6, 1), (7, 1), (7, 2), (8, 2)];

#[derive(Clone, Debug)]
pub struct Entry {
    pub spec: ChartSpec,
    pub config: VerifyConfig,
    pub ideal: Option<Ideal>,
}

#[derive(Clone, Debug, Default)]
pub struct Registry {
    pub entries: Vec<Entry>,
}

/// Every simplified chart of `(n, l)` followed by the unified charts with
/// the unit in the second block.
pub fn default_specs(n: usize, l: usize) -> Vec<ChartSpec> {
    let mut out: Vec<ChartSpec> = (1..=n).map(|i0| ChartSpec::simplified(n, l, i0).expect("valid size")).collect();
    out.extend((2 * l + 1..=n).map(|i0| ChartSpec::new(n, l, i0, ChartKind::Unified).expect("valid size")));
    out
}

fn set_key(config: &mut VerifyConfig, key: &str, value: &str, line: usize) -> Result<(), CliError> {
    let bad = |msg: String| CliError::Registry { line, msg };
    let num = |v: &str| v.parse::<u64>().map_err(|e| bad(format!("{key}: {e}")));
    match key {
        "max_pairs" => config.budget.max_pairs = num(value)?,
        "max_terms" => config.budget.max_terms = num(value)? as usize,
        "max_minors" => config.max_minors = num(value)? as u128,
        _ => return Err(bad(format!("unknown key `{key}`"))),
    }
    Ok(())
}

impl Registry {
    pub fn default_registry() -> Registry {
        let entries = DEFAULT_SIZES
            .iter()
            .flat_map(|&(n, l)| default_specs(n, l))
            .map(|spec| Entry {
                spec,
                config: VerifyConfig::default(),
                ideal: None,
            })
            .collect();
        Registry { entries }
    }

    /// Parses registry text; `base` resolves `ideal=` paths.
    pub fn parse(text: &str, base: &Path) -> Result<Registry, CliError> {
        let mut defaults = VerifyConfig::default();
        let mut entries: Vec<Entry> = Vec::new();
        let mut seen = HashSet::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let bad = |msg: String| CliError::Registry { line, msg };
            if !content.starts_with("n=") {
                let (key, value) = content
                    .split_once('=')
                    .ok_or_else(|| bad(format!("expected `key = value` or an instance, got `{content}`")))?;
                set_key(&mut defaults, key.trim(), value.trim(), line)?;
                continue;
            }
            let mut tokens = content.split_whitespace();
            let spec: ChartSpec = tokens.next().unwrap_or("").parse().map_err(|e| bad(format!("{e}")))?;
            spec.validate().map_err(|e| bad(format!("{spec}: {e}")))?;
            if !seen.insert(spec) {
                return Err(bad(format!("duplicate instance {spec}")));
            }
            let mut entry = Entry {
                spec,
                config: defaults,
                ideal: None,
            };
            for tok in tokens {
                let (key, value) = tok.split_once('=').ok_or_else(|| bad(format!("expected key=value, got `{tok}`")))?;
                if key == "ideal" {
                    let path = base.join(value);
                    let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
                    let ideal = Ideal::from_text(&text).map_err(|e| bad(format!("{}: {e}", path.display())))?;
                    entry.ideal = Some(ideal);
                } else {
                    set_key(&mut entry.config, key, value, line)?;
                }
            }
            entries.push(entry);
        }
        Ok(Registry { entries })
    }

    pub fn load(path: &Path) -> Result<Registry, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Registry::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }

    pub fn find(&self, spec: &ChartSpec) -> Option<&Entry> {
        self.entries.iter().find(|e| &e.spec == spec)
    }

    /// One line per entry with every effective setting; supplied ideals
    /// appear as the digest of their serialization.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let b = e.config.budget;
            let _ = write!(
                out,
                "{} max_pairs={} max_terms={} max_minors={}",
                e.spec, b.max_pairs, b.max_terms, e.config.max_minors
            );
            if let Some(ideal) = &e.ideal {
                let _ = write!(out, " ideal={}", hex(&Sha256::digest(ideal.to_text().as_bytes())));
            }
            out.push('\n');
        }
        out
    }

    /// SHA-256 of [`Registry::canonical_text`], hex encoded.
    pub fn hash(&self) -> String {
        hex(&Sha256::digest(self.canonical_text().as_bytes()))
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
