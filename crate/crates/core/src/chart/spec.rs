use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `{l}` is strongly non-special for rank `n`: `l ∉ {0, m-1, m}` when
/// `n = 2m` and `l ∉ {0, m}` when `n = 2m + 1`.
pub fn is_strongly_non_special(n: usize, l: usize) -> bool {
    let m = n / 2;
    if l > m {
        return false;
    }
    if n.is_multiple_of(2) {
        l != 0 && l + 1 != m && l != m
    } else {
        l != 0 && l != m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChartKind {
    /// Full presentation in the X, Y, V, Z coordinates.
    Raw,
    /// Reduced chart for a unit in the first `2l` positions.
    SimplifiedA,
    /// Reduced chart for a unit in the last `n - 2l` positions.
    SimplifiedB,
    /// Minor presentation valid for every unit position.
    Unified,
    /// Affine patch `t_j = 1` of the blow-up along `(Z2)`.
    BlowupPatch(usize),
    /// Homogeneous presentation of the blow-up in the `T` variables.
    ReesProj,
}

impl ChartKind {
    pub fn name(&self) -> &'static str {
        match self {
            ChartKind::Raw => "raw",
            ChartKind::SimplifiedA => "simplified-A",
            ChartKind::SimplifiedB => "simplified-B",
            ChartKind::Unified => "unified",
            ChartKind::BlowupPatch(_) => "blowup-patch",
            ChartKind::ReesProj => "rees-proj",
        }
    }
}

/// Instance descriptor `(n, l, i0, kind)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChartSpec {
    pub n: usize,
    pub l: usize,
    pub i0: usize,
    pub kind: ChartKind,
}

impl ChartSpec {
    pub fn new(n: usize, l: usize, i0: usize, kind: ChartKind) -> Result<ChartSpec> {
        let spec = ChartSpec { n, l, i0, kind };
        spec.validate()?;
        Ok(spec)
    }

    /// The reduced chart kind matching the unit position.
    pub fn simplified(n: usize, l: usize, i0: usize) -> Result<ChartSpec> {
        let kind = if i0 <= 2 * l {
            ChartKind::SimplifiedA
        } else {
            ChartKind::SimplifiedB
        };
        ChartSpec::new(n, l, i0, kind)
    }

    pub fn validate(&self) -> Result<()> {
        let ChartSpec { n, l, i0, kind } = *self;
        if n <= 3 {
            return Err(Error::InvalidChart(format!("rank n={n} must exceed 3")));
        }
        if !is_strongly_non_special(n, l) {
            return Err(Error::InvalidChart(format!(
                "l={l} is not strongly non-special for n={n}"
            )));
        }
        if i0 == 0 || i0 > n {
            return Err(Error::InvalidChart(format!("i0={i0} outside 1..={n}")));
        }
        match kind {
            ChartKind::SimplifiedA if i0 > 2 * l => Err(Error::InvalidChart(format!(
                "simplified-A needs i0 <= {}",
                2 * l
            ))),
            ChartKind::SimplifiedB if i0 <= 2 * l => Err(Error::InvalidChart(format!(
                "simplified-B needs i0 > {}",
                2 * l
            ))),
            ChartKind::BlowupPatch(j) if j <= 2 * l || j > n => Err(Error::InvalidChart(format!(
                "patch index j={j} outside {}..={n}",
                2 * l + 1
            ))),
            ChartKind::BlowupPatch(_) | ChartKind::ReesProj if i0 > 2 * l => Err(Error::InvalidChart(format!(
                "{} needs i0 <= {}; for larger i0 the blow-up is the chart itself",
                kind.name(),
                2 * l
            ))),
            _ => Ok(()),
        }
    }

    /// The simplified chart (kind A or B) with the same `n, l, i0`.
    pub fn simplified_base(&self) -> ChartSpec {
        let kind = if self.unit_in_first_block() {
            ChartKind::SimplifiedA
        } else {
            ChartKind::SimplifiedB
        };
        self.with_kind(kind)
    }

    /// Unit position lies in the `V1` block.
    pub fn unit_in_first_block(&self) -> bool {
        self.i0 <= 2 * self.l
    }

    /// Indices `2l+1..=n` of the second block.
    pub fn second_block(&self) -> std::ops::RangeInclusive<usize> {
        (2 * self.l + 1)..=self.n
    }

    /// Mirror of an index of the second block under the anti-diagonal `H`.
    pub fn mirror(&self, k: usize) -> usize {
        self.n + 2 * self.l + 1 - k
    }

    pub fn with_kind(&self, kind: ChartKind) -> ChartSpec {
        ChartSpec { kind, ..*self }
    }

    /// Same instance without the kind, e.g. `n=5,l=1,i0=1`.
    pub fn base_string(&self) -> String {
        format!("n={},l={},i0={}", self.n, self.l, self.i0)
    }
}

impl fmt::Display for ChartSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},kind={}", self.base_string(), self.kind.name())?;
        if let ChartKind::BlowupPatch(j) = self.kind {
            write!(f, ",j={j}")?;
        }
        Ok(())
    }
}

impl FromStr for ChartSpec {
    type Err = Error;

    /// Parses `n=<n>,l=<l>,i0=<i0>,kind=<kind>[,j=<j>]` and validates it.
    fn from_str(s: &str) -> Result<ChartSpec> {
        let bad = |msg: &str| Error::InvalidChart(format!("{msg} in `{s}`"));
        let mut fields = std::collections::BTreeMap::new();
        for part in s.trim().split(',') {
            let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            if fields.insert(k.trim(), v.trim()).is_some() {
                return Err(bad("duplicate key"));
            }
        }
        let num = |key: &str| -> Result<usize> {
            fields
                .get(key)
                .ok_or_else(|| bad(&format!("missing `{key}`")))?
                .parse()
                .map_err(|_| bad(&format!("`{key}` is not a number")))
        };
        let (n, l, i0) = (num("n")?, num("l")?, num("i0")?);
        let kind = match *fields.get("kind").ok_or_else(|| bad("missing `kind`"))? {
            "raw" => ChartKind::Raw,
            "simplified-A" => ChartKind::SimplifiedA,
            "simplified-B" => ChartKind::SimplifiedB,
            "unified" => ChartKind::Unified,
            "blowup-patch" => ChartKind::BlowupPatch(num("j")?),
            "rees-proj" => ChartKind::ReesProj,
            other => return Err(bad(&format!("unknown kind `{other}`"))),
        };
        let allowed = if matches!(kind, ChartKind::BlowupPatch(_)) { 5 } else { 4 };
        if fields.len() != allowed {
            return Err(bad("unexpected keys"));
        }
        ChartSpec::new(n, l, i0, kind)
    }
}
