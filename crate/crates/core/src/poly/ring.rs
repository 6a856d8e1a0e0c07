use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Name of the uniformizer variable.
pub const PI: &str = "pi";

/// Ordered table of variable names shared by every polynomial of a ring.
///
/// Variables are compared by position: the first variable is the largest in
/// lexicographic orders. An optional block partition splits the variables
/// into consecutive groups for elimination orders.
#[derive(Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
    blocks: Option<Vec<usize>>,
}

pub type Ring = Arc<VarTable>;

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("`{name}` is not an identifier")));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(VarTable {
            names,
            index,
            blocks: None,
        }))
    }

    /// A ring that must carry the uniformizer `pi`.
    pub fn with_pi<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        let ring = Self::new(names)?;
        if ring.pi().is_none() {
            return Err(Error::InvalidRing("missing uniformizer `pi`".into()));
        }
        Ok(ring)
    }

    /// Same variables, partitioned into consecutive blocks of the given sizes.
    pub fn with_blocks(&self, sizes: &[usize]) -> Result<Ring> {
        if sizes.iter().sum::<usize>() != self.len() || sizes.contains(&0) {
            return Err(Error::InvalidRing(
                "block partition must cover all variables exactly once".into(),
            ));
        }
        let mut table = self.clone();
        table.blocks = Some(sizes.to_vec());
        Ok(Arc::new(table))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn blocks(&self) -> Option<&[usize]> {
        self.blocks.as_deref()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn pi(&self) -> Option<usize> {
        self.index_of(PI)
    }

    /// Append variables, renaming each to the first free `name`, `name_1`, ...
    /// Returns the new ring and the names actually used.
    pub fn extend(&self, extra: &[&str]) -> Result<(Ring, Vec<String>)> {
        let mut names = self.names.clone();
        let mut used = Vec::with_capacity(extra.len());
        for base in extra {
            let mut candidate = base.to_string();
            let mut k = 1;
            while names.contains(&candidate) {
                candidate = format!("{base}_{k}");
                k += 1;
            }
            names.push(candidate.clone());
            used.push(candidate);
        }
        Ok((Self::new(&names)?, used))
    }

    /// Same names in a new order (no blocks).
    pub fn reordered(&self, order: &[usize]) -> Result<Ring> {
        let names: Vec<&str> = order.iter().map(|&i| self.names[i].as_str()).collect();
        let ring = Self::new(&names)?;
        if ring.len() != self.len() {
            return Err(Error::InvalidRing("reordering must be a permutation".into()));
        }
        Ok(ring)
    }

    /// Same names ignoring block structure.
    pub fn same_vars(&self, other: &VarTable) -> bool {
        self.names == other.names
    }

    /// Header line of the canonical serialization.
    pub fn header(&self) -> String {
        format!("ring: {}", self.names.join(" "))
    }

    pub fn parse_header(line: &str) -> Result<Ring> {
        let rest = line.trim().strip_prefix("ring:").ok_or(Error::Parse {
            pos: 0,
            msg: "expected `ring:` header".into(),
        })?;
        let names: Vec<&str> = rest.split_whitespace().collect();
        Self::new(&names)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarTable{:?}", self.names)?;
        if let Some(b) = &self.blocks {
            write!(f, " blocks {b:?}")?;
        }
        Ok(())
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a.same_vars(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(VarTable::new(&["x", "x"]).is_err());
        assert!(VarTable::new(&["1x"]).is_err());
        assert!(VarTable::with_pi(&["x", "y"]).is_err());
        assert_eq!(VarTable::with_pi(&["x", "pi"]).unwrap().pi(), Some(1));
    }

    #[test]
    fn blocks_must_cover() {
        let r = VarTable::new(&["a", "b", "c"]).unwrap();
        assert!(r.with_blocks(&[1, 1]).is_err());
        assert!(r.with_blocks(&[1, 2]).is_ok());
    }

    #[test]
    fn extend_avoids_clashes() {
        let r = VarTable::new(&["w", "x"]).unwrap();
        let (r2, used) = r.extend(&["w", "s"]).unwrap();
        assert_eq!(used, vec!["w_1", "s"]);
        assert_eq!(r2.len(), 4);
    }

    #[test]
    fn header_round_trip() {
        let r = VarTable::new(&["v1", "z3", "pi"]).unwrap();
        let back = VarTable::parse_header(&r.header()).unwrap();
        assert_eq!(*r, *back);
    }
}
