//! Ideals, reduced Groebner bases and the ideal operations built on them.

mod dimension;
mod groebner;
mod linear;
mod ops;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use groebner::{Budget, GbStats};
pub use linear::LinearReduction;

use crate::error::{Error, Result};
use crate::poly::{reduce, MonomialOrder, Polynomial, Ring, VarTable};

type CachedBasis = (Arc<Vec<Polynomial>>, GbStats);

/// Finitely generated ideal with a per-order cache of reduced Groebner bases.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    budget: Budget,
    cache: Mutex<HashMap<MonomialOrder, CachedBasis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            budget: self.budget,
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("ring", &self.ring)
            .field("gens", &self.gens)
            .finish()
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut owned = Vec::with_capacity(gens.len());
        for g in gens {
            owned.push(g.embed(ring).map_err(|_| Error::RingMismatch)?);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: owned,
            budget: Budget::default(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// Parses each generator in `ring`.
    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let gens = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    pub fn with_budget(mut self, budget: Budget) -> Ideal {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// New ideal in the same ring sharing this budget.
    pub(crate) fn derive(&self, gens: Vec<Polynomial>) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            gens,
            budget: self.budget,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub(crate) fn derive_in(&self, ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        Ok(Ideal::new(ring, gens)?.with_budget(self.budget))
    }

    /// Reduced Groebner basis under `order` (monic, sorted by increasing
    /// leading monomial). `order` must fit the ring; block orders need the
    /// ring's variables arranged with the eliminated block first.
    pub fn groebner(&self, order: MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        self.groebner_with_stats(order).map(|(g, _)| g)
    }

    pub fn groebner_with_stats(&self, order: MonomialOrder) -> Result<(Arc<Vec<Polynomial>>, GbStats)> {
        if let Some(hit) = self.cache.lock().unwrap().get(&order) {
            return Ok(hit.clone());
        }
        let inputs = self.gens.iter().map(|g| g.terms_in(order)).collect();
        let (basis, stats) = groebner::groebner_terms(self.ring.len(), inputs, order, self.budget)?;
        let basis: Vec<Polynomial> = basis
            .into_iter()
            .map(|t| Polynomial::from_terms(&self.ring, t))
            .collect();
        let entry = (Arc::new(basis), stats);
        self.cache.lock().unwrap().insert(order, entry.clone());
        Ok(entry)
    }

    /// Buchberger certificate for a basis of this ring.
    pub fn is_groebner_basis(basis: &[Polynomial], order: MonomialOrder) -> bool {
        let terms: Vec<_> = basis.iter().filter(|p| !p.is_zero()).map(|p| p.terms_in(order)).collect();
        groebner::is_groebner(&terms, order)
    }

    /// Normal form with respect to the grevlex reduced basis.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        let gb = self.groebner(MonomialOrder::GRevLex)?;
        reduce(&p.embed(&self.ring)?, &gb, MonomialOrder::GRevLex)
    }

    pub fn member(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.groebner(MonomialOrder::GRevLex)?;
        Ok(gb.len() == 1 && gb[0].is_constant() && !gb[0].is_zero())
    }

    /// First generator of `other` outside this ideal, if any.
    pub fn first_non_member<'a>(&self, other: &'a Ideal) -> Result<Option<&'a Polynomial>> {
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        Ok(self.first_non_member(other)?.is_none())
    }

    /// Equality of ideals, decided by identical reduced grevlex bases.
    pub fn equal(&self, other: &Ideal) -> Result<bool> {
        if !self.ring.same_vars(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let a = self.groebner(MonomialOrder::GRevLex)?;
        let b = other.groebner(MonomialOrder::GRevLex)?;
        Ok(*a == *b)
    }

    /// The ideal generated by both generator lists.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.same_vars(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(self.derive(gens))
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        for g in extra {
            gens.push(g.embed(&self.ring)?);
        }
        Ok(self.derive(gens))
    }

    /// Same ideal, extended to a ring containing this one's variables.
    pub fn embed(&self, ring: &Ring) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(ring))
            .collect::<Result<Vec<_>>>()?;
        self.derive_in(ring, gens)
    }

    /// Canonical text: ring header, then one generator per line.
    pub fn to_text(&self) -> String {
        let mut out = self.ring.header();
        out.push('\n');
        for g in &self.gens {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    /// Inverse of [`Ideal::to_text`]; blank lines and `#` comments are skipped.
    pub fn from_text(text: &str) -> Result<Ideal> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or(Error::Parse {
            pos: 0,
            msg: "missing ring header".into(),
        })?;
        let ring = VarTable::parse_header(header)?;
        let gens = lines
            .map(|l| Polynomial::parse(&ring, l))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&ring, gens)
    }
}
