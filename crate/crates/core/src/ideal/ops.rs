use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring, VarTable};

impl Ideal {
    /// `I ∩ Q[keep]`, returned in the ring of the kept variables (in their
    /// original order). Uses a block order with the eliminated variables first.
    pub fn eliminate(&self, keep: &[&str]) -> Result<Ideal> {
        let mut keep_idx = Vec::with_capacity(keep.len());
        for name in keep {
            keep_idx.push(self.ring.require(name)?);
        }
        keep_idx.sort_unstable();
        keep_idx.dedup();
        let elim_idx: Vec<usize> = (0..self.ring.len()).filter(|i| !keep_idx.contains(i)).collect();
        let kept_names: Vec<&str> = keep_idx.iter().map(|&i| self.ring.name(i)).collect();
        let target = VarTable::new(&kept_names)?;
        if elim_idx.is_empty() {
            return self.embed(&target);
        }
        if keep_idx.is_empty() {
            let unit = self.is_unit()?;
            let gens = if unit { vec![Polynomial::one(&target)] } else { vec![] };
            return self.derive_in(&target, gens);
        }
        let mut perm = elim_idx.clone();
        perm.extend(&keep_idx);
        let block_ring = self
            .ring
            .reordered(&perm)?
            .with_blocks(&[elim_idx.len(), keep_idx.len()])?;
        let lifted = self.embed(&block_ring)?;
        let gb = lifted.groebner(MonomialOrder::BlockElim(elim_idx.len()))?;
        let k = elim_idx.len();
        let gens = gb
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
            .map(|g| g.embed(&target))
            .collect::<Result<Vec<_>>>()?;
        self.derive_in(&target, gens)
    }

    fn with_aux(&self, name: &str) -> Result<(Ring, Polynomial)> {
        let (ring, used) = self.ring.extend(&[name])?;
        let aux = Polynomial::var(&ring, &used[0])?;
        Ok((ring, aux))
    }

    fn kept_names(&self) -> Vec<&str> {
        self.ring.names().iter().map(String::as_str).collect()
    }

    /// `I ∩ J` via an auxiliary `s`: eliminate `s` from `s·I + (1 - s)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.same_vars(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let (ring, s) = self.with_aux("s")?;
        let one_minus_s = &Polynomial::one(&ring) - &s;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(&s * &g.embed(&ring)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_s * &g.embed(&ring)?);
        }
        let lifted = self.derive_in(&ring, gens)?;
        let out = lifted.eliminate(&self.kept_names())?;
        self.derive_in(&self.ring, out.gens)
    }

    /// Colon ideal `I : f`, from the generators of `I ∩ (f)` divided by `f`.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal> {
        let f = f.embed(&self.ring)?;
        if f.is_zero() {
            return Ok(self.derive(vec![Polynomial::one(&self.ring)]));
        }
        let principal = self.derive(vec![f.clone()]);
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|g| g.div_exact(&f))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.derive(gens))
    }

    /// Saturation `I : f^∞` by the Rabinowitsch encoding: eliminate `w` from
    /// `I + (1 - w·f)`.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        let f = f.embed(&self.ring)?;
        let (ring, w) = self.with_aux("w")?;
        let mut gens = self
            .gens
            .iter()
            .map(|g| g.embed(&ring))
            .collect::<Result<Vec<_>>>()?;
        gens.push(&Polynomial::one(&ring) - &(&w * &f.embed(&ring)?));
        let lifted = self.derive_in(&ring, gens)?;
        let out = lifted.eliminate(&self.kept_names())?;
        self.derive_in(&self.ring, out.gens)
    }

    /// Saturation by iterating `I : f` until the ideal stops growing.
    pub fn saturate_iterated(&self, f: &Polynomial) -> Result<Ideal> {
        let mut current = self.clone();
        loop {
            let next = current.quotient(f)?;
            if next.contains(&current)? && current.contains(&next)? {
                return Ok(current);
            }
            current = next;
        }
    }
}

impl Ideal {
    /// Whether `f` lies in the radical: `1 ∈ I + (1 - w·f)`.
    pub fn radical_member(&self, f: &Polynomial) -> Result<bool> {
        let f = f.embed(&self.ring)?;
        let (ring, w) = self.with_aux("w")?;
        let mut gens = self
            .gens
            .iter()
            .map(|g| g.embed(&ring))
            .collect::<Result<Vec<_>>>()?;
        gens.push(&Polynomial::one(&ring) - &(&w * &f.embed(&ring)?));
        self.derive_in(&ring, gens)?.is_unit()
    }
}
