use std::collections::HashMap;

use num::One;

use super::Ideal;
use crate::error::Result;
use crate::poly::{Polynomial, VarTable};

/// Outcome of [`Ideal::eliminate_linear`].
#[derive(Clone, Debug)]
pub struct LinearReduction {
    /// Remaining generators in the ring without the solved variables.
    pub ideal: Ideal,
    /// `(variable, value)` in the order solved; values live in the original
    /// ring and may mention variables solved later.
    pub solved: Vec<(String, Polynomial)>,
}

/// Value of variable `i` forced by `g = 0`, when `i` occurs in `g` only in
/// the single term `c·x_i` with `c` constant.
fn solve_for(g: &Polynomial, i: usize) -> Option<Polynomial> {
    let mut coeff = None;
    for (m, c) in g.terms() {
        let e = m.exponent(i);
        if e == 0 {
            continue;
        }
        if e != 1 || m.degree() != 1 || coeff.is_some() {
            return None;
        }
        coeff = Some(c.clone());
    }
    let c = coeff?;
    let rest = g.terms().iter().filter(|(m, _)| m.exponent(i) == 0).cloned();
    let rest = Polynomial::from_terms(g.ring(), rest);
    Some(rest.scale(&(-(crate::poly::Coeff::one() / c))))
}

impl Ideal {
    /// Removes variables that some generator determines linearly, the
    /// quotient ring being unchanged up to isomorphism. With `candidates`
    /// the listed variables are tried in order, each against the first
    /// generator that solves it; otherwise generators are scanned in order
    /// and each is used for the first variable it solves, until none does.
    pub fn eliminate_linear(&self, candidates: Option<&[&str]>) -> Result<LinearReduction> {
        let ring = self.ring.clone();
        let mut gens: Vec<Polynomial> = self.gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let mut solved: Vec<(usize, Polynomial)> = Vec::new();
        let mut apply = |gens: &mut Vec<Polynomial>, k: usize, i: usize, value: Polynomial| -> Result<()> {
            gens.remove(k);
            let map = HashMap::from([(i, value.clone())]);
            for g in gens.iter_mut() {
                if g.contains_var(i) {
                    *g = g.substitute_indexed(&map, &ring)?;
                }
            }
            gens.retain(|g| !g.is_zero());
            solved.push((i, value));
            Ok(())
        };
        match candidates {
            Some(names) => {
                for name in names {
                    let i = ring.require(name)?;
                    let hit = gens.iter().enumerate().find_map(|(k, g)| solve_for(g, i).map(|v| (k, v)));
                    if let Some((k, value)) = hit {
                        apply(&mut gens, k, i, value)?;
                    }
                }
            }
            None => loop {
                let hit = gens.iter().enumerate().find_map(|(k, g)| {
                    g.variables().into_iter().find_map(|i| solve_for(g, i).map(|v| (k, i, v)))
                });
                match hit {
                    Some((k, i, value)) => apply(&mut gens, k, i, value)?,
                    None => break,
                }
            },
        }
        let gone: Vec<usize> = solved.iter().map(|(i, _)| *i).collect();
        let kept: Vec<&str> = (0..ring.len())
            .filter(|i| !gone.contains(i))
            .map(|i| ring.name(i))
            .collect();
        let target = VarTable::new(&kept)?;
        let gens = gens.iter().map(|g| g.embed(&target)).collect::<Result<Vec<_>>>()?;
        let solved = solved
            .into_iter()
            .map(|(i, v)| (ring.name(i).to_string(), v))
            .collect();
        Ok(LinearReduction {
            ideal: self.derive_in(&target, gens)?,
            solved,
        })
    }

    /// Same ideal in the ring of the variables its generators mention.
    pub fn restrict_to_support(&self) -> Result<Ideal> {
        let mut used = vec![false; self.ring.len()];
        for g in &self.gens {
            for i in g.variables() {
                used[i] = true;
            }
        }
        let names: Vec<&str> = (0..self.ring.len()).filter(|&i| used[i]).map(|i| self.ring.name(i)).collect();
        let target = VarTable::new(&names)?;
        let gens = self
            .gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.embed(&target))
            .collect::<Result<Vec<_>>>()?;
        self.derive_in(&target, gens)
    }
}

