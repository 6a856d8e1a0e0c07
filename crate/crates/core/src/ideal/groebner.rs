//! Buchberger's algorithm with the Gebauer-Moeller pair criteria and the
//! normal selection strategy.

use std::fmt;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::poly::terms::{make_monic, sub_scaled, Terms};
use crate::poly::{Monomial, MonomialOrder};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GbStats {
    /// S-pairs reduced.
    pub pairs: u64,
    /// S-pairs whose remainder was zero.
    pub zero_reductions: u64,
    pub max_basis: usize,
    pub millis: u64,
}

impl fmt::Display for GbStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pairs={} zero={} max_basis={}",
            self.pairs, self.zero_reductions, self.max_basis
        )
    }
}

/// Limits on a single Groebner computation. Exceeding either one aborts with
/// [`Error::BudgetExceeded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: u64,
    /// Total number of stored terms across the working basis.
    pub max_terms: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 1_000_000,
            max_terms: 50_000_000,
        }
    }
}

struct Entry {
    terms: Terms,
    lm: Monomial,
    mask: u128,
    active: bool,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn pair_key(a: &Pair, b: &Pair, order: MonomialOrder) -> std::cmp::Ordering {
    a.lcm
        .degree()
        .cmp(&b.lcm.degree())
        .then_with(|| order.cmp(&a.lcm, &b.lcm))
        .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
}

fn find_divisor(basis: &[Entry], m: &Monomial) -> Option<usize> {
    let mask = m.support_mask();
    basis
        .iter()
        .position(|e| e.active && e.mask & !mask == 0 && e.lm.divides(m))
}

/// Fully reduces `p` by the active part of `basis`.
fn full_reduce(p: Terms, basis: &[Entry], order: MonomialOrder) -> Terms {
    let mut rem: Terms = Vec::new();
    let mut work = p;
    let mut head = 0;
    while head < work.len() {
        let lm = &work[head].0;
        match find_divisor(basis, lm) {
            Some(k) => {
                let g = &basis[k];
                let t = lm.div(&g.lm).unwrap();
                let c = work[head].1.clone();
                work = sub_scaled(&work[head..], &c, &t, &g.terms, order);
                head = 0;
            }
            None => {
                rem.push(work[head].clone());
                head += 1;
            }
        }
    }
    rem
}

fn s_poly(a: &Entry, b: &Entry, lcm: &Monomial, order: MonomialOrder) -> Terms {
    // both monic
    let ta = lcm.div(&a.lm).unwrap();
    let tb = lcm.div(&b.lm).unwrap();
    let one = num::One::one();
    let scaled_a: Terms = a.terms.iter().map(|(m, c)| (m.mul(&ta), c.clone())).collect();
    sub_scaled(&scaled_a, &one, &tb, &b.terms, order)
}

fn update(basis: &mut [Entry], pairs: &mut Vec<Pair>, k: usize) {
    let h_lm = basis[k].lm.clone();
    let mut candidates: Vec<Pair> = basis[..k]
        .iter()
        .enumerate()
        .filter(|(_, e)| e.active)
        .map(|(i, e)| Pair {
            i,
            j: k,
            lcm: e.lm.lcm(&h_lm),
        })
        .collect();
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = (!candidates.is_empty()).then(|| candidates.remove(0)) {
        let coprime = basis[p.i].lm.coprime(&h_lm);
        let dominated = candidates
            .iter()
            .chain(kept.iter())
            .any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p);
        }
    }
    let new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|p| !basis[p.i].lm.coprime(&h_lm))
        .collect();
    pairs.retain(|p| {
        !(h_lm.divides(&p.lcm)
            && basis[p.i].lm.lcm(&h_lm) != p.lcm
            && basis[p.j].lm.lcm(&h_lm) != p.lcm)
    });
    pairs.extend(new_pairs);
    for e in basis[..k].iter_mut() {
        if e.active && h_lm.divides(&e.lm) {
            e.active = false;
        }
    }
}

fn unit_basis(nvars: usize) -> Vec<Terms> {
    vec![vec![(Monomial::one(nvars), num::One::one())]]
}

/// Reduced Groebner basis of the span of `gens` (each sorted decreasingly
/// under `order`). Output is monic, interreduced and sorted by increasing
/// leading monomial.
pub(crate) fn groebner_terms(
    nvars: usize,
    gens: Vec<Terms>,
    order: MonomialOrder,
    budget: Budget,
) -> Result<(Vec<Terms>, GbStats)> {
    let start = Instant::now();
    let mut stats = GbStats::default();
    let mut inputs: Vec<Terms> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    inputs.iter_mut().for_each(make_monic);
    // smallest leading monomials first
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0).then_with(|| a.len().cmp(&b.len())));

    let mut basis: Vec<Entry> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut stored = 0usize;

    let push = |basis: &mut Vec<Entry>, pairs: &mut Vec<Pair>, mut h: Terms| -> bool {
        make_monic(&mut h);
        if h[0].0.is_one() {
            return true;
        }
        let lm = h[0].0.clone();
        basis.push(Entry {
            mask: lm.support_mask(),
            lm,
            terms: h,
            active: true,
        });
        let k = basis.len() - 1;
        update(basis, pairs, k);
        false
    };

    for g in inputs {
        let r = full_reduce(g, &basis, order);
        if r.is_empty() {
            continue;
        }
        stored += r.len();
        if push(&mut basis, &mut pairs, r) {
            stats.millis = start.elapsed().as_millis() as u64;
            return Ok((unit_basis(nvars), stats));
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| pair_key(&pairs[a], &pairs[b], order))
            .unwrap();
        let p = pairs.swap_remove(best);
        stats.pairs += 1;
        if stats.pairs > budget.max_pairs || stored > budget.max_terms {
            stats.max_basis = stats.max_basis.max(basis.iter().filter(|e| e.active).count());
            stats.millis = start.elapsed().as_millis() as u64;
            return Err(Error::BudgetExceeded(stats));
        }
        let s = s_poly(&basis[p.i], &basis[p.j], &p.lcm, order);
        let r = full_reduce(s, &basis, order);
        if r.is_empty() {
            stats.zero_reductions += 1;
            continue;
        }
        stored += r.len();
        if push(&mut basis, &mut pairs, r) {
            stats.millis = start.elapsed().as_millis() as u64;
            return Ok((unit_basis(nvars), stats));
        }
        stats.max_basis = stats.max_basis.max(basis.iter().filter(|e| e.active).count());
    }

    // interreduce the minimal basis
    let mut minimal: Vec<Entry> = basis.into_iter().filter(|e| e.active).collect();
    minimal.sort_by(|a, b| order.cmp(&a.lm, &b.lm));
    let mut reduced: Vec<Terms> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        minimal[k].active = false;
        let head = minimal[k].terms[0].clone();
        let tail = full_reduce(minimal[k].terms[1..].to_vec(), &minimal, order);
        minimal[k].active = true;
        let mut g = Vec::with_capacity(tail.len() + 1);
        g.push(head);
        g.extend(tail);
        reduced.push(g);
    }
    for (e, g) in minimal.iter_mut().zip(&reduced) {
        e.terms = g.clone();
    }
    stats.max_basis = stats.max_basis.max(reduced.len());
    stats.millis = start.elapsed().as_millis() as u64;
    Ok((reduced, stats))
}

/// Every S-polynomial of `basis` reduces to zero (Buchberger's criterion).
pub(crate) fn is_groebner(basis: &[Terms], order: MonomialOrder) -> bool {
    let entries: Vec<Entry> = basis
        .iter()
        .map(|t| {
            let mut t = t.clone();
            make_monic(&mut t);
            Entry {
                lm: t[0].0.clone(),
                mask: t[0].0.support_mask(),
                terms: t,
                active: true,
            }
        })
        .collect();
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let lcm = entries[i].lm.lcm(&entries[j].lm);
            let s = s_poly(&entries[i], &entries[j], &lcm, order);
            if !full_reduce(s, &entries, order).is_empty() {
                return false;
            }
        }
    }
    true
}
