use std::collections::{HashMap, HashSet};

use super::{run_check, CheckOutcome, Finding};
use crate::chart::MatrixExpr;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Jacobian criterion for `V(J)`. Variables fixed linearly by a generator are
/// removed first; the codimension `c` comes from the computed dimension and
/// `S = J + (c×c minors of the Jacobian)` cuts out the singular locus. With
/// `expected = None` the check passes iff `S = (1)`; otherwise iff `V(S)`
/// equals `V(expected)`.
pub fn smooth_finding(j: &Ideal, expected: Option<&Ideal>, max_minors: u128) -> Result<Finding> {
    let lin = j.eliminate_linear(None)?;
    let reduced = lin.ideal;
    if reduced.is_unit()? {
        return Err(Error::EmptyVariety);
    }
    let ring = reduced.ring().clone();
    let dim = reduced.dimension()?;
    let codim = ring.len() - dim;
    let gens: Vec<Polynomial> = reduced.generators().iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut support: Vec<usize> = gens.iter().flat_map(|g| g.variables()).collect();
    support.sort_unstable();
    support.dedup();
    let count = binomial(gens.len(), codim) * binomial(support.len(), codim);
    if count > max_minors {
        return Err(Error::MinorBudget {
            count,
            limit: max_minors,
        });
    }
    let jac = MatrixExpr::from_fn(&ring, gens.len(), support.len(), |r, c| gens[r].derivative(support[c]));
    let mut seen = HashSet::new();
    let mut minors = Vec::new();
    if codim == 0 {
        minors.push(Polynomial::one(&ring));
    } else {
        for m in jac.minors(codim)? {
            if !m.is_zero() && seen.insert(m.clone()) {
                minors.push(m);
            }
        }
    }
    let singular = reduced.with_generators(&minors)?;
    let mut witness = vec![format!(
        "{} variables after linear reduction, codim {codim}, {} distinct nonzero minors",
        ring.len(),
        minors.len()
    )];
    let Some(expected) = expected else {
        if singular.is_unit()? {
            witness.push("singular locus empty".into());
            return Ok(Finding::pass(witness));
        }
        let gb = singular.groebner(crate::poly::MonomialOrder::GRevLex)?;
        let shown: Vec<String> = gb.iter().take(4).map(|g| g.to_string()).collect();
        witness.push(format!("singular locus nonempty, cut out by {}", shown.join(", ")));
        return Ok(Finding::fail(witness));
    };
    // carry the expected locus through the same linear substitutions
    let mut exp_gens: Vec<Polynomial> = expected
        .generators()
        .iter()
        .map(|g| g.embed(j.ring()))
        .collect::<Result<_>>()?;
    for (name, value) in &lin.solved {
        let i = j.ring().require(name)?;
        let map = HashMap::from([(i, value.clone())]);
        for g in exp_gens.iter_mut() {
            if g.contains_var(i) {
                *g = g.substitute_indexed(&map, j.ring())?;
            }
        }
    }
    let exp_gens = exp_gens.iter().map(|g| g.embed(&ring)).collect::<Result<Vec<_>>>()?;
    let expected = Ideal::new(&ring, exp_gens)?.with_budget(reduced.budget());
    if let Some(g) = expected.first_non_member(&singular)? {
        witness.push(format!("expected locus has smooth points: {g} does not vanish on it"));
        return Ok(Finding::fail(witness));
    }
    for e in expected.generators() {
        if !singular.radical_member(e)? {
            witness.push(format!("singular points outside the expected locus: {e} does not vanish on them"));
            return Ok(Finding::fail(witness));
        }
    }
    witness.push("singular locus equals the expected one".into());
    Ok(Finding::pass(witness))
}

pub fn check_smooth(j: &Ideal, expected: Option<&Ideal>, max_minors: u128) -> CheckOutcome {
    run_check(super::SMOOTH, "", || smooth_finding(j, expected, max_minors))
}
