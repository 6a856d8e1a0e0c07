use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{sort_desc, Coeff, Polynomial};
use super::ring::same_ring;
use super::terms::sub_scaled;
use crate::error::{Error, Result};

/// Multivariate division of `p` by `divisors` under `order`.
///
/// At each step the leading term of the running dividend is divided by the
/// first divisor (in list order) whose leading monomial divides it; otherwise
/// it moves to the remainder. Returns the quotients and the remainder with
/// `p = sum q_i * g_i + r`.
pub fn divide(
    p: &Polynomial,
    divisors: &[Polynomial],
    order: MonomialOrder,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    let ring = p.ring();
    for g in divisors {
        if !same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
    }
    let gs: Vec<Vec<(Monomial, Coeff)>> = divisors.iter().map(|g| g.terms_in(order)).collect();
    let mut quotients: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); gs.len()];
    let mut rem = Vec::new();
    let mut work = p.terms_in(order);
    while let Some((lm, lc)) = work.first().cloned() {
        let hit = gs.iter().position(|g| g[0].0.divides(&lm));
        match hit {
            Some(k) => {
                let g = &gs[k];
                let t = lm.div(&g[0].0).unwrap();
                let c = &lc / &g[0].1;
                work = sub_scaled(&work, &c, &t, g, order);
                quotients[k].push((t, c));
            }
            None => {
                rem.push(work.remove(0));
            }
        }
    }
    let quotients = quotients
        .into_iter()
        .map(|q| Polynomial::from_terms(ring, q))
        .collect();
    sort_desc(&mut rem, MonomialOrder::GRevLex);
    Ok((quotients, Polynomial::from_sorted(ring, rem)))
}

/// Remainder of [`divide`].
pub fn reduce(p: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Result<Polynomial> {
    divide(p, divisors, order).map(|(_, r)| r)
}
