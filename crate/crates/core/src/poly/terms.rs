//! Term-vector kernels shared by division and the Groebner engine. Vectors are
//! sorted by decreasing monomial under the order passed in.

use std::cmp::Ordering;

use num::Zero;

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Coeff;

pub(crate) type Terms = Vec<(Monomial, Coeff)>;

/// `p - c * m * g`
pub(crate) fn sub_scaled(
    p: &[(Monomial, Coeff)],
    c: &Coeff,
    m: &Monomial,
    g: &[(Monomial, Coeff)],
    order: MonomialOrder,
) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
    while i < p.len() {
        let Some((gm, _)) = gi.peek() else { break };
        match order.cmp(&p[i].0, gm) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (gm, gc) = gi.next().unwrap();
                out.push((gm, -gc));
            }
            Ordering::Equal => {
                let (gm, gc) = gi.next().unwrap();
                let v = &p[i].1 - gc;
                if !v.is_zero() {
                    out.push((gm, v));
                }
                i += 1;
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    out.extend(gi.map(|(gm, gc)| (gm, -gc)));
    out
}

pub(crate) fn make_monic(p: &mut Terms) {
    if let Some((_, lc)) = p.first() {
        let inv = lc.recip();
        for (_, c) in p.iter_mut() {
            *c = &*c * &inv;
        }
    }
}
