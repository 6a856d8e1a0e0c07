use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::MonomialOrder;

impl Ideal {
    /// Krull dimension of the quotient ring: the largest set of variables
    /// containing the support of no leading monomial of a Groebner basis.
    pub fn dimension(&self) -> Result<usize> {
        if self.is_unit()? {
            return Err(Error::EmptyVariety);
        }
        let gb = self.groebner(MonomialOrder::GRevLex)?;
        let masks: Vec<u128> = gb
            .iter()
            .map(|g| g.leading(MonomialOrder::GRevLex).unwrap().0.support_mask())
            .collect();
        let n = self.ring.len();
        assert!(n <= 128, "dimension supports at most 128 variables");
        Ok(max_independent(&masks, n))
    }
}

/// Size of the largest variable set `S` with no mask contained in `S`.
pub(crate) fn max_independent(masks: &[u128], nvars: usize) -> usize {
    fn search(k: usize, set: u128, size: usize, n: usize, masks: &[u128], best: &mut usize) {
        if size + (n - k) <= *best {
            return;
        }
        if k == n {
            *best = size;
            return;
        }
        let with = set | (1u128 << k);
        if !masks.iter().any(|&m| m & !with == 0) {
            search(k + 1, with, size + 1, n, masks, best);
        }
        search(k + 1, set, size, n, masks, best);
    }
    let mut best = 0;
    search(0, 0, 0, nvars, masks, &mut best);
    best
}
