use crate::error::Result;
use crate::poly::{Polynomial, Ring};

use super::matrix::MatrixExpr;

/// Constant matrices attached to `(n, l)`; blocks are ordered
/// `(2l, n-2l, 2l, n-2l)` in the `2n`-dimensional ones.
#[derive(Clone, Debug)]
pub struct Constants {
    /// Anti-diagonal `H_{n-2l}`.
    pub h: MatrixExpr,
    /// `J = [[0, H_l], [-H_l, 0]]` of size `2l`.
    pub j: MatrixExpr,
    pub a_l: MatrixExpr,
    pub a_nl: MatrixExpr,
    /// Multiplication by `t` on the rank-`2n` lattice, `t² = π²`.
    pub m_t: MatrixExpr,
    pub pairing: MatrixExpr,
}

pub fn build_j(ring: &Ring, l: usize) -> Result<MatrixExpr> {
    let h = MatrixExpr::anti_identity(ring, l);
    MatrixExpr::blocks(ring, &[vec![None, Some(&h)], vec![Some(&h.neg()), None]])
}

pub fn build_constants(ring: &Ring, n: usize, l: usize) -> Result<Constants> {
    let (a, b) = (2 * l, n - 2 * l);
    let pi0 = Polynomial::var(ring, crate::poly::PI)?.pow(2);
    let h = MatrixExpr::anti_identity(ring, b);
    let j = build_j(ring, l)?;
    let ia = MatrixExpr::identity(ring, a);
    let ib = MatrixExpr::identity(ring, b);
    let pa = MatrixExpr::scalar(ring, a, &pi0);
    let pb = MatrixExpr::scalar(ring, b, &pi0);
    let a_l = MatrixExpr::blocks(
        ring,
        &[
            vec![Some(&ia), None, None, None],
            vec![None, None, None, Some(&pb)],
            vec![None, None, Some(&ia), None],
            vec![None, Some(&ib), None, None],
        ],
    )?;
    let a_nl = MatrixExpr::blocks(
        ring,
        &[
            vec![None, None, Some(&pa), None],
            vec![None, Some(&ib), None, None],
            vec![Some(&ia), None, None, None],
            vec![None, None, None, Some(&ib)],
        ],
    )?;
    let in_ = MatrixExpr::identity(ring, n);
    let m_t = MatrixExpr::blocks(
        ring,
        &[
            vec![None, Some(&MatrixExpr::scalar(ring, n, &pi0))],
            vec![Some(&in_), None],
        ],
    )?;
    let (neg_j, neg_h) = (j.neg(), h.neg());
    let pairing = MatrixExpr::blocks(
        ring,
        &[
            vec![None, None, Some(&j), None],
            vec![None, None, None, Some(&neg_h)],
            vec![Some(&neg_j), None, None, None],
            vec![None, Some(&h), None, None],
        ],
    )?;
    Ok(Constants {
        h,
        j,
        a_l,
        a_nl,
        m_t,
        pairing,
    })
}
