use std::collections::HashMap;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::poly::{rational, Polynomial, Ring};

/// Dense matrix of polynomials over one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixExpr {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl MatrixExpr {
    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        MatrixExpr {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        Self::from_fn(ring, rows, cols, |_, _| Polynomial::zero(ring))
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        Self::scalar(ring, n, &Polynomial::one(ring))
    }

    /// `c·I_n`.
    pub fn scalar(ring: &Ring, n: usize, c: &Polynomial) -> Self {
        Self::from_fn(ring, n, n, |i, j| if i == j { c.clone() } else { Polynomial::zero(ring) })
    }

    /// Integer matrix given row by row.
    pub fn from_ints(ring: &Ring, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_fn(ring, rows.len(), cols, |i, j| Polynomial::int(ring, rows[i][j]))
    }

    pub fn column(ring: &Ring, entries: Vec<Polynomial>) -> Self {
        let rows = entries.len();
        MatrixExpr {
            ring: ring.clone(),
            rows,
            cols: 1,
            entries,
        }
    }

    /// Unit anti-diagonal `H_k`.
    pub fn anti_identity(ring: &Ring, k: usize) -> Self {
        Self::from_fn(ring, k, k, |i, j| Polynomial::int(ring, (i + j + 1 == k) as i64))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_shape(&self, other: &MatrixExpr, rows: usize, cols: usize) -> Result<()> {
        if !crate::poly::same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if other.rows != rows || other.cols != cols {
            return Err(Error::InvalidChart(format!(
                "shape mismatch: {}x{} against {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MatrixExpr) -> Result<Self> {
        self.check_shape(other, self.rows, self.cols)?;
        Ok(Self::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j)))
    }

    pub fn sub(&self, other: &MatrixExpr) -> Result<Self> {
        self.check_shape(other, self.rows, self.cols)?;
        Ok(Self::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j)))
    }

    pub fn mul(&self, other: &MatrixExpr) -> Result<Self> {
        self.check_shape(other, self.cols, other.cols)?;
        Ok(Self::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        Self::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(&self.ring, self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> Self {
        Self::from_fn(&self.ring, rows.len(), cols.len(), |i, j| {
            self.get(rows.start + i, cols.start + j).clone()
        })
    }

    /// Rows and columns picked by index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.ring, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Assembles a grid of blocks; `None` is a zero block sized by its row
    /// and column neighbours.
    pub fn blocks(ring: &Ring, grid: &[Vec<Option<&MatrixExpr>>]) -> Result<Self> {
        let nr = grid.len();
        let nc = grid.first().map_or(0, Vec::len);
        let mut heights = vec![None; nr];
        let mut widths = vec![None; nc];
        for (bi, row) in grid.iter().enumerate() {
            if row.len() != nc {
                return Err(Error::InvalidChart("ragged block grid".into()));
            }
            for (bj, block) in row.iter().enumerate() {
                if let Some(b) = block {
                    for (slot, size) in [(&mut heights[bi], b.rows), (&mut widths[bj], b.cols)] {
                        match *slot {
                            Some(s) if s != size => {
                                return Err(Error::InvalidChart("inconsistent block sizes".into()))
                            }
                            _ => *slot = Some(size),
                        }
                    }
                }
            }
        }
        let heights: Vec<usize> = heights
            .into_iter()
            .map(|h| h.ok_or_else(|| Error::InvalidChart("block row of zeros".into())))
            .collect::<Result<_>>()?;
        let widths: Vec<usize> = widths
            .into_iter()
            .map(|w| w.ok_or_else(|| Error::InvalidChart("block column of zeros".into())))
            .collect::<Result<_>>()?;
        let rows: usize = heights.iter().sum();
        let cols: usize = widths.iter().sum();
        let mut out = Self::zeros(ring, rows, cols);
        let mut r0 = 0;
        for (bi, row) in grid.iter().enumerate() {
            let mut c0 = 0;
            for (bj, block) in row.iter().enumerate() {
                if let Some(b) = block {
                    if !crate::poly::same_ring(&b.ring, ring) {
                        return Err(Error::RingMismatch);
                    }
                    for i in 0..b.rows {
                        for j in 0..b.cols {
                            out.entries[(r0 + i) * cols + c0 + j] = b.get(i, j).clone();
                        }
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &MatrixExpr) -> Result<Self> {
        Self::blocks(&self.ring, &[vec![Some(self), Some(other)]])
    }

    pub fn trace(&self) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ring);
        for i in 0..self.rows.min(self.cols) {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Determinant by Laplace expansion along rows, memoised on the set of
    /// remaining columns.
    pub fn determinant(&self) -> Result<Polynomial> {
        self.determinant_with(&|p| Ok(p))
    }

    /// Determinant with `reduce` applied to every partial minor; used to
    /// work modulo an ideal.
    pub fn determinant_with(&self, reduce: &dyn Fn(Polynomial) -> Result<Polynomial>) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::InvalidChart("determinant of a non-square matrix".into()));
        }
        if self.rows > 30 {
            return Err(Error::InvalidChart("matrix too large for expansion".into()));
        }
        let mut memo = HashMap::new();
        self.det_rec(0, (1u32 << self.cols) - 1, &mut memo, reduce)
    }

    fn det_rec(
        &self,
        row: usize,
        cols: u32,
        memo: &mut HashMap<u32, Polynomial>,
        reduce: &dyn Fn(Polynomial) -> Result<Polynomial>,
    ) -> Result<Polynomial> {
        if row == self.rows {
            return Ok(Polynomial::one(&self.ring));
        }
        if let Some(p) = memo.get(&cols) {
            return Ok(p.clone());
        }
        let mut acc = Polynomial::zero(&self.ring);
        let mut sign_neg = false;
        for j in 0..self.cols {
            if cols & (1 << j) == 0 {
                continue;
            }
            let entry = self.get(row, j);
            if !entry.is_zero() {
                let minor = self.det_rec(row + 1, cols & !(1 << j), memo, reduce)?;
                if !minor.is_zero() {
                    let term = entry * &minor;
                    acc = if sign_neg { &acc - &term } else { &acc + &term };
                }
            }
            sign_neg = !sign_neg;
        }
        let acc = reduce(acc)?;
        memo.insert(cols, acc.clone());
        Ok(acc)
    }

    /// All `k × k` minors: row subsets in lexicographic order, and for each
    /// the column subsets in lexicographic order.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial>> {
        let row_sets = subsets(self.rows, k);
        let col_sets = subsets(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for r in &row_sets {
            for c in &col_sets {
                out.push(self.select(r, c).determinant()?);
            }
        }
        Ok(out)
    }

    /// Entries of `∧²M`: the 2×2 minors in row-major pair order.
    pub fn wedge2(&self) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for r1 in 0..self.rows {
            for r2 in r1 + 1..self.rows {
                for c1 in 0..self.cols {
                    for c2 in c1 + 1..self.cols {
                        let a = self.get(r1, c1) * self.get(r2, c2);
                        let b = self.get(r1, c2) * self.get(r2, c1);
                        out.push(&a - &b);
                    }
                }
            }
        }
        out
    }

    /// Coefficients `[c_0, …, c_n]` of `det(t·I - M) = Σ c_k t^k` by the
    /// Faddeev–LeVerrier recurrence.
    pub fn char_poly(&self) -> Result<Vec<Polynomial>> {
        self.char_poly_with(&|p| Ok(p))
    }

    /// [`MatrixExpr::char_poly`] with `reduce` applied to every intermediate
    /// entry; the result is correct modulo any ideal `reduce` respects.
    pub fn char_poly_with(&self, reduce: &dyn Fn(Polynomial) -> Result<Polynomial>) -> Result<Vec<Polynomial>> {
        if self.rows != self.cols {
            return Err(Error::InvalidChart("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let reduce_all = |m: MatrixExpr| -> Result<MatrixExpr> {
            let entries = m.entries.into_iter().map(reduce).collect::<Result<_>>()?;
            Ok(MatrixExpr { entries, ..m })
        };
        let a = reduce_all(self.clone())?;
        let mut coeffs = vec![Polynomial::zero(&self.ring); n + 1];
        coeffs[n] = Polynomial::one(&self.ring);
        // M_k = A·M_{k-1} + c_{n-k+1}·I and c_{n-k} = -tr(A·M_k)/k
        let mut m = Self::zeros(&self.ring, n, n);
        for k in 1..=n {
            let shift = Self::scalar(&self.ring, n, &coeffs[n + 1 - k]);
            m = reduce_all(a.mul(&m)?.add(&shift)?)?;
            let am = a.mul(&m)?;
            coeffs[n - k] = reduce(am.trace().scale(&rational(-1, k as i64)))?;
        }
        Ok(coeffs)
    }

    /// Coefficients of `Π (t - roots[i])`, lowest degree first.
    pub fn poly_from_roots(ring: &Ring, roots: &[Polynomial]) -> Vec<Polynomial> {
        let mut coeffs = vec![Polynomial::one(ring)];
        for r in roots {
            let mut next = vec![Polynomial::zero(ring); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] = &next[k + 1] + c;
                next[k] = &next[k] - &(c * r);
            }
            coeffs = next;
        }
        coeffs
    }

    /// Same matrix with every entry embedded in `ring` by variable name.
    pub fn embed(&self, ring: &Ring) -> Result<Self> {
        let entries = self.entries.iter().map(|p| p.embed(ring)).collect::<Result<_>>()?;
        Ok(MatrixExpr {
            ring: ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
