use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{rational, Polynomial, Ring, VarTable, PI};

use super::constants::build_j;
use super::matrix::MatrixExpr;
use super::spec::{ChartKind, ChartSpec};

pub fn v_name(i: usize) -> String {
    format!("v{i}")
}

pub fn z_name(i: usize) -> String {
    format!("z{i}")
}

pub fn t_name(i: usize) -> String {
    format!("t{i}")
}

/// Matrix entry names; an underscore separates the indices once `n ≥ 10`.
pub fn entry_name(prefix: char, n: usize, i: usize, j: usize) -> String {
    if n >= 10 {
        format!("{prefix}{i}_{j}")
    } else {
        format!("{prefix}{i}{j}")
    }
}

/// Variable names of the ring the chart of `spec` lives in.
pub fn chart_variables(spec: &ChartSpec) -> Vec<String> {
    let n = spec.n;
    let mut names: Vec<String> = (1..=n).map(v_name).collect();
    match spec.kind {
        ChartKind::Raw => {
            names.extend(spec.second_block().map(z_name));
            names.extend((1..=2 * spec.l).map(z_name));
            for p in ['x', 'y'] {
                for i in 1..=n {
                    for j in 1..=n {
                        names.push(entry_name(p, n, i, j));
                    }
                }
            }
        }
        ChartKind::SimplifiedA | ChartKind::Unified => names.extend(spec.second_block().map(z_name)),
        ChartKind::SimplifiedB => names.push("u".into()),
        ChartKind::BlowupPatch(_) | ChartKind::ReesProj => {
            names.extend(spec.second_block().map(z_name));
            names.extend(spec.second_block().map(t_name));
        }
    }
    names.push(PI.into());
    names
}

pub fn chart_ring(spec: &ChartSpec) -> Result<Ring> {
    VarTable::with_pi(&chart_variables(spec))
}

fn var(ring: &Ring, name: &str) -> Polynomial {
    Polynomial::var(ring, name).expect("chart variable")
}

fn column(ring: &Ring, names: impl IntoIterator<Item = String>) -> MatrixExpr {
    MatrixExpr::column(ring, names.into_iter().map(|s| var(ring, &s)).collect())
}

fn pi(ring: &Ring) -> Polynomial {
    var(ring, PI)
}

fn unit_normalization(ring: &Ring, spec: &ChartSpec) -> Polynomial {
    &var(ring, &v_name(spec.i0)) - &Polynomial::one(ring)
}

/// Column vectors `V1, V2` and the constant matrices `H`, `J` in `ring`.
#[derive(Clone, Debug)]
pub struct Blocks {
    pub v1: MatrixExpr,
    pub v2: MatrixExpr,
    pub h: MatrixExpr,
    pub j: MatrixExpr,
}

pub fn blocks(ring: &Ring, spec: &ChartSpec) -> Result<Blocks> {
    Ok(Blocks {
        v1: column(ring, (1..=2 * spec.l).map(v_name)),
        v2: column(ring, spec.second_block().map(v_name)),
        h: MatrixExpr::anti_identity(ring, spec.n - 2 * spec.l),
        j: build_j(ring, spec.l)?,
    })
}

/// `Z2 = (z_{2l+1}, …, z_n)` in a ring that has those variables.
pub fn z2_column(ring: &Ring, spec: &ChartSpec) -> MatrixExpr {
    column(ring, spec.second_block().map(z_name))
}

/// `T = (t_{2l+1}, …, t_n)`.
pub fn t_column(ring: &Ring, spec: &ChartSpec) -> MatrixExpr {
    column(ring, spec.second_block().map(t_name))
}

/// Scalar of a `1×1` matrix.
fn scalar(m: MatrixExpr) -> Polynomial {
    debug_assert_eq!((m.rows(), m.cols()), (1, 1));
    m.get(0, 0).clone()
}

/// `aᵗ·M·b` for column vectors.
pub fn bilinear(a: &MatrixExpr, m: &MatrixExpr, b: &MatrixExpr) -> Result<Polynomial> {
    Ok(scalar(a.transpose().mul(m)?.mul(b)?))
}

/// Scalar multiplying `I` in the raw relation on `Y4·X4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Y4X4Scalar {
    /// `Y4·X4 = π²·I`, the form forced by `t² = π²`.
    PiSquared,
    /// `Y4·X4 = π·I`, kept to show it is not equivalent.
    Pi,
}

/// Matrices of the raw chart in its own ring.
#[derive(Clone, Debug)]
pub struct RawMatrices {
    pub x: MatrixExpr,
    pub y: MatrixExpr,
    pub v: MatrixExpr,
    pub z: MatrixExpr,
}

pub fn raw_matrices(ring: &Ring, n: usize) -> RawMatrices {
    let entries = |p: char| MatrixExpr::from_fn(ring, n, n, |i, j| var(ring, &entry_name(p, n, i + 1, j + 1)));
    RawMatrices {
        x: entries('x'),
        y: entries('y'),
        v: column(ring, (1..=n).map(v_name)),
        z: column(ring, (1..=n).map(z_name)),
    }
}

pub fn build_raw_chart(spec: &ChartSpec) -> Result<Ideal> {
    build_raw_chart_with(spec, Y4X4Scalar::PiSquared)
}

/// Raw chart in the `x, y, v, z` coordinates, generators in the order
/// (a) `Y - VZᵗ + πI`, `ZᵗV - 2π`; (b) the four transpose relations;
/// (c) `X1 - (Y1 + Y2X3)`, `X2 - Y2X4`, `Y4X4 - cI`; (d) `X1Y1 - π²I`,
/// `Y3 - X3Y1`, `Y4 - (X4 + X3Y2)`; then `v_{i0} - 1`.
pub fn build_raw_chart_with(spec: &ChartSpec, y4x4: Y4X4Scalar) -> Result<Ideal> {
    if spec.kind != ChartKind::Raw {
        return Err(Error::InvalidChart(format!("{spec} is not a raw chart")));
    }
    let ring = chart_ring(spec)?;
    let (n, a) = (spec.n, 2 * spec.l);
    let RawMatrices { x, y, v, z } = raw_matrices(&ring, n);
    let Blocks { h, j, .. } = blocks(&ring, spec)?;
    let p = pi(&ring);
    let pi2 = p.pow(2);
    let (lo, hi) = (0..a, a..n);
    let xb = |r: std::ops::Range<usize>, c: std::ops::Range<usize>| x.submatrix(r, c);
    let yb = |r: std::ops::Range<usize>, c: std::ops::Range<usize>| y.submatrix(r, c);
    let (x1, x2, x3, x4) = (xb(lo.clone(), lo.clone()), xb(lo.clone(), hi.clone()), xb(hi.clone(), lo.clone()), xb(hi.clone(), hi.clone()));
    let (y1, y2, y3, y4) = (yb(lo.clone(), lo.clone()), yb(lo.clone(), hi.clone()), yb(hi.clone(), lo.clone()), yb(hi.clone(), hi.clone()));
    let ia = |c: &Polynomial| MatrixExpr::scalar(&ring, a, c);
    let ib = |c: &Polynomial| MatrixExpr::scalar(&ring, n - a, c);

    let mut gens = Vec::new();
    let mut push = |m: MatrixExpr| gens.extend(m.entries().iter().cloned());
    // (a)
    push(y.sub(&v.mul(&z.transpose())?)?.add(&MatrixExpr::scalar(&ring, n, &p))?);
    push(MatrixExpr::scalar(&ring, 1, &(&bilinear(&z, &MatrixExpr::identity(&ring, n), &v)? - &p.scale(&rational(2, 1)))));
    // (b)
    push(y1.add(&j.mul(&x1.transpose())?.mul(&j)?)?);
    push(y2.add(&j.mul(&x3.transpose())?.mul(&h)?)?);
    push(y3.sub(&h.mul(&x2.transpose())?.mul(&j)?)?);
    push(y4.sub(&h.mul(&x4.transpose())?.mul(&h)?)?);
    // (c)
    let c = match y4x4 {
        Y4X4Scalar::PiSquared => pi2.clone(),
        Y4X4Scalar::Pi => p.clone(),
    };
    push(x1.sub(&y1.add(&y2.mul(&x3)?)?)?);
    push(x2.sub(&y2.mul(&x4)?)?);
    push(y4.mul(&x4)?.sub(&ib(&c))?);
    // (d)
    push(x1.mul(&y1)?.sub(&ia(&pi2))?);
    push(y3.sub(&x3.mul(&y1)?)?);
    push(y4.sub(&x4.add(&x3.mul(&y2)?)?)?);
    gens.push(unit_normalization(&ring, spec));
    Ideal::new(&ring, gens)
}

/// Generators `∧²[V2 | H·Z2]` followed by `Z2ᵗV2 - 2π`.
fn kind_a_relations(ring: &Ring, spec: &ChartSpec) -> Result<Vec<Polynomial>> {
    let b = blocks(ring, spec)?;
    let z2 = z2_column(ring, spec);
    let mut gens = b.v2.hstack(&b.h.mul(&z2)?)?.wedge2();
    gens.push(&bilinear(&z2, &MatrixExpr::identity(ring, z2.rows()), &b.v2)? - &pi(ring).scale(&rational(2, 1)));
    Ok(gens)
}

/// Reduced chart: kinds simplified-A and unified give
/// `(v_{i0} - 1, ∧²[V2 | HZ2], Z2ᵗV2 - 2π)`, kind simplified-B gives
/// `(v_{i0} - 1, u·V2ᵗHV2 - 2π)`.
pub fn build_simplified_chart(spec: &ChartSpec) -> Result<Ideal> {
    let ring = chart_ring(spec)?;
    let mut gens = vec![unit_normalization(&ring, spec)];
    match spec.kind {
        ChartKind::SimplifiedA | ChartKind::Unified => gens.extend(kind_a_relations(&ring, spec)?),
        ChartKind::SimplifiedB => {
            let b = blocks(&ring, spec)?;
            let q = bilinear(&b.v2, &b.h, &b.v2)?;
            gens.push(&(&var(&ring, "u") * &q) - &pi(&ring).scale(&rational(2, 1)));
        }
        _ => return Err(Error::InvalidChart(format!("{spec} is not a simplified chart"))),
    }
    Ideal::new(&ring, gens)
}

/// Raw-chart matrices expressed in the coordinates of a simplified chart.
#[derive(Clone, Debug)]
pub struct Parametrization {
    pub ring: Ring,
    pub v: MatrixExpr,
    pub z1: MatrixExpr,
    pub z2: MatrixExpr,
    pub x: MatrixExpr,
    pub y: MatrixExpr,
    /// `a = Z2ᵗ H Z2`.
    pub a: Polynomial,
}

impl Parametrization {
    /// `Z = [Z1; Z2]`.
    pub fn z(&self) -> MatrixExpr {
        MatrixExpr::blocks(&self.ring, &[vec![Some(&self.z1)], vec![Some(&self.z2)]]).unwrap()
    }

    /// Substitution sending raw variables to their images; `v` and `pi`
    /// (and `Z2` for kind A) map to themselves by name.
    pub fn assignment(&self, spec: &ChartSpec) -> HashMap<String, Polynomial> {
        let n = spec.n;
        let mut map = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                map.insert(entry_name('x', n, i + 1, j + 1), self.x.get(i, j).clone());
                map.insert(entry_name('y', n, i + 1, j + 1), self.y.get(i, j).clone());
            }
        }
        for i in 0..2 * spec.l {
            map.insert(z_name(i + 1), self.z1.get(i, 0).clone());
        }
        if spec.kind == ChartKind::SimplifiedB {
            for (k, i) in spec.second_block().enumerate() {
                map.insert(z_name(i), self.z2.get(k, 0).clone());
            }
        }
        map
    }
}

/// `Y = VZᵗ - πI`; `X1 = -JZ1V1ᵗJ - πI`, `X2 = JZ1V2ᵗH`, `X3 = -HZ2V1ᵗJ`,
/// `X4 = HZ2V2ᵗH - πI`; `Z1 = -(a/2)·JV1`, or for kind B `Z2 = u·HV2` and
/// `Z1 = -(a - πu)·JV1`.
pub fn build_parametrization(spec: &ChartSpec) -> Result<Parametrization> {
    if !matches!(spec.kind, ChartKind::SimplifiedA | ChartKind::SimplifiedB | ChartKind::Unified) {
        return Err(Error::InvalidChart(format!("{spec} has no parametrization")));
    }
    let ring = chart_ring(spec)?;
    let Blocks { v1, v2, h, j } = blocks(&ring, spec)?;
    let p = pi(&ring);
    let (z1, z2, a) = if spec.kind == ChartKind::SimplifiedB {
        let u = var(&ring, "u");
        let z2 = h.mul(&v2)?.scale(&u);
        let a = bilinear(&z2, &h, &z2)?;
        let z1 = j.mul(&v1)?.scale(&-(&a - &(&p * &u)));
        (z1, z2, a)
    } else {
        let z2 = z2_column(&ring, spec);
        let a = bilinear(&z2, &h, &z2)?;
        let z1 = j.mul(&v1)?.scale(&a.scale(&rational(-1, 2)));
        (z1, z2, a)
    };
    let n = spec.n;
    let v = MatrixExpr::blocks(&ring, &[vec![Some(&v1)], vec![Some(&v2)]])?;
    let z = MatrixExpr::blocks(&ring, &[vec![Some(&z1)], vec![Some(&z2)]])?;
    let y = v.mul(&z.transpose())?.sub(&MatrixExpr::scalar(&ring, n, &p))?;
    let x1 = j.mul(&z1)?.mul(&v1.transpose())?.mul(&j)?.neg();
    let x2 = j.mul(&z1)?.mul(&v2.transpose())?.mul(&h)?;
    let x3 = h.mul(&z2)?.mul(&v1.transpose())?.mul(&j)?.neg();
    let x4 = h.mul(&z2)?.mul(&v2.transpose())?.mul(&h)?;
    let x = MatrixExpr::blocks(&ring, &[vec![Some(&x1), Some(&x2)], vec![Some(&x3), Some(&x4)]])?
        .sub(&MatrixExpr::scalar(&ring, n, &p))?;
    Ok(Parametrization { ring, v, z1, z2, x, y, a })
}

/// Index `m` with `v_m` playing the role of `v_n` on patch `j`.
pub fn patch_pivot(spec: &ChartSpec, j: usize) -> usize {
    spec.mirror(j)
}

/// `q = Σ_{i ∈ 2l+1..=n} t_i t_{n+2l+1-i}` in a ring with the `t` variables.
pub fn q_form(ring: &Ring, spec: &ChartSpec) -> Result<Polynomial> {
    let t = t_column(ring, spec);
    let h = MatrixExpr::anti_identity(ring, t.rows());
    bilinear(&t, &h, &t)
}

fn patch_index(spec: &ChartSpec) -> Result<usize> {
    match spec.kind {
        ChartKind::BlowupPatch(j) => Ok(j),
        _ => Err(Error::InvalidChart(format!("{spec} is not a blow-up patch"))),
    }
}

/// Affine patch `t_j = 1` of the blow-up along `(Z2)`: generators
/// `v_{i0} - 1`, `t_j - 1`, `z_i - z_j t_i` (`i ≠ j`), `v_k - t_{k'} v_m`
/// (`k ≠ m`, `k'` the mirror of `k`, `m` the mirror of `j`) and
/// `v_m z_j q - 2π` with `t_j = 1` inserted into `q`.
pub fn build_blowup_patch(spec: &ChartSpec) -> Result<Ideal> {
    let j = patch_index(spec)?;
    let ring = chart_ring(spec)?;
    let m = patch_pivot(spec, j);
    let one = Polynomial::one(&ring);
    let (zj, vm, tj) = (var(&ring, &z_name(j)), var(&ring, &v_name(m)), var(&ring, &t_name(j)));
    let mut gens = vec![unit_normalization(&ring, spec), &tj - &one];
    for i in spec.second_block().filter(|&i| i != j) {
        gens.push(&var(&ring, &z_name(i)) - &(&zj * &var(&ring, &t_name(i))));
    }
    for k in spec.second_block().filter(|&k| k != m) {
        gens.push(&var(&ring, &v_name(k)) - &(&var(&ring, &t_name(spec.mirror(k))) * &vm));
    }
    let tj_index = ring.require(&t_name(j))?;
    let q = q_form(&ring, spec)?.substitute_indexed(&HashMap::from([(tj_index, one.clone())]), &ring)?;
    gens.push(&(&(&vm * &zj) * &q) - &pi(&ring).scale(&rational(2, 1)));
    Ideal::new(&ring, gens)
}

/// `(v_{i0} - 1, Z2ᵗV2 - 2π)` followed by `∧²[Z2 | T]` and `∧²[V2 | HT]`;
/// homogeneous in `T`.
pub fn build_rees_presentation(spec: &ChartSpec) -> Result<Ideal> {
    if spec.kind != ChartKind::ReesProj {
        return Err(Error::InvalidChart(format!("{spec} is not a Rees presentation")));
    }
    let ring = chart_ring(spec)?;
    let b = blocks(&ring, spec)?;
    let (z2, t) = (z2_column(&ring, spec), t_column(&ring, spec));
    let mut gens = vec![
        unit_normalization(&ring, spec),
        &bilinear(&z2, &MatrixExpr::identity(&ring, z2.rows()), &b.v2)? - &pi(&ring).scale(&rational(2, 1)),
    ];
    gens.extend(z2.hstack(&t)?.wedge2());
    gens.extend(b.v2.hstack(&b.h.mul(&t)?)?.wedge2());
    Ideal::new(&ring, gens)
}

/// The ideal named by `spec`.
pub fn build_chart(spec: &ChartSpec) -> Result<Ideal> {
    spec.validate()?;
    match spec.kind {
        ChartKind::Raw => build_raw_chart(spec),
        ChartKind::SimplifiedA | ChartKind::SimplifiedB | ChartKind::Unified => build_simplified_chart(spec),
        ChartKind::BlowupPatch(_) => build_blowup_patch(spec),
        ChartKind::ReesProj => build_rees_presentation(spec),
    }
}
