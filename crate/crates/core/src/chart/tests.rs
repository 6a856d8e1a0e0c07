use std::collections::HashMap;

use proptest::prelude::*;

use super::*;
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Ring, VarTable};

fn spec(s: &str) -> ChartSpec {
    s.parse().unwrap()
}

fn p(ring: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(ring, s).unwrap()
}

fn texts(ideal: &Ideal) -> Vec<String> {
    ideal.generators().iter().map(|g| g.to_string()).collect()
}

const REGISTRY_RANKS: [(usize, usize); 5] = [(5, 1), (6, 1), (7, 1), (7, 2), (8, 2)];

fn registry_simplified() -> Vec<ChartSpec> {
    let mut out = Vec::new();
    for (n, l) in REGISTRY_RANKS {
        for i0 in 1..=n {
            out.push(ChartSpec::simplified(n, l, i0).unwrap());
        }
    }
    out
}

#[test]
fn j_for_rank_five() {
    let r = VarTable::with_pi(&["pi"]).unwrap();
    let c = build_constants(&r, 5, 1).unwrap();
    assert_eq!(c.j, MatrixExpr::from_ints(&r, &[vec![0, 1], vec![-1, 0]]));
}

#[test]
fn constant_identities() {
    let r = VarTable::with_pi(&["pi"]).unwrap();
    for (n, l) in REGISTRY_RANKS {
        let c = build_constants(&r, n, l).unwrap();
        let j2 = c.j.mul(&c.j).unwrap();
        assert_eq!(j2, MatrixExpr::identity(&r, 2 * l).neg());
        assert_eq!(c.h.mul(&c.h).unwrap(), MatrixExpr::identity(&r, n - 2 * l));
        let det = c.pairing.determinant().unwrap();
        assert!(det == Polynomial::int(&r, 1) || det == Polynomial::int(&r, -1), "{det}");
        // t² = π² on the lattice
        let pi2 = Polynomial::var(&r, "pi").unwrap().pow(2);
        assert_eq!(c.m_t.mul(&c.m_t).unwrap(), MatrixExpr::scalar(&r, 2 * n, &pi2));
        assert_eq!((c.a_l.rows(), c.a_nl.cols()), (2 * n, 2 * n));
    }
}

#[test]
fn a_l_carries_pi_squared_block() {
    let r = VarTable::with_pi(&["pi"]).unwrap();
    let c = build_constants(&r, 5, 1).unwrap();
    let pi2 = p(&r, "pi^2");
    // block row 2 (rows 2..5), block column 4 (columns 7..10)
    assert_eq!(c.a_l.submatrix(2..5, 7..10), MatrixExpr::scalar(&r, 3, &pi2));
    assert_eq!(c.a_nl.submatrix(0..2, 5..7), MatrixExpr::scalar(&r, 2, &pi2));
    assert_eq!(c.a_l.determinant().unwrap(), p(&r, "-pi^6"));
}

#[test]
fn simplified_kind_a_example() {
    let s = spec("n=5,l=1,i0=1,kind=simplified-A");
    let i = build_simplified_chart(&s).unwrap();
    assert_eq!(i.ring().header(), "ring: v1 v2 v3 v4 v5 z3 z4 z5 pi");
    let r = i.ring().clone();
    let want: Vec<Polynomial> = ["v1 - 1", "v3*z4 - v4*z5", "v3*z3 - v5*z5", "v4*z3 - v5*z4", "z3*v3 + z4*v4 + z5*v5 - 2*pi"]
        .iter()
        .map(|s| p(&r, s))
        .collect();
    assert_eq!(i.generators(), &want[..]);
    assert_eq!(texts(&i)[1], "v3*z4 - v4*z5");
}

#[test]
fn simplified_kind_b_example() {
    let s = spec("n=5,l=1,i0=3,kind=simplified-B");
    let i = build_simplified_chart(&s).unwrap();
    assert_eq!(i.ring().header(), "ring: v1 v2 v3 v4 v5 u pi");
    let r = i.ring().clone();
    assert_eq!(i.generators(), &[p(&r, "v3 - 1"), p(&r, "u*(2*v3*v5 + v4^2) - 2*pi")][..]);
}

#[test]
fn kind_a_generators_collapse_without_z2() {
    for s in registry_simplified().into_iter().filter(|s| s.kind == ChartKind::SimplifiedA) {
        let i = build_simplified_chart(&s).unwrap();
        let r = i.ring().clone();
        let zero: HashMap<String, Polynomial> = s.second_block().map(|k| (z_name(k), Polynomial::zero(&r))).collect();
        let gens = i.generators();
        for g in &gens[1..gens.len() - 1] {
            assert!(g.substitute(&zero, &r).unwrap().is_zero());
        }
        assert_eq!(gens.last().unwrap().substitute(&zero, &r).unwrap(), p(&r, "-2*pi"));
    }
}

#[test]
fn unified_matches_kind_a_presentation() {
    let a = build_simplified_chart(&spec("n=6,l=1,i0=2,kind=simplified-A")).unwrap();
    let u = build_simplified_chart(&spec("n=6,l=1,i0=2,kind=unified")).unwrap();
    assert_eq!(a.to_text(), u.to_text());
    let u5 = build_simplified_chart(&spec("n=6,l=1,i0=5,kind=unified")).unwrap();
    assert_eq!(u5.generators()[0], p(u5.ring(), "v5 - 1"));
    assert_eq!(u5.generators().len(), a.generators().len());
}

#[test]
fn raw_chart_examples() {
    let s = spec("n=5,l=1,i0=1,kind=raw");
    let i = build_raw_chart(&s).unwrap();
    let r = i.ring().clone();
    assert_eq!(r.len(), 5 + 5 + 25 + 25 + 1);
    assert_eq!(&r.names()[..12], &["v1", "v2", "v3", "v4", "v5", "z3", "z4", "z5", "z1", "z2", "x11", "x12"]);
    let gens = i.generators();
    assert_eq!(gens[0], p(&r, "y11 - v1*z1 + pi"));
    let trace = p(&r, "z1*v1 + z2*v2 + z3*v3 + z4*v4 + z5*v5 - 2*pi");
    assert_eq!(gens[25], trace);
    assert_eq!(gens.last().unwrap(), &p(&r, "v1 - 1"));
    let zero: HashMap<String, Polynomial> = (1..=5).map(|k| (v_name(k), Polynomial::zero(&r))).collect();
    assert_eq!(trace.substitute(&zero, &r).unwrap(), p(&r, "-2*pi"));
}

#[test]
fn raw_generator_count() {
    for (n, l) in REGISTRY_RANKS {
        let s = ChartSpec::new(n, l, 1, ChartKind::Raw).unwrap();
        let (a, b) = (2 * l, n - 2 * l);
        let blocks = a * a + a * b + b * b;
        let want = (n * n + 1) + n * n + 2 * blocks + 1;
        assert_eq!(build_raw_chart(&s).unwrap().generators().len(), want, "n={n} l={l}");
    }
}

#[test]
fn raw_variant_differs_only_in_y4x4_block() {
    let s = spec("n=5,l=1,i0=2,kind=raw");
    let sq = build_raw_chart_with(&s, Y4X4Scalar::PiSquared).unwrap();
    let lin = build_raw_chart_with(&s, Y4X4Scalar::Pi).unwrap();
    let diff: Vec<usize> = (0..sq.generators().len())
        .filter(|&k| sq.generators()[k] != lin.generators()[k])
        .collect();
    assert_eq!(diff.len(), 3);
    let r = sq.ring().clone();
    for k in diff {
        let d = &sq.generators()[k] - &lin.generators()[k];
        assert_eq!(d, p(&r, "pi - pi^2"));
    }
}

#[test]
fn parametrization_example() {
    let s = spec("n=5,l=1,i0=1,kind=simplified-A");
    let par = build_parametrization(&s).unwrap();
    let r = par.ring.clone();
    let a = p(&r, "2*z3*z5 + z4^2");
    assert_eq!(par.a, a);
    let map = par.assignment(&s);
    assert_eq!(map["z2"], p(&r, "(2*z3*z5 + z4^2)/2*v1"));
    assert_eq!(map["z1"], p(&r, "-(2*z3*z5 + z4^2)/2*v2"));
    assert_eq!(map["y11"], &(&Polynomial::var(&r, "v1").unwrap() * &map["z1"]) - &p(&r, "pi"));
}

#[test]
fn parametrization_kills_the_defining_relation() {
    for s in registry_simplified() {
        let par = build_parametrization(&s).unwrap();
        let r = par.ring.clone();
        let pi = MatrixExpr::scalar(&r, s.n, &Polynomial::var(&r, "pi").unwrap());
        let rel = par.y.sub(&par.v.mul(&par.z().transpose()).unwrap()).unwrap().add(&pi).unwrap();
        assert!(rel.is_zero(), "{s}");
    }
}

#[test]
fn kind_b_a_is_two_pi_u() {
    let s = spec("n=5,l=1,i0=3,kind=simplified-B");
    let par = build_parametrization(&s).unwrap();
    let chart = build_simplified_chart(&s).unwrap();
    let r = chart.ring().clone();
    let diff = &par.a.embed(&r).unwrap() - &p(&r, "2*pi*u");
    assert!(chart.member(&diff).unwrap());
    assert!(!chart.member(&par.a.embed(&r).unwrap()).unwrap());
}

#[test]
fn parametrization_maps_raw_generators_into_chart() {
    for s in registry_simplified() {
        let raw = build_raw_chart(&s.with_kind(ChartKind::Raw)).unwrap();
        let chart = build_simplified_chart(&s).unwrap();
        let par = build_parametrization(&s).unwrap();
        let map = par.assignment(&s);
        for g in raw.generators() {
            let img = g.substitute(&map, chart.ring()).unwrap();
            assert!(chart.member(&img).unwrap(), "{s}: {g} maps to {img}");
        }
    }
}

#[test]
fn blowup_patch_example() {
    let s = spec("n=5,l=1,i0=1,kind=blowup-patch,j=3");
    let i = build_blowup_patch(&s).unwrap();
    let r = i.ring().clone();
    assert_eq!(r.header(), "ring: v1 v2 v3 v4 v5 z3 z4 z5 t3 t4 t5 pi");
    let want: Vec<Polynomial> = [
        "v1 - 1",
        "t3 - 1",
        "z4 - z3*t4",
        "z5 - z3*t5",
        "v3 - t5*v5",
        "v4 - t4*v5",
        "v5*z3*(2*t5 + t4^2) - 2*pi",
    ]
    .iter()
    .map(|x| p(&r, x))
    .collect();
    assert_eq!(i.generators(), &want[..]);
    let core = i.generators().last().unwrap();
    let no_pi = HashMap::from([("pi".to_string(), Polynomial::zero(&r))]);
    assert_eq!(core.substitute(&no_pi, &r).unwrap(), p(&r, "v5*z3*(2*t5 + t4^2)"));
}

#[test]
fn blowup_patches_differ_between_j() {
    let texts: Vec<String> = (3..=5)
        .map(|j| build_blowup_patch(&ChartSpec::new(5, 1, 1, ChartKind::BlowupPatch(j)).unwrap()).unwrap().to_text())
        .collect();
    assert_ne!(texts[0], texts[1]);
    assert_ne!(texts[1], texts[2]);
    assert_ne!(texts[0], texts[2]);
}

#[test]
fn rees_presentation_example() {
    let s = spec("n=5,l=1,i0=1,kind=rees-proj");
    let i = build_rees_presentation(&s).unwrap();
    let r = i.ring().clone();
    let want: Vec<Polynomial> = [
        "v1 - 1",
        "z3*v3 + z4*v4 + z5*v5 - 2*pi",
        "z3*t4 - z4*t3",
        "z3*t5 - z5*t3",
        "z4*t5 - z5*t4",
        "v3*t4 - v4*t5",
        "v3*t3 - v5*t5",
        "v4*t3 - v5*t4",
    ]
    .iter()
    .map(|x| p(&r, x))
    .collect();
    assert_eq!(i.generators(), &want[..]);
    let t_to_z: HashMap<String, Polynomial> = s.second_block().map(|k| (t_name(k), Polynomial::var(&r, &z_name(k)).unwrap())).collect();
    for g in &i.generators()[2..5] {
        assert!(g.substitute(&t_to_z, &r).unwrap().is_zero());
    }
}

#[test]
fn build_chart_dispatch_and_determinism() {
    for s in [
        "n=5,l=1,i0=1,kind=raw",
        "n=5,l=1,i0=1,kind=simplified-A",
        "n=5,l=1,i0=4,kind=simplified-B",
        "n=6,l=1,i0=5,kind=unified",
        "n=6,l=1,i0=2,kind=blowup-patch,j=5",
        "n=6,l=1,i0=2,kind=rees-proj",
    ] {
        let s = spec(s);
        assert_eq!(build_chart(&s).unwrap().to_text(), build_chart(&s).unwrap().to_text());
    }
    assert!(build_simplified_chart(&spec("n=5,l=1,i0=1,kind=raw")).is_err());
    assert!(build_blowup_patch(&spec("n=5,l=1,i0=1,kind=raw")).is_err());
}

#[test]
fn wedge_of_rank_one_vanishes() {
    for s in registry_simplified() {
        let ring = chart_ring(&s.with_kind(ChartKind::Raw)).unwrap();
        let m = raw_matrices(&ring, s.n);
        assert!(MatrixExpr::from_fn(&ring, s.n, s.n, |i, j| m.v.get(i, 0) * m.z.get(j, 0))
            .wedge2()
            .iter()
            .all(Polynomial::is_zero));
    }
}

#[test]
fn char_poly_examples() {
    let r = VarTable::with_pi(&["v1", "v2", "v3", "v4", "v5", "z1", "z2", "z3", "z4", "z5", "pi"]).unwrap();
    let zero = MatrixExpr::zeros(&r, 5, 5).char_poly().unwrap();
    assert!(zero[..5].iter().all(Polynomial::is_zero));
    assert!(zero[5].is_one());
    let pi = p(&r, "pi");
    let cp = MatrixExpr::scalar(&r, 5, &pi).char_poly().unwrap();
    assert_eq!(cp, MatrixExpr::poly_from_roots(&r, &[pi.clone(), pi.clone(), pi.clone(), pi.clone(), pi.clone()]));
    assert_eq!(cp[0], p(&r, "-pi^5"));
    let v = MatrixExpr::column(&r, (1..=5).map(|k| p(&r, &format!("v{k}"))).collect());
    let z = MatrixExpr::column(&r, (1..=5).map(|k| p(&r, &format!("z{k}"))).collect());
    let y = v.mul(&z.transpose()).unwrap().sub(&MatrixExpr::scalar(&r, 5, &pi)).unwrap();
    let cp = y.char_poly().unwrap();
    assert_eq!(cp[4], -p(&r, "z1*v1 + z2*v2 + z3*v3 + z4*v4 + z5*v5 - 5*pi"));
}

#[test]
fn minors_and_subsets() {
    assert_eq!(subsets(4, 2).len(), 6);
    assert_eq!(subsets(4, 2)[0], vec![0, 1]);
    assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    let r = VarTable::new(&["a"]).unwrap();
    let m = MatrixExpr::from_ints(&r, &[vec![1, 2, 3], vec![4, 5, 6]]);
    let two: Vec<Polynomial> = m.minors(2).unwrap();
    assert_eq!(two, m.wedge2());
    assert_eq!(two, vec![Polynomial::int(&r, -3), Polynomial::int(&r, -6), Polynomial::int(&r, -3)]);
}

fn small_ring() -> Ring {
    VarTable::with_pi(&["x", "y", "pi"]).unwrap()
}

fn arb_entry() -> impl Strategy<Value = Vec<(i64, u16, u16)>> {
    prop::collection::vec((-3i64..=3, 0u16..=2, 0u16..=1), 0..3)
}

fn to_matrix(r: &Ring, rows: usize, cols: usize, data: &[Vec<(i64, u16, u16)>]) -> MatrixExpr {
    MatrixExpr::from_fn(r, rows, cols, |i, j| {
        let mut acc = Polynomial::zero(r);
        for &(c, ex, ey) in &data[i * cols + j] {
            let m = &Polynomial::var(r, "x").unwrap().pow(ex as u32) * &Polynomial::var(r, "y").unwrap().pow(ey as u32);
            acc = &acc + &m.scale(&crate::poly::integer(c));
        }
        acc
    })
}

fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<(i64, u16, u16)>>> {
    prop::collection::vec(arb_entry(), rows * cols)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transpose_reverses_products(a in arb_matrix(3, 2), b in arb_matrix(2, 4)) {
        let r = small_ring();
        let (a, b) = (to_matrix(&r, 3, 2, &a), to_matrix(&r, 2, 4, &b));
        prop_assert_eq!(a.mul(&b).unwrap().transpose(), b.transpose().mul(&a.transpose()).unwrap());
        prop_assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn products_are_associative_and_distribute(a in arb_matrix(2, 3), b in arb_matrix(3, 2), c in arb_matrix(2, 2), d in arb_matrix(3, 2)) {
        let r = small_ring();
        let (a, b, c, d) = (to_matrix(&r, 2, 3, &a), to_matrix(&r, 3, 2, &b), to_matrix(&r, 2, 2, &c), to_matrix(&r, 3, 2, &d));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&d).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&d).unwrap()).unwrap());
    }

    #[test]
    fn block_products_multiply_blockwise(a in arb_matrix(2, 2), b in arb_matrix(2, 1), c in arb_matrix(1, 2), d in arb_matrix(1, 1)) {
        let r = small_ring();
        let (a, b, c, d) = (to_matrix(&r, 2, 2, &a), to_matrix(&r, 2, 1, &b), to_matrix(&r, 1, 2, &c), to_matrix(&r, 1, 1, &d));
        let m = MatrixExpr::blocks(&r, &[vec![Some(&a), Some(&b)], vec![Some(&c), Some(&d)]]).unwrap();
        let sq = m.mul(&m).unwrap();
        let top_left = a.mul(&a).unwrap().add(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(sq.submatrix(0..2, 0..2), top_left);
        prop_assert_eq!(&m.submatrix(0..2, 2..3), &b);
        let t = MatrixExpr::blocks(&r, &[vec![Some(&a.transpose()), Some(&c.transpose())], vec![Some(&b.transpose()), Some(&d.transpose())]]).unwrap();
        prop_assert_eq!(m.transpose(), t);
    }

    #[test]
    fn wedge_and_determinant_are_multiplicative(a in arb_matrix(3, 3), b in arb_matrix(3, 3)) {
        let r = small_ring();
        let (a, b) = (to_matrix(&r, 3, 3, &a), to_matrix(&r, 3, 3, &b));
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), &a.determinant().unwrap() * &b.determinant().unwrap());
        // ∧² is a functor: ∧²(AB) = ∧²A · ∧²B on the row-major pair basis
        let wa = MatrixExpr::from_fn(&r, 3, 3, |i, j| a.wedge2()[i * 3 + j].clone());
        let wb = MatrixExpr::from_fn(&r, 3, 3, |i, j| b.wedge2()[i * 3 + j].clone());
        let wab = MatrixExpr::from_fn(&r, 3, 3, |i, j| ab.wedge2()[i * 3 + j].clone());
        prop_assert_eq!(wab, wa.mul(&wb).unwrap());
    }

    #[test]
    fn char_poly_matches_determinant(a in arb_matrix(3, 3)) {
        let r = VarTable::with_pi(&["x", "y", "t", "pi"]).unwrap();
        let a = to_matrix(&small_ring(), 3, 3, &a).embed(&r).unwrap();
        let t = Polynomial::var(&r, "t").unwrap();
        let det = MatrixExpr::scalar(&r, 3, &t).sub(&a).unwrap().determinant().unwrap();
        let cp = a.char_poly().unwrap();
        let mut sum = Polynomial::zero(&r);
        for (k, c) in cp.iter().enumerate() {
            sum = &sum + &(c * &t.pow(k as u32));
        }
        prop_assert_eq!(sum, det);
    }
}
