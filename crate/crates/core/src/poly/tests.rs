use std::cmp::Ordering;
use std::collections::HashMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::error::Error;

fn ring3() -> Ring {
    VarTable::new(&["x", "y", "z"]).unwrap()
}

fn p(ring: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(ring, s).unwrap()
}

#[test]
fn arith_examples() {
    let r = VarTable::with_pi(&["x", "y", "pi"]).unwrap();
    assert_eq!(p(&r, "x+y") + p(&r, "x-y"), p(&r, "2*x"));
    assert_eq!(p(&r, "x+pi") * p(&r, "x-pi"), p(&r, "x^2-pi^2"));
    assert!((p(&r, "x+y") * Polynomial::zero(&r)).is_zero());
}

#[test]
fn ring_mismatch_is_an_error() {
    let a = ring3();
    let b = VarTable::new(&["x", "y"]).unwrap();
    let e = Polynomial::var(&a, "x")
        .unwrap()
        .arith(&Polynomial::var(&b, "x").unwrap(), ArithOp::Add);
    assert_eq!(e, Err(Error::RingMismatch));
    assert_eq!(e.unwrap_err().to_string(), "ring mismatch");
}

#[test]
fn reduce_examples() {
    let r = ring3();
    let rem = reduce(&p(&r, "x^2*y"), &[p(&r, "x*y-1")], MonomialOrder::GRevLex).unwrap();
    assert_eq!(rem, p(&r, "x"));
    let g = p(&r, "x^3 - 2*x*y + z");
    for order in [MonomialOrder::GRevLex, MonomialOrder::Lex, MonomialOrder::BlockElim(1)] {
        assert!(reduce(&g, std::slice::from_ref(&g), order).unwrap().is_zero());
    }
    // no leading monomial of {x^2 - y, x*y - z} (lex) divides y^3 or z^2
    let f = p(&r, "y^3 - z^2");
    let rem = reduce(&f, &[p(&r, "x^2-y"), p(&r, "x*y-z")], MonomialOrder::Lex).unwrap();
    assert_eq!(rem, f);
}

#[test]
fn substitute_examples() {
    let r = VarTable::with_pi(&["v1", "v2", "z1", "z2", "pi"]).unwrap();
    let zero = Polynomial::zero(&r);
    let map: HashMap<String, Polynomial> =
        [("z1".to_string(), zero.clone()), ("z2".to_string(), zero)].into();
    assert!(p(&r, "v1*z1 + v2*z2").substitute(&map, &r).unwrap().is_zero());

    // y11 -> v1*z1 - pi from Y := V Z^t - pi I
    let raw = VarTable::with_pi(&["y11", "pi"]).unwrap();
    let map: HashMap<String, Polynomial> = [("y11".to_string(), p(&r, "v1*z1 - pi"))].into();
    let img = p(&raw, "y11").substitute(&map, &r).unwrap();
    assert_eq!(img, p(&r, "v1*z1 - pi"));

    let missing: HashMap<String, Polynomial> = [("q".to_string(), p(&r, "1"))].into();
    assert!(matches!(
        p(&r, "v1").substitute(&missing, &r),
        Err(Error::UnknownVariable(_))
    ));
}

#[test]
fn substitution_composes() {
    let r = ring3();
    let f = p(&r, "x^2*y - 3*z + x*z");
    let s1: HashMap<String, Polynomial> = [
        ("x".to_string(), p(&r, "y + z")),
        ("z".to_string(), p(&r, "x*y")),
    ]
    .into();
    let s2: HashMap<String, Polynomial> = [("y".to_string(), p(&r, "x - 1"))].into();
    let step = f.substitute(&s1, &r).unwrap().substitute(&s2, &r).unwrap();
    let composite: HashMap<String, Polynomial> = [
        ("x".to_string(), p(&r, "y + z").substitute(&s2, &r).unwrap()),
        ("y".to_string(), p(&r, "x - 1")),
        ("z".to_string(), p(&r, "x*y").substitute(&s2, &r).unwrap()),
    ]
    .into();
    assert_eq!(step, f.substitute(&composite, &r).unwrap());
}

#[test]
fn canonical_text() {
    let r = VarTable::with_pi(&["v3", "v4", "z4", "z5", "pi"]).unwrap();
    let f = p(&r, "v3*z4 - v4*z5");
    assert_eq!(f.to_string(), "v3*z4 - v4*z5");
    let g = p(&r, "1/2*v3^2 - 2*pi + 3/4");
    assert_eq!(g.to_string(), "1/2*v3^2 - 2*pi + 3/4");
    assert_eq!(Polynomial::zero(&r).to_string(), "0");
    assert_eq!(p(&r, "-(pi)").to_string(), "-pi");
}

#[test]
fn parse_errors() {
    let r = ring3();
    assert!(Polynomial::parse(&r, "x +").is_err());
    assert!(Polynomial::parse(&r, "x $ y").is_err());
    assert!(Polynomial::parse(&r, "w").is_err());
    assert!(Polynomial::parse(&r, "x/0").is_err());
}

#[test]
fn derivative_and_exact_division() {
    let r = ring3();
    let f = p(&r, "x^3*y + 2*x*z");
    assert_eq!(f.derivative(0), p(&r, "3*x^2*y + 2*z"));
    let q = (p(&r, "x*y - z") * p(&r, "x + z^2")).div_exact(&p(&r, "x+z^2")).unwrap();
    assert_eq!(q, p(&r, "x*y - z"));
    assert!(p(&r, "x + 1").div_exact(&p(&r, "y")).is_err());
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring) -> Polynomial {
    let nterms = rng.gen_range(0..5);
    let terms = (0..nterms).map(|_| {
        let exps: Vec<u16> = (0..ring.len()).map(|_| rng.gen_range(0..3)).collect();
        (
            Monomial::from_exponents(exps),
            rational(rng.gen_range(-5..=5), rng.gen_range(1..4)),
        )
    });
    Polynomial::from_terms(ring, terms)
}

#[test]
fn ring_axioms_randomized() {
    let r = ring3();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let a = random_poly(&mut rng, &r);
        let b = random_poly(&mut rng, &r);
        let c = random_poly(&mut rng, &r);
        assert_eq!(&a + &b, &b + &a);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!((&a + &b) + &c, &a + (&b + &c));
        assert_eq!((&a * &b) * &c, &a * (&b * &c));
        assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        assert!((&a - &a).is_zero());
        assert!(a.terms().iter().all(|(_, c)| !num::Zero::is_zero(c)));
    }
}

fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u16..4, n).prop_map(Monomial::from_exponents)
}

fn arb_poly(ring: Ring) -> impl Strategy<Value = Polynomial> {
    let n = ring.len();
    proptest::collection::vec((arb_monomial(n), -4i64..=4, 1i64..3), 0..5).prop_map(move |ts| {
        Polynomial::from_terms(&ring, ts.into_iter().map(|(m, a, b)| (m, rational(a, b))))
    })
}

const ORDERS: [MonomialOrder; 3] = [
    MonomialOrder::GRevLex,
    MonomialOrder::Lex,
    MonomialOrder::BlockElim(1),
];

proptest! {
    #[test]
    fn order_is_multiplicative_total_and_well_founded(
        a in arb_monomial(3), b in arb_monomial(3), w in arb_monomial(3)
    ) {
        let one = Monomial::one(3);
        for o in ORDERS {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab == Ordering::Less {
                prop_assert_eq!(o.cmp(&a.mul(&w), &b.mul(&w)), Ordering::Less);
            }
            prop_assert_ne!(o.cmp(&a, &one), Ordering::Less);
        }
    }

    #[test]
    fn reduce_is_idempotent_and_division_identity_holds(
        f in arb_poly(ring3()),
        gs in proptest::collection::vec(arb_poly(ring3()), 1..4),
    ) {
        let gs: Vec<Polynomial> = gs.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gs.is_empty());
        for o in ORDERS {
            let (qs, r) = divide(&f, &gs, o).unwrap();
            let mut recombined = r.clone();
            for (q, g) in qs.iter().zip(&gs) {
                recombined = &recombined + &(q * g);
            }
            prop_assert_eq!(&recombined, &f);
            for (m, _) in r.terms() {
                prop_assert!(gs.iter().all(|g| !g.leading(o).unwrap().0.divides(m)));
            }
            prop_assert_eq!(reduce(&r, &gs, o).unwrap(), r);
        }
    }

    #[test]
    fn print_parse_round_trip(f in arb_poly(ring3())) {
        let back = Polynomial::parse(&ring3(), &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }
}
