use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::ring::{same_ring, Ring};
use crate::error::{Error, Result};

pub type Coeff = BigRational;

pub fn rational(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted by decreasing grevlex order and never carry a zero
/// coefficient, so structural equality is polynomial equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub(crate) fn sort_desc(terms: &mut [(Monomial, Coeff)], order: MonomialOrder) {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.len()), c)],
        }
    }

    pub fn int(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, integer(c))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::int(ring, 1)
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring.require(name)?;
        Ok(Self::var_at(ring, i))
    }

    pub fn var_at(ring: &Ring, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::variable(ring.len(), i), Coeff::one())],
        }
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        debug_assert_eq!(m.len(), ring.len());
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ring.len());
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_desc(&mut terms, MonomialOrder::GRevLex);
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds from terms already sorted in decreasing grevlex order with
    /// distinct monomials and nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Leading term under `order`.
    pub fn leading(&self, order: MonomialOrder) -> Option<&(Monomial, Coeff)> {
        match order {
            MonomialOrder::GRevLex => self.terms.first(),
            _ => self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0)),
        }
    }

    /// Terms sorted decreasingly under `order`.
    pub fn terms_in(&self, order: MonomialOrder) -> Vec<(Monomial, Coeff)> {
        let mut t = self.terms.clone();
        if order != MonomialOrder::GRevLex {
            sort_desc(&mut t, order);
        }
        t
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(i) > 0)
    }

    /// Indices of variables occurring in some term.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.ring.len()).filter(|&i| self.contains_var(i)).collect()
    }

    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(i)).max().unwrap_or(0)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check(other)?;
        Ok(match op {
            ArithOp::Add => self.merge(other, false),
            ArithOp::Sub => self.merge(other, true),
            ArithOp::Mul => self.product(other),
        })
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Add)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Mul)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = MonomialOrder::GRevLex;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| {
            let c = if negate { -c } else { c.clone() };
            (m.clone(), c)
        }));
        Polynomial::from_sorted(&self.ring, out)
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut acc: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_desc(&mut terms, MonomialOrder::GRevLex);
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial::from_sorted(
            &self.ring,
            self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        )
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // multiplication by a monomial preserves any monomial order
        Polynomial::from_sorted(
            &self.ring,
            self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading(order) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Normalizes the sign and scale so the grevlex-leading coefficient is positive
    /// and all coefficients are coprime integers. Useful for display.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den_lcm / c.denom());
            num_gcd = num::integer::gcd(num_gcd, v);
        }
        let mut factor = BigRational::new(den_lcm, num_gcd.abs());
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| {
                let e = m.exponent(i);
                let mut exps = m.exponents().to_vec();
                exps[i] -= 1;
                (Monomial::from_exponents(exps), c * integer(e as i64))
            });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Ring homomorphism into `target`: each variable with an entry in
    /// `assignment` (keyed by source variable index) maps to that polynomial,
    /// every other variable maps to the variable of the same name in `target`.
    pub fn substitute_indexed(
        &self,
        assignment: &HashMap<usize, Polynomial>,
        target: &Ring,
    ) -> Result<Polynomial> {
        let nsrc = self.ring.len();
        let mut images: Vec<Option<Polynomial>> = Vec::with_capacity(nsrc);
        let mut needed = vec![false; nsrc];
        for (m, _) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    needed[i] = true;
                }
            }
        }
        for (i, used) in needed.iter().enumerate() {
            if !used {
                images.push(None);
                continue;
            }
            let img = match assignment.get(&i) {
                Some(p) => {
                    if !same_ring(p.ring(), target) {
                        return Err(Error::RingMismatch);
                    }
                    p.clone()
                }
                None => Polynomial::var(target, self.ring.name(i))?,
            };
            images.push(Some(img));
        }
        let mut powers: HashMap<(usize, u16), Polynomial> = HashMap::new();
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].as_ref().unwrap().pow(e as u32));
                term = term.product(p);
            }
            for (tm, tc) in term.terms {
                *acc.entry(tm).or_insert_with(Coeff::zero) += tc;
            }
        }
        Ok(Polynomial::from_terms(target, acc))
    }

    /// Like [`Polynomial::substitute_indexed`] with the assignment keyed by name.
    pub fn substitute(
        &self,
        assignment: &HashMap<String, Polynomial>,
        target: &Ring,
    ) -> Result<Polynomial> {
        let mut by_index = HashMap::with_capacity(assignment.len());
        for (name, p) in assignment {
            let i = self.ring.require(name)?;
            by_index.insert(i, p.clone());
        }
        self.substitute_indexed(&by_index, target)
    }

    /// Reinterpret in another ring by variable name.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            let mut p = self.clone();
            p.ring = target.clone();
            return Ok(p);
        }
        let mut map = Vec::with_capacity(self.ring.len());
        for (i, name) in self.ring.names().iter().enumerate() {
            let used = self.contains_var(i);
            map.push(match target.index_of(name) {
                Some(j) => Some(j),
                None if used => return Err(Error::UnknownVariable(name.clone())),
                None => None,
            });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u16; target.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    exps[map[i].unwrap()] = e;
                }
            }
            (Monomial::from_exponents(exps), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Exact quotient `self / divisor`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (q, r) = super::division::divide(self, std::slice::from_ref(divisor), MonomialOrder::GRevLex)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible(divisor.to_string()));
        }
        Ok(q.into_iter().next().unwrap())
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator forms panic on a ring mismatch; use `arith` for a checked result.
macro_rules! binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.arith(rhs, $op).expect("ring mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_sorted(
            &self.ring,
            self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        )
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
