use std::cmp::Ordering;

/// Dense exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Box<[u16]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: 1,
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: self.degree + other.degree,
        }
    }

    /// True if `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, if exact.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps: exps.into_boxed_slice(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::from_exponents(exps)
    }

    /// No variable occurs in both.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit set of the variables with positive exponent (variables past 127 fold).
    pub fn support_mask(&self) -> u128 {
        let mut mask = 0u128;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1u128 << (i % 128);
            }
        }
        mask
    }

    /// Exponents at the given positions, in that order.
    pub fn project(&self, positions: &[usize]) -> Monomial {
        Monomial::from_exponents(positions.iter().map(|&i| self.exps[i]).collect())
    }
}

/// Monomial orders; ties are broken by variable position in the ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    GRevLex,
    /// Lexicographic with the first variable largest.
    Lex,
    /// The first `k` variables are eliminated: compare them by grevlex first,
    /// then the remaining variables by grevlex.
    BlockElim(usize),
}

fn grevlex(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b.iter()).rev() {
        if x != y {
            // smaller exponent in the last differing variable is larger
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn partial_degree(a: &[u16]) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::GRevLex => grevlex(&a.exps, &b.exps, a.degree, b.degree),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::BlockElim(k) => {
                let k = k.min(a.exps.len());
                let (a1, a2) = a.exps.split_at(k);
                let (b1, b2) = b.exps.split_at(k);
                let (da1, db1) = (partial_degree(a1), partial_degree(b1));
                match grevlex(a1, b1, da1, db1) {
                    Ordering::Equal => grevlex(a2, b2, a.degree - da1, b.degree - db1),
                    o => o,
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::GRevLex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::BlockElim(k) => format!("block-elimination({k})"),
        }
    }
}
