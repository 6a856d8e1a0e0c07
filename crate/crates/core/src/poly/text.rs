//! Canonical text form: `2*v3*z4^2 - 1/2*pi + 1`.

use std::fmt;

use num::{BigInt, One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{Coeff, Polynomial};
use super::ring::Ring;
use crate::error::{Error, Result};

fn write_monomial(out: &mut String, ring: &Ring, m: &Monomial) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(ring.name(i));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

fn write_coeff(out: &mut String, c: &Coeff) {
    out.push_str(&c.numer().to_string());
    if !c.denom().is_one() {
        out.push('/');
        out.push_str(&c.denom().to_string());
    }
}

impl Polynomial {
    /// Text form with terms listed in decreasing `order`.
    pub fn to_string_in(&self, order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms_in(order).iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let a = c.abs();
            if m.is_one() {
                write_coeff(&mut out, &a);
            } else {
                if !a.is_one() {
                    write_coeff(&mut out, &a);
                    out.push('*');
                }
                write_monomial(&mut out, self.ring(), m);
            }
        }
        out
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Polynomial> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            ring,
            tokens,
            pos: 0,
        };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in(MonomialOrder::GRevLex))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().map_err(|_| Error::Parse {
                pos: start,
                msg: "bad integer".into(),
            })?;
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        let pos = self
            .tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(usize::MAX);
        Error::Parse {
            pos,
            msg: msg.to_string(),
        }
    }

    fn peek_sym(&self, c: char) -> bool {
        matches!(self.tokens.get(self.pos), Some((_, Tok::Sym(s))) if *s == c)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.peek_sym('-') {
            negate = true;
            self.pos += 1;
        } else if self.peek_sym('+') {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.peek_sym('+') {
                self.pos += 1;
                acc = &acc + &self.term()?;
            } else if self.peek_sym('-') {
                self.pos += 1;
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            if self.peek_sym('*') {
                self.pos += 1;
                acc = &acc * &self.power()?;
            } else if self.peek_sym('/') {
                self.pos += 1;
                match self.tokens.get(self.pos) {
                    Some((_, Tok::Num(n))) if !n.is_zero() => {
                        let inv = Coeff::new(BigInt::one(), n.clone());
                        self.pos += 1;
                        acc = acc.scale(&inv);
                    }
                    _ => return Err(self.error("expected nonzero integer divisor")),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek_sym('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some((_, Tok::Num(n))) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.error("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.error("expected exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let Some((_, tok)) = self.tokens.get(self.pos).cloned() else {
            return Err(self.error("unexpected end of input"));
        };
        match tok {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, Coeff::from_integer(n)))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                Polynomial::var(self.ring, &name)
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.peek_sym(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Sym(_) => Err(self.error("unexpected symbol")),
        }
    }
}
