//! Text form of polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | 'x' i '_' j ['^' e] | 'z' k ['^' e]
//! ```
//!
//! Whitespace is insignificant, but two factors must be joined by `*`.
//! `x{j}_{i}` denotes the same variable as `x{i}_{j}`. Output of
//! [`Polynomial`]'s `Display` is accepted back unchanged.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::monomial::Monomial;
use super::poly::{Polynomial, Term};
use super::ring::{Ring, VarId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(VarId),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        let start = j;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        (start, j)
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'/' => out.push((start, Tok::Slash)),
            b'0'..=b'9' => {
                let (s, e) = digits(i);
                out.push((start, Tok::Num(text[s..e].parse().unwrap())));
                i = e;
                continue;
            }
            b'x' => {
                let (s1, e1) = digits(i + 1);
                if s1 == e1 || e1 >= bytes.len() || bytes[e1] != b'_' {
                    return Err(syntax(start, "expected variable of the form x<i>_<j>"));
                }
                let (s2, e2) = digits(e1 + 1);
                if s2 == e2 {
                    return Err(syntax(start, "expected variable of the form x<i>_<j>"));
                }
                let row: usize = text[s1..e1]
                    .parse()
                    .map_err(|_| syntax(start, "index too large"))?;
                let col: usize = text[s2..e2]
                    .parse()
                    .map_err(|_| syntax(start, "index too large"))?;
                if row == 0 || col == 0 {
                    return Err(Error::BadIndex(format!(
                        "x{row}_{col} at position {start}: indices start at 1"
                    )));
                }
                out.push((start, Tok::Var(VarId::entry(row, col))));
                i = e2;
                continue;
            }
            b'z' => {
                let (s, e) = digits(i + 1);
                if s == e {
                    return Err(syntax(start, "expected variable of the form z<k>"));
                }
                let k: usize = text[s..e]
                    .parse()
                    .map_err(|_| syntax(start, "index too large"))?;
                if k == 0 {
                    return Err(Error::BadIndex(format!("z0 at position {start}")));
                }
                out.push((start, Tok::Var(VarId::Aux(k))));
                i = e;
                continue;
            }
            other => {
                return Err(syntax(
                    start,
                    format!("unexpected character `{}`", other as char),
                ))
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn int(&mut self, what: &str) -> Result<BigInt> {
        let at = self.here();
        match self.next() {
            Some(Tok::Num(v)) => Ok(v),
            _ => Err(syntax(at, format!("expected {what}"))),
        }
    }

    fn exponent(&mut self) -> Result<u16> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        let at = self.here();
        let e = self.int("exponent")?;
        u16::try_from(e).map_err(|_| syntax(at, "exponent does not fit in 16 bits"))
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let field = self.ring.field();
        let nvars = self.ring.nvars();
        let mut coeff = field.from_i64(if negative { -1 } else { 1 });
        let mut mono = Monomial::one(nvars);
        loop {
            let at = self.here();
            match self.next() {
                Some(Tok::Num(num)) => {
                    let den = if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        self.int("denominator")?
                    } else {
                        BigInt::one()
                    };
                    let c = field
                        .from_ratio(num, den)
                        .map_err(|e| syntax(at, e.to_string()))?;
                    coeff = field.mul(&coeff, &c);
                }
                Some(Tok::Var(v)) => {
                    let idx = self.ring.var_index(v).map_err(|_| {
                        Error::BadIndex(format!(
                            "{v} at position {at} is outside the ring (n = {}, aux = {})",
                            self.ring.n(),
                            self.ring.aux_count()
                        ))
                    })?;
                    let e = self.exponent()?;
                    mono = mono.checked_mul(&Monomial::variable(nvars, idx, e))?;
                }
                _ => return Err(syntax(at, "expected a number or a variable")),
            }
            match self.peek() {
                Some(Tok::Star) => self.pos += 1,
                Some(Tok::Plus) | Some(Tok::Minus) | None => break,
                Some(_) => return Err(syntax(self.here(), "expected `*`, `+`, `-` or end")),
            }
        }
        Ok(Term { coeff, mono })
    }
}

/// Parses `text` into a polynomial of `ring`.
pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        end: text.len(),
    };
    if p.peek().is_none() {
        return Err(syntax(0, "empty input"));
    }
    let mut terms = Vec::new();
    let mut negative = match p.peek() {
        Some(Tok::Minus) => {
            p.pos += 1;
            true
        }
        Some(Tok::Plus) => {
            p.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        terms.push(p.term(negative)?);
        match p.next() {
            None => break,
            Some(Tok::Plus) => negative = false,
            Some(Tok::Minus) => negative = true,
            Some(_) => unreachable!("term stops only at a sign or end"),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Canonical text of a polynomial (same as its `Display`).
pub fn format(f: &Polynomial) -> String {
    f.to_string()
}

impl Polynomial {
    pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
        parse(text, ring)
    }
}
