//! The polynomial text format.
//!
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' int)?
//! var    := 't' | 'M' | 'L' | 'x'
//! coeff  := int ('/' uint)?
//! int    := '-'? digits
//! ```
//!
//! Whitespace is ignored. Output is canonical: terms in descending graded
//! lex order, factors in `t, M, x, L` order, unit coefficients omitted. A
//! leading term with coefficient `-1` is written `-1*...` so that the
//! output stays inside the grammar. On input a bare leading sign before a
//! factor (`-t`) is also accepted.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{Mono, MultiLaurent, Var};

pub fn format_poly(p: &MultiLaurent) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Mono, &BigRational)> = p.terms().collect();
    terms.sort_by(|a, b| b.0.cmp_grlex(a.0));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let c = if i == 0 {
            c.clone()
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            c.abs()
        };
        write_term(&mut out, m, &c);
    }
    out
}

fn write_term(out: &mut String, m: &Mono, c: &BigRational) {
    if m.is_one() {
        write_coeff(out, c);
        return;
    }
    if !c.is_one() {
        write_coeff(out, c);
        out.push('*');
    }
    let mut first = true;
    for v in Var::ALL {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push(v.symbol());
        if e != 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

fn write_coeff(out: &mut String, c: &BigRational) {
    if c.is_integer() {
        let _ = write!(out, "{}", c.numer());
    } else {
        let _ = write!(out, "{}/{}", c.numer(), c.denom());
    }
}

pub fn parse_poly(src: &str) -> Result<MultiLaurent> {
    let s: Vec<(usize, char)> = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { s: &s, i: 0, len: src.len() };
    let poly = p.poly()?;
    if p.i < s.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(poly)
}

struct Parser<'a> {
    s: &'a [(usize, char)],
    i: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.i).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.s.get(self.i).map_or(self.len, |&(p, _)| p)
    }

    fn err(&self, msg: &str) -> Error {
        let found = self.peek().map_or("end of input".to_string(), |c| format!("'{c}'"));
        Error::Parse { pos: self.pos(), msg: format!("{msg}, found {found}") }
    }

    fn poly(&mut self) -> Result<MultiLaurent> {
        if self.peek().is_none() {
            return Err(self.err("expected a term"));
        }
        let mut acc = MultiLaurent::zero();
        let mut negate = false;
        if matches!(self.peek(), Some('+')) {
            self.i += 1;
        } else if matches!(self.peek(), Some('-')) && !self.next_is_digit() {
            self.i += 1;
            negate = true;
        }
        loop {
            let (m, c) = self.term()?;
            acc.add_term(m, if negate { -c } else { c });
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => return Ok(acc),
            }
            self.i += 1;
        }
    }

    fn next_is_digit(&self) -> bool {
        self.s.get(self.i + 1).is_some_and(|&(_, c)| c.is_ascii_digit())
    }

    fn term(&mut self) -> Result<(Mono, BigRational)> {
        let mut coeff = BigRational::one();
        let mut mono = Mono::ONE;
        let starts_coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => true,
            Some('-') => self.next_is_digit(),
            _ => false,
        };
        if starts_coeff {
            let num = self.int()?;
            let den = if self.peek() == Some('/') {
                self.i += 1;
                let d = self.digits()?;
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            coeff = BigRational::new(num, den);
            while self.peek() == Some('*') {
                self.i += 1;
                mono = mono * self.factor()?;
            }
        } else {
            mono = self.factor()?;
            while self.peek() == Some('*') {
                self.i += 1;
                mono = mono * self.factor()?;
            }
        }
        Ok((mono, coeff))
    }

    fn factor(&mut self) -> Result<Mono> {
        let v = match self.peek().and_then(Var::from_symbol) {
            Some(v) => v,
            None => return Err(self.err("expected a variable t, M, x or L")),
        };
        self.i += 1;
        let mut e = 1i32;
        if self.peek() == Some('^') {
            self.i += 1;
            let n = self.int()?;
            e = i32::try_from(n).map_err(|_| self.err("exponent out of range"))?;
        }
        Ok(Mono::var(v, e))
    }

    fn int(&mut self) -> Result<BigInt> {
        let neg = if self.peek() == Some('-') {
            self.i += 1;
            true
        } else {
            false
        };
        let d = self.digits()?;
        Ok(if neg { -d } else { d })
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected digits"));
        }
        let text: String = self.s[start..self.i].iter().map(|&(_, c)| c).collect();
        Ok(text.parse().expect("ascii digits"))
    }
}
