//! Expression reader for factored and fractional inputs.
//!
//! A superset of the polynomial grammar with parentheses, `/`, integer
//! powers of any subexpression and implicit multiplication by
//! juxtaposition, so that products such as
//! `-M^14 (-1 + M^8)(t^4 + M^8 t^4 - M^4 (1 + t^8))` can be written as
//! they are displayed. The value is a [`RationalFunction`].

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::laurent::{MultiLaurent, Var};
use crate::ratfun::RationalFunction;

pub fn parse_expr(src: &str) -> Result<RationalFunction> {
    let s: Vec<(usize, char)> = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = ExprParser { s: &s, i: 0, len: src.len() };
    let v = p.sum()?;
    if p.i < s.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(v)
}

/// Parse an expression that must denote a Laurent polynomial.
pub fn parse_laurent(src: &str) -> Result<MultiLaurent> {
    parse_expr(src)?.into_laurent()
}

struct ExprParser<'a> {
    s: &'a [(usize, char)],
    i: usize,
    len: usize,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.i).map(|&(_, c)| c)
    }

    fn err(&self, msg: &str) -> Error {
        let pos = self.s.get(self.i).map_or(self.len, |&(p, _)| p);
        let found = self.peek().map_or("end of input".to_string(), |c| format!("'{c}'"));
        Error::Parse { pos, msg: format!("{msg}, found {found}") }
    }

    fn sum(&mut self) -> Result<RationalFunction> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.i += 1;
                -self.product()?
            }
            Some('+') => {
                self.i += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.i += 1;
                    acc = &acc + &self.product()?;
                }
                Some('-') => {
                    self.i += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<RationalFunction> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.i += 1;
                    acc = &acc * &self.power()?;
                }
                Some('/') => {
                    self.i += 1;
                    let d = self.power()?;
                    acc = acc.checked_div(&d)?;
                }
                Some(c) if c == '(' || c.is_ascii_digit() || Var::from_symbol(c).is_some() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.i += 1;
        let braced = self.peek() == Some('{');
        if braced {
            self.i += 1;
        }
        let neg = self.peek() == Some('-');
        if neg {
            self.i += 1;
        }
        let e = self.digits()?;
        if braced {
            if self.peek() != Some('}') {
                return Err(self.err("expected '}'"));
            }
            self.i += 1;
        }
        let e: i64 = e.try_into().map_err(|_| self.err("exponent out of range"))?;
        let mut out = RationalFunction::one();
        for _ in 0..e {
            out = &out * &base;
        }
        if neg {
            out = out.recip()?;
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some('(') => {
                self.i += 1;
                let v = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(MultiLaurent::constant(BigRational::from_integer(n)).into())
            }
            Some(c) => match Var::from_symbol(c) {
                Some(v) => {
                    self.i += 1;
                    Ok(MultiLaurent::var(v).into())
                }
                None => Err(self.err("expected a number, variable or '('")),
            },
            None => Err(self.err("expected an operand")),
        }
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

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn products_and_powers() {
        assert_eq!(parse_laurent("(M^2 - M^-2)(M^2 + M^-2)").unwrap(), p("M^4 - M^-4"));
        assert_eq!(parse_laurent("M^4 t^8 (1 + t^4)^2").unwrap(), p("M^4*t^8 + 2*M^4*t^12 + M^4*t^16"));
        assert_eq!(parse_laurent("t^{-2} M^{2}").unwrap(), p("t^-2*M^2"));
        assert_eq!(parse_laurent("-2 M^-4 + 3").unwrap(), p("-2*M^-4 + 3"));
    }

    #[test]
    fn fractions() {
        assert_eq!(parse_laurent("(M^2 - t^2)/(M - t)").unwrap(), p("M + t"));
        let r = parse_expr("1/(M - t)").unwrap();
        assert!(!r.is_laurent());
        assert_eq!(parse_laurent("(M t)^-2").unwrap(), p("M^-2*t^-2"));
        assert!(parse_laurent("1/(1 + M)").is_err());
        assert!(parse_expr("1/(M - M)").is_err());
    }

    #[test]
    fn agrees_with_strict_grammar() {
        let s = "-1*t^2*M^-2 + t^-2*M^2 - 7/3*x*L";
        assert_eq!(parse_laurent(s).unwrap(), p(s));
    }
}
