//! Dense univariate Laurent polynomials in `t` with integer coefficients.
//! This is the value type of discrete functions, where the sizes are large
//! and a sparse map would be wasteful.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{Mono, MultiLaurent, Var};

/// `sum_i coeffs[i] * t^(low + i)`; no zero coefficient at either end.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentT {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: e, coeffs: vec![c] }
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_monomial(e, &BigInt::from(c));
        }
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn nonzero_terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn add_monomial(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.is_empty() {
            self.low = e;
            self.coeffs.push(c.clone());
            return;
        }
        if e < self.low {
            let pad = (self.low - e) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = e;
        }
        let i = (e - self.low) as usize;
        if i >= self.coeffs.len() {
            self.coeffs.resize(i + 1, BigInt::zero());
        }
        self.coeffs[i] += c;
        self.trim();
    }

    /// `self += c * t^shift * other`.
    pub fn add_scaled(&mut self, other: &LaurentT, c: &BigInt, shift: i64) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.shift(shift).scale(c);
            return;
        }
        let lo = self.low.min(other.low + shift);
        let hi = self.high().max(other.high() + shift);
        if lo < self.low {
            let pad = (self.low - lo) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = lo;
        }
        let need = (hi - self.low + 1) as usize;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        let off = (other.low + shift - self.low) as usize;
        for (i, a) in other.coeffs.iter().enumerate() {
            if !a.is_zero() {
                self.coeffs[off + i] += a * c;
            }
        }
        self.trim();
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `t -> 1/t`.
    pub fn reflect(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { low: -self.high(), coeffs }
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.reflect()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |a, c| a.gcd(c))
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exact quotient in `Z[t, 1/t]`, `None` if `d` does not divide.
    pub fn div_exact(&self, d: &LaurentT) -> Option<LaurentT> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dl = d.lead().expect("nonzero");
        let dn = d.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return None;
        }
        let qn = rem.len() - dn + 1;
        let mut q = vec![BigInt::zero(); qn];
        for k in (0..qn).rev() {
            let top = &rem[k + dn - 1];
            if top.is_zero() {
                continue;
            }
            let (qq, r) = top.div_rem(dl);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &qq * dc;
                }
            }
            q[k] = qq;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentT::from_coeffs(self.low - d.low, q))
    }

    pub fn to_multi(&self) -> MultiLaurent {
        MultiLaurent::from_terms(
            self.nonzero_terms().map(|(e, c)| (Mono::var(Var::T, e as i32), BigRational::from_integer(c.clone()))),
        )
    }

    /// Convert a polynomial in `t` alone with integer coefficients.
    pub fn from_multi(p: &MultiLaurent) -> Result<Self> {
        p.only_uses(&[Var::T])?;
        let mut out = Self::zero();
        for (m, c) in p.terms() {
            if !c.is_integer() {
                return Err(Error::InexactDivision { num: c.to_string(), den: "1".into() });
            }
            out.add_monomial(m.exp(Var::T) as i64, c.numer());
        }
        Ok(out)
    }

    /// `p(t, t^(2n))` for an integral `p` in `t, M`.
    pub fn eval_tm(p: &MultiLaurent, n: i64) -> Result<Self> {
        p.only_uses(&[Var::T, Var::M])?;
        let mut out = Self::zero();
        for (m, c) in p.terms() {
            if !c.is_integer() {
                return Err(Error::InexactDivision { num: c.to_string(), den: "1".into() });
            }
            out.add_monomial(m.exp(Var::T) as i64 + 2 * n * m.exp(Var::M) as i64, c.numer());
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_multi(), f)
    }
}

impl fmt::Debug for LaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentT({self})")
    }
}

impl Add for &LaurentT {
    type Output = LaurentT;
    fn add(self, o: &LaurentT) -> LaurentT {
        let mut r = self.clone();
        r.add_scaled(o, &BigInt::one(), 0);
        r
    }
}

impl Sub for &LaurentT {
    type Output = LaurentT;
    fn sub(self, o: &LaurentT) -> LaurentT {
        let mut r = self.clone();
        r.add_scaled(o, &-BigInt::one(), 0);
        r
    }
}

impl Neg for &LaurentT {
    type Output = LaurentT;
    fn neg(self) -> LaurentT {
        LaurentT { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &LaurentT {
    type Output = LaurentT;
    fn mul(self, o: &LaurentT) -> LaurentT {
        if self.is_zero() || o.is_zero() {
            return LaurentT::zero();
        }
        let (a, b) = if self.coeffs.iter().filter(|c| !c.is_zero()).count()
            <= o.coeffs.iter().filter(|c| !c.is_zero()).count()
        {
            (self, o)
        } else {
            (o, self)
        };
        let mut out = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        LaurentT::from_coeffs(a.low + b.low, out)
    }
}

impl Add for LaurentT {
    type Output = LaurentT;
    fn add(self, o: LaurentT) -> LaurentT {
        &self + &o
    }
}

impl Sub for LaurentT {
    type Output = LaurentT;
    fn sub(self, o: LaurentT) -> LaurentT {
        &self - &o
    }
}

impl Mul for LaurentT {
    type Output = LaurentT;
    fn mul(self, o: LaurentT) -> LaurentT {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = LaurentT::from_pairs([(-2, 1), (2, 1)]);
        let b = LaurentT::from_pairs([(-2, -1), (2, 1)]);
        assert_eq!(&a * &b, LaurentT::from_pairs([(-4, -1), (4, 1)]));
        assert!((&a - &a).is_zero());
        assert_eq!((&a + &b), LaurentT::from_pairs([(2, 2)]));
        assert_eq!(a.reflect(), a);
        assert!(!b.is_palindromic());
    }

    #[test]
    fn exact_division() {
        let a = LaurentT::from_pairs([(-4, -1), (4, 1)]);
        let b = LaurentT::from_pairs([(-2, -1), (2, 1)]);
        assert_eq!(a.div_exact(&b).unwrap(), LaurentT::from_pairs([(-2, 1), (2, 1)]));
        assert!(a.div_exact(&LaurentT::from_pairs([(0, 2), (1, 1)])).is_none());
        let c = LaurentT::from_pairs([(0, 3), (1, 6)]);
        assert!(c.div_exact(&LaurentT::from_pairs([(0, 2)])).is_none());
    }

    #[test]
    fn evaluation() {
        let p: MultiLaurent = "t^-2*M^2 - t^2*M^-2".parse().unwrap();
        assert_eq!(LaurentT::eval_tm(&p, 2).unwrap().to_multi(), p.eval_m_at_qn(2));
        assert_eq!(LaurentT::from_multi(&"t^3 - 2".parse().unwrap()).unwrap().coeff(3), BigInt::one());
    }
}
