//! Quotients of Laurent polynomials in lowest terms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gcd::poly_gcd;
use crate::laurent::{MultiLaurent, Var};

/// `num / den` with `den` a polynomial without monomial factor, primitive,
/// with positive graded-lex leading coefficient, and `gcd(num, den) = 1`.
/// Every value has exactly one such representation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRational", into = "RawRational")]
pub struct RationalFunction {
    num: MultiLaurent,
    den: MultiLaurent,
}

#[derive(Serialize, Deserialize)]
struct RawRational {
    num: MultiLaurent,
    den: MultiLaurent,
}

impl TryFrom<RawRational> for RationalFunction {
    type Error = Error;
    fn try_from(r: RawRational) -> Result<Self> {
        RationalFunction::new(r.num, r.den)
    }
}

impl From<RationalFunction> for RawRational {
    fn from(r: RationalFunction) -> Self {
        RawRational { num: r.num, den: r.den }
    }
}

impl RationalFunction {
    pub fn new(num: MultiLaurent, den: MultiLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((m, c)) = den.as_monomial() {
            return Ok(Self { num: num.mul_mono(m.inv()).scale(&c.recip()), den: MultiLaurent::one() });
        }
        // den = c * m^-1 * d with d canonical
        let (q, m) = den.normalize_to_poly();
        let (c, d) = q.primitive();
        let num = num.mul_mono(m).scale(&c.recip());
        let g = poly_gcd(&num, &d);
        if g.is_one() {
            return Ok(Self { num, den: d });
        }
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = d.div_exact(&g).expect("gcd divides denominator");
        let (q, m) = den.normalize_to_poly();
        let (c, d) = q.primitive();
        Ok(Self { num: num.mul_mono(m).scale(&c.recip()), den: d })
    }

    /// Skip the gcd when the caller knows `num` and `den` share no factor;
    /// `den` is still brought to canonical form.
    pub(crate) fn from_coprime(num: MultiLaurent, den: MultiLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (q, m) = den.normalize_to_poly();
        let (c, d) = q.primitive();
        Ok(Self { num: num.mul_mono(m).scale(&c.recip()), den: d })
    }

    pub fn zero() -> Self {
        Self { num: MultiLaurent::zero(), den: MultiLaurent::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(MultiLaurent::one())
    }

    pub fn from_laurent(p: MultiLaurent) -> Self {
        Self { num: p, den: MultiLaurent::one() }
    }

    pub fn num(&self) -> &MultiLaurent {
        &self.num
    }

    pub fn den(&self) -> &MultiLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_laurent(&self) -> Option<&MultiLaurent> {
        self.is_laurent().then_some(&self.num)
    }

    /// The Laurent polynomial, or an error naming the leftover denominator.
    pub fn into_laurent(self) -> Result<MultiLaurent> {
        if self.is_laurent() {
            Ok(self.num)
        } else {
            Err(Error::NonLaurent(self.den.to_string()))
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    fn map_both<F: Fn(&MultiLaurent) -> MultiLaurent>(&self, f: F) -> Result<Self> {
        Self::new(f(&self.num), f(&self.den))
    }

    pub fn qshift(&self, k: i32) -> Self {
        self.map_both(|p| p.qshift(k)).expect("substitution keeps the denominator nonzero")
    }

    pub fn invert_m(&self) -> Self {
        self.map_both(MultiLaurent::invert_m).expect("substitution keeps the denominator nonzero")
    }

    /// Substitute `v = s` for `s = +1 | -1`; fails if the denominator vanishes.
    pub fn eval_sign(&self, v: Var, s: i8) -> Result<Self> {
        self.map_both(|p| p.eval_sign(v, s))
    }

    pub fn eval_m_at_qn(&self, n: i64) -> Result<Self> {
        self.map_both(|p| p.eval_m_at_qn(n))
    }

    pub fn only_uses(&self, allowed: &[Var]) -> Result<()> {
        self.num.only_uses(allowed)?;
        self.den.only_uses(allowed)
    }
}

impl From<MultiLaurent> for RationalFunction {
    fn from(p: MultiLaurent) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::new(&self.num + &o.num, self.den.clone()).expect("nonzero den");
        }
        RationalFunction::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).expect("nonzero den")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero den")
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &RationalFunction) -> RationalFunction {
        self.checked_div(o).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, o: RationalFunction) -> RationalFunction {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, o: &'a RationalFunction) -> RationalFunction {
                (&self).$f(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiLaurent {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let r = rf("M^2 - t^2", "-2*M^2 + 2*M*t");
        assert_eq!(r, RationalFunction::from(p("-1/2 - 1/2*t*M^-1")));
        let r = rf("M^2 - t^2", "M^3*t - M^2*t^2");
        assert!(r.den().is_one() || r.den().min_exps().is_one());
        assert_eq!(r, rf("M + t", "M^2*t"));
        assert!(rf("t", "t^3").is_laurent());
    }

    #[test]
    fn field_operations() {
        let a = rf("1", "M - t");
        let b = rf("1", "M + t");
        let s = &a + &b;
        assert_eq!(s, rf("2*M", "M^2 - t^2"));
        assert_eq!(&(&a * &b) * &rf("M^2 - t^2", "1"), RationalFunction::one());
        assert_eq!(&s - &s, RationalFunction::zero());
        assert!(RationalFunction::new(p("1"), p("0")).is_err());
    }

    #[test]
    fn substitutions() {
        let a = rf("1", "t^-2*M^2 - t^2*M^-2");
        assert_eq!(a.qshift(1), rf("1", "t^2*M^2 - t^-2*M^-2"));
        assert_eq!(a.invert_m().invert_m(), a);
        assert!(rf("1", "t - 1").eval_sign(Var::T, 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = rf("t^2 + M", "M^2 - t^2");
        let s = serde_json::to_string(&a).unwrap();
        let b: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
