//! The quantum torus: sums `sum_k a_k(t, M) L^k` with `L M = t^2 M L`.
//!
//! Elements are kept in normal order (coefficients to the left of the
//! powers of `L`), so the product is
//! `a(M) L^k * b(M) L^l = a(M) b(t^(2k) M) L^(k + l)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::jones::DiscreteFunction;
use crate::laurent::{Mono, MultiLaurent, Var};
use crate::ratfun::RationalFunction;
use crate::unilaurent::LaurentT;

/// Coefficient rings usable in a [`TorusElement`].
pub trait TorusCoeff: Clone + PartialEq + fmt::Display + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `M -> t^(2k) M`.
    fn qshift(&self, k: i32) -> Self;
    /// `M -> 1/M`.
    fn invert_m(&self) -> Self;
    fn parse(s: &str) -> Result<Self>;
}

impl TorusCoeff for MultiLaurent {
    fn zero() -> Self {
        MultiLaurent::zero()
    }
    fn one() -> Self {
        MultiLaurent::one()
    }
    fn is_zero(&self) -> bool {
        MultiLaurent::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn qshift(&self, k: i32) -> Self {
        MultiLaurent::qshift(self, k)
    }
    fn invert_m(&self) -> Self {
        MultiLaurent::invert_m(self)
    }
    fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl TorusCoeff for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn qshift(&self, k: i32) -> Self {
        RationalFunction::qshift(self, k)
    }
    fn invert_m(&self) -> Self {
        RationalFunction::invert_m(self)
    }
    fn parse(s: &str) -> Result<Self> {
        crate::expr::parse_expr(s)
    }
}

#[derive(Clone, PartialEq)]
pub struct TorusElement<C: TorusCoeff> {
    coeffs: BTreeMap<i32, C>,
}

/// Elements with Laurent polynomial coefficients.
pub type Operator = TorusElement<MultiLaurent>;
/// Elements of the localized torus, with rational-function coefficients.
pub type RationalOperator = TorusElement<RationalFunction>;

impl<C: TorusCoeff> Default for TorusElement<C> {
    fn default() -> Self {
        Self { coeffs: BTreeMap::new() }
    }
}

impl<C: TorusCoeff> TorusElement<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, C::one())
    }

    /// `c L^k`.
    pub fn term(k: i32, c: C) -> Self {
        let mut e = Self::zero();
        e.add_term(k, c);
        e
    }

    pub fn l_pow(k: i32) -> Self {
        Self::term(k, C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self::term(0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (k, c) in it {
            e.add_term(k, c);
        }
        e
    }

    pub fn add_term(&mut self, k: i32, c: C) {
        if c.is_zero() {
            return;
        }
        let next = match self.coeffs.remove(&k) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !next.is_zero() {
            self.coeffs.insert(k, next);
        }
    }

    pub fn coeff(&self, k: i32) -> C {
        self.coeffs.get(&k).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest and largest power of `L` present.
    pub fn l_range(&self) -> Option<(i32, i32)> {
        Some((*self.coeffs.keys().next()?, *self.coeffs.keys().next_back()?))
    }

    /// Left multiplication by a coefficient.
    pub fn scale_left(&self, c: &C) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(k, a)| (*k, c.mul(a))))
    }

    /// `sigma(a(M) L^k) = a(1/M) L^(-k)`, extended additively.
    pub fn sigma(&self) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(k, a)| (-k, a.invert_m())))
    }
}

impl<C: TorusCoeff> Add for &TorusElement<C> {
    type Output = TorusElement<C>;
    fn add(self, o: &TorusElement<C>) -> TorusElement<C> {
        let mut r = self.clone();
        for (k, c) in &o.coeffs {
            r.add_term(*k, c.clone());
        }
        r
    }
}

impl<C: TorusCoeff> Sub for &TorusElement<C> {
    type Output = TorusElement<C>;
    fn sub(self, o: &TorusElement<C>) -> TorusElement<C> {
        self + &(-o)
    }
}

impl<C: TorusCoeff> Neg for &TorusElement<C> {
    type Output = TorusElement<C>;
    fn neg(self) -> TorusElement<C> {
        TorusElement { coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }
}

impl<C: TorusCoeff> Mul for &TorusElement<C> {
    type Output = TorusElement<C>;
    // `L`-exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: &TorusElement<C>) -> TorusElement<C> {
        let mut r = TorusElement::zero();
        for (k, a) in &self.coeffs {
            for (l, b) in &o.coeffs {
                r.add_term(k + l, a.mul(&b.qshift(*k)));
            }
        }
        r
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<C: TorusCoeff> $tr for TorusElement<C> {
            type Output = TorusElement<C>;
            fn $f(self, o: TorusElement<C>) -> TorusElement<C> {
                (&self).$f(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Operator {
    /// Read a normal-ordered commutative expression in `t, M, L`: every
    /// monomial `t^a M^b L^k` becomes `t^a M^b` times `L^k` on the right.
    pub fn from_normal_ordered(p: &MultiLaurent) -> Result<Self> {
        p.only_uses(&[Var::T, Var::M, Var::L])?;
        Ok(Self::from_terms(p.coeffs_in(Var::L)))
    }

    /// The coefficient `M` as an operator (multiplication by `t^(2n)`).
    pub fn m() -> Self {
        Self::scalar(MultiLaurent::var(Var::M))
    }

    pub fn to_rational(&self) -> RationalOperator {
        TorusElement::from_terms(self.coeffs.iter().map(|(k, c)| (*k, RationalFunction::from(c.clone()))))
    }

    /// `t = -1`: a commutative Laurent polynomial in `M` and `L`.
    pub fn epsilon(&self) -> MultiLaurent {
        let mut out = MultiLaurent::zero();
        for (k, a) in &self.coeffs {
            out += a.eval_t(-1).mul_mono(Mono::var(Var::L, *k));
        }
        out
    }

    /// `(u f)(n) = sum_k a_k(t, t^(2n)) f(n + k)`.
    pub fn act(&self, f: &DiscreteFunction, n: i64) -> Result<LaurentT> {
        let mut out = LaurentT::zero();
        for (k, a) in &self.coeffs {
            let v = f.value(n + *k as i64)?;
            let c = LaurentT::eval_tm(a, n)?;
            out = &out + &(&c * &v);
        }
        Ok(out)
    }
}

impl RationalOperator {
    /// Back to Laurent coefficients; fails on the first genuine denominator.
    pub fn to_laurent(&self) -> Result<Operator> {
        let mut out = Operator::zero();
        for (k, c) in &self.coeffs {
            match c.to_laurent() {
                Some(p) => out.add_term(*k, p.clone()),
                None => return Err(Error::NonLaurent(c.den().to_string())),
            }
        }
        Ok(out)
    }
}

/// `act_on_function(u, f, n)`.
pub fn act_on_function(u: &Operator, f: &DiscreteFunction, n: i64) -> Result<LaurentT> {
    u.act(f, n)
}

/// The commutative involution `M, L -> 1/M, 1/L`.
pub fn commutative_sigma(p: &MultiLaurent) -> MultiLaurent {
    p.invert_var(Var::M).invert_var(Var::L)
}

impl<C: TorusCoeff> fmt::Display for TorusElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*L")?,
                _ => write!(f, "({c})*L^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: TorusCoeff> fmt::Debug for TorusElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorusElement({self})")
    }
}

/// Serialized as a list of `(L-exponent, coefficient text)` pairs.
impl<C: TorusCoeff> Serialize for TorusElement<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i32, String)> = self.coeffs.iter().map(|(k, c)| (*k, c.to_string())).collect();
        pairs.serialize(s)
    }
}

impl<'de, C: TorusCoeff> Deserialize<'de> for TorusElement<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i32, String)> = Vec::deserialize(d)?;
        let mut out = Self::zero();
        for (k, s) in pairs {
            out.add_term(k, C::parse(&s).map_err(serde::de::Error::custom)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiLaurent {
        s.parse().unwrap()
    }

    fn op(s: &str) -> Operator {
        Operator::from_normal_ordered(&p(s)).unwrap()
    }

    #[test]
    fn commutation_relation() {
        let l = Operator::l_pow(1);
        let m = Operator::m();
        assert_eq!(&l * &m, op("t^2*M*L"));
        let v = op("M^3 + t*L^-1");
        assert_eq!(&Operator::one() * &v, v);
    }

    #[test]
    fn monomial_product() {
        assert_eq!(&op("M^2*L") * &op("M^3*L^-1"), op("t^6*M^5"));
    }

    #[test]
    fn sigma_on_monomial() {
        assert_eq!(op("M^2*L").sigma(), op("M^-2*L^-1"));
        let u = op("t*M^2*L + M^-1 - t^3*L^-2");
        assert_eq!(u.sigma().sigma(), u);
    }

    #[test]
    fn epsilon_examples() {
        assert!(Operator::one().epsilon().is_one());
        assert_eq!(op("t^2*M*L + t^3").epsilon(), p("M*L - 1"));
    }

    #[test]
    fn serialization() {
        let u = op("t*M^2*L + M^-1 - t^3*L^-2");
        let s = serde_json::to_string(&u).unwrap();
        assert_eq!(s, r#"[[-2,"-1*t^3"],[0,"M^-1"],[1,"t*M^2"]]"#);
        let back: Operator = serde_json::from_str(&s).unwrap();
        assert_eq!(back, u);
    }
}
