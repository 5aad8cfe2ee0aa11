//! Sparse multivariate Laurent polynomials over the rationals.
//!
//! The variable universe is fixed to `t, M, x, L`; a polynomial only
//! "uses" the variables with a nonzero exponent somewhere, so embedding
//! between variable sets is free.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    #[serde(rename = "t")]
    T,
    #[serde(rename = "M")]
    M,
    #[serde(rename = "x")]
    X,
    #[serde(rename = "L")]
    L,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::T, Var::M, Var::X, Var::L];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Var::T => 't',
            Var::M => 'M',
            Var::X => 'x',
            Var::L => 'L',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            't' => Some(Var::T),
            'M' => Some(Var::M),
            'x' => Some(Var::X),
            'L' => Some(Var::L),
            _ => None,
        }
    }
}

/// Exponent vector indexed by [`Var::index`]. The derived `Ord` is
/// lexicographic with `t > M > x > L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono(pub [i32; 4]);

impl Mono {
    pub const ONE: Mono = Mono([0; 4]);

    pub fn var(v: Var, e: i32) -> Mono {
        let mut m = Mono::ONE;
        m.0[v.index()] = e;
        m
    }

    pub fn tm(t: i32, m: i32) -> Mono {
        Mono([t, m, 0, 0])
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn with(mut self, v: Var, e: i32) -> Mono {
        self.0[v.index()] = e;
        self
    }

    pub fn inv(self) -> Mono {
        Mono::ONE / self
    }

    pub fn pow(self, k: i32) -> Mono {
        Mono(self.0.map(|e| e * k))
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn min(self, o: Mono) -> Mono {
        let mut r = self;
        for i in 0..4 {
            r.0[i] = r.0[i].min(o.0[i]);
        }
        r
    }

    pub fn max(self, o: Mono) -> Mono {
        let mut r = self;
        for i in 0..4 {
            r.0[i] = r.0[i].max(o.0[i]);
        }
        r
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Componentwise `self <= other`, i.e. divisibility of ordinary monomials.
    pub fn divides(&self, other: &Mono) -> bool {
        (0..4).all(|i| self.0[i] <= other.0[i])
    }

    pub fn coprime(&self, other: &Mono) -> bool {
        (0..4).all(|i| self.0[i] == 0 || other.0[i] == 0)
    }

    /// Graded lexicographic comparison; ties in total degree fall back to
    /// lex with `t > M > x > L`.
    pub fn cmp_grlex(&self, o: &Mono) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiLaurent {
    terms: BTreeMap<Mono, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MultiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, Mono::ONE)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(BigRational::one(), Mono::var(v, 1))
    }

    pub fn monomial(c: BigRational, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// `c * t^a * M^b`.
    pub fn tm(c: i64, a: i32, b: i32) -> Self {
        Self::monomial(rat(c), Mono::tm(a, b))
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, BigRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigRational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Mono, BigRational> {
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::ONE).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, m: &Mono) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(&Mono, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) != 0)
    }

    /// Variables occurring with a nonzero exponent, in `t, M, x, L` order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.uses(v)).collect()
    }

    pub fn only_uses(&self, allowed: &[Var]) -> Result<()> {
        for v in self.variables() {
            if !allowed.contains(&v) {
                return Err(Error::UnexpectedVariable(v.symbol()));
            }
        }
        Ok(())
    }

    pub fn min_exps(&self) -> Mono {
        let mut it = self.terms.keys();
        match it.next() {
            None => Mono::ONE,
            Some(&first) => it.fold(first, |a, &b| a.min(b)),
        }
    }

    pub fn max_exps(&self) -> Mono {
        let mut it = self.terms.keys();
        match it.next() {
            None => Mono::ONE,
            Some(&first) => it.fold(first, |a, &b| a.max(b)),
        }
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.max_exps().exp(v)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Mono::is_nonneg)
    }

    /// Leading term under graded lex (the default order for normalization
    /// and printing).
    pub fn lead_grlex(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().max_by(|a, b| a.0.cmp_grlex(b.0))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Apply an exponent map; colliding images are summed.
    pub fn map_exps<F: Fn(Mono) -> Mono>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(f(*m), c.clone());
        }
        out
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return match self.as_monomial() {
                Some((m, c)) => {
                    let e = i32::try_from(-k).map_err(|_| Error::NotAUnit(self.to_string()))?;
                    let ci = c.recip();
                    let mut cc = BigRational::one();
                    for _ in 0..e {
                        cc *= &ci;
                    }
                    Ok(Self::monomial(cc, m.pow(-e)))
                }
                None => Err(Error::NotAUnit(self.to_string())),
            };
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Substitute `M -> t^(2k) M`, i.e. `t^a M^b -> t^(a + 2kb) M^b`.
    pub fn qshift(&self, k: i32) -> Self {
        if k == 0 {
            return self.clone();
        }
        self.map_exps(|m| m.with(Var::T, m.exp(Var::T) + 2 * k * m.exp(Var::M)))
    }

    pub fn invert_var(&self, v: Var) -> Self {
        self.map_exps(|m| m.with(v, -m.exp(v)))
    }

    /// `M -> 1/M`.
    pub fn invert_m(&self) -> Self {
        self.invert_var(Var::M)
    }

    /// Substitute `v = s` for a sign `s = +1 | -1`.
    pub fn eval_sign(&self, v: Var, s: i8) -> Self {
        assert!(s == 1 || s == -1, "eval_sign needs +1 or -1");
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let c = if s == -1 && e.rem_euclid(2) == 1 { -c } else { c.clone() };
            out.add_term(m.with(v, 0), c);
        }
        out
    }

    pub fn eval_t(&self, s: i8) -> Self {
        self.eval_sign(Var::T, s)
    }

    /// Substitute `M = t^(2n)`.
    pub fn eval_m_at_qn(&self, n: i64) -> Self {
        let n = i32::try_from(n).expect("color out of range");
        self.map_exps(|m| m.with(Var::T, m.exp(Var::T) + 2 * n * m.exp(Var::M)).with(Var::M, 0))
    }

    /// Returns `(q, f)` with `q = f * self`, `q` a polynomial and `f` the
    /// monomial shifting every variable's minimum exponent to zero.
    pub fn normalize_to_poly(&self) -> (Self, Mono) {
        if self.is_zero() {
            return (Self::zero(), Mono::ONE);
        }
        let f = self.min_exps().inv();
        (self.mul_mono(f), f)
    }

    /// Rational content `c` and primitive part `p` with integer, coprime
    /// coefficients and positive grlex-leading coefficient; `self = c * p`.
    pub fn primitive(&self) -> (BigRational, Self) {
        if self.is_zero() {
            return (BigRational::zero(), Self::zero());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.lead_grlex().is_some_and(|(_, c)| c.is_negative()) {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Primitive polynomial with no monomial factor and positive leading
    /// coefficient; the canonical associate in the Laurent ring.
    pub fn canonical_associate(&self) -> Self {
        self.normalize_to_poly().0.primitive().1
    }

    /// All integer coefficients?
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// `(p, d)` with `p = d * self` integral and `d` the lcm of denominators.
    pub fn clear_denominators(&self) -> (Self, BigInt) {
        let d = self.terms.values().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
        (self.scale(&BigRational::from_integer(d.clone())), d)
    }

    /// Split by the exponent of `v`: `self = sum_e c_e v^e`.
    pub fn coeffs_in(&self, v: Var) -> BTreeMap<i32, Self> {
        let mut out: BTreeMap<i32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(v)).or_default().terms.insert(m.with(v, 0), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &BTreeMap<i32, Self>) -> Self {
        let mut out = Self::zero();
        for (&e, c) in coeffs {
            for (m, a) in &c.terms {
                out.add_term(m.with(v, m.exp(v) + e), a.clone());
            }
        }
        out
    }

    /// Exact quotient in the Laurent ring, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = d.as_monomial() {
            return Some(self.mul_mono(m.inv()).scale(&c.recip()));
        }
        let (a, fa) = self.normalize_to_poly();
        let (b, fb) = d.normalize_to_poly();
        let q = poly_div_exact(&a, &b)?;
        Some(q.mul_mono(fb / fa))
    }

    pub fn is_m_symmetric(&self) -> bool {
        *self == self.invert_m()
    }

    /// Solve `k + k(1/M) = self`: half the `M^0` part plus every term of
    /// positive `M`-degree.
    pub fn symmetric_split(&self) -> Result<Self> {
        if !self.is_m_symmetric() {
            return Err(Error::NotSymmetric(self.to_string()));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut k = Self::zero();
        for (m, c) in &self.terms {
            match m.exp(Var::M).cmp(&0) {
                Ordering::Greater => k.add_term(*m, c.clone()),
                Ordering::Equal => k.add_term(*m, c * &half),
                Ordering::Less => {}
            }
        }
        Ok(k)
    }
}

/// Exact division of ordinary polynomials using lex leading terms.
fn poly_div_exact(a: &MultiLaurent, b: &MultiLaurent) -> Option<MultiLaurent> {
    let (lb, cb) = b.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))?;
    let mut rem = a.clone();
    let mut q = MultiLaurent::zero();
    while let Some((&lr, cr)) = rem.terms.iter().next_back() {
        if !lb.divides(&lr) {
            return None;
        }
        let m = lr / lb;
        let c = cr / &cb;
        for (bm, bc) in &b.terms {
            rem.add_term(bm.mul(m), -(bc * &c));
        }
        q.add_term(m, c);
    }
    Some(q)
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::grammar::format_poly(self))
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiLaurent({self})")
    }
}

impl FromStr for MultiLaurent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::grammar::parse_poly(s)
    }
}

impl Serialize for MultiLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MultiLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for MultiLaurent {
    fn from(c: i64) -> Self {
        Self::int(c)
    }
}

impl From<Var> for MultiLaurent {
    fn from(v: Var) -> Self {
        Self::var(v)
    }
}

impl<'a> Add<&'a MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, o: &'a MultiLaurent) -> MultiLaurent {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl<'a> Sub<&'a MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, o: &'a MultiLaurent) -> MultiLaurent {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl<'a> Mul<&'a MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, o: &'a MultiLaurent) -> MultiLaurent {
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        let mut r = MultiLaurent::zero();
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                r.add_term(m1.mul(*m2), c1 * c2);
            }
        }
        r
    }
}

impl AddAssign<&MultiLaurent> for MultiLaurent {
    fn add_assign(&mut self, o: &MultiLaurent) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiLaurent> for MultiLaurent {
    fn sub_assign(&mut self, o: &MultiLaurent) {
        for (m, c) in &o.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl MulAssign<&MultiLaurent> for MultiLaurent {
    fn mul_assign(&mut self, o: &MultiLaurent) {
        *self = &*self * o;
    }
}

impl Neg for &MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        MultiLaurent { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Neg for MultiLaurent {
    type Output = MultiLaurent;
    fn neg(mut self) -> MultiLaurent {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiLaurent> for MultiLaurent {
            type Output = MultiLaurent;
            fn $f(self, o: MultiLaurent) -> MultiLaurent {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a MultiLaurent> for MultiLaurent {
            type Output = MultiLaurent;
            fn $f(self, o: &'a MultiLaurent) -> MultiLaurent {
                (&self).$f(o)
            }
        }
        impl $tr<MultiLaurent> for &MultiLaurent {
            type Output = MultiLaurent;
            fn $f(self, o: MultiLaurent) -> MultiLaurent {
                self.$f(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<MultiLaurent> for MultiLaurent {
    fn add_assign(&mut self, o: MultiLaurent) {
        *self += &o;
    }
}

impl SubAssign<MultiLaurent> for MultiLaurent {
    fn sub_assign(&mut self, o: MultiLaurent) {
        *self -= &o;
    }
}

/// Monomials multiply by adding exponent vectors.
impl std::ops::Mul for Mono {
    type Output = Mono;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(mut self, o: Mono) -> Mono {
        for i in 0..4 {
            self.0[i] += o.0[i];
        }
        self
    }
}

impl std::ops::Div for Mono {
    type Output = Mono;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(mut self, o: Mono) -> Mono {
        for i in 0..4 {
            self.0[i] -= o.0[i];
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_monomials_cancel() {
        assert!((p("M^2") * p("M^-2")).is_one());
        assert_eq!(p("t - M") + MultiLaurent::zero(), p("t - M"));
    }

    #[test]
    fn pow_of_non_unit_fails() {
        assert!(matches!(p("1 + M").pow(-1), Err(Error::NotAUnit(_))));
        assert_eq!(p("2*M^3").pow(-2).unwrap(), p("1/4*M^-6"));
        assert_eq!(p("1 + M").pow(3).unwrap(), p("1 + 3*M + 3*M^2 + M^3"));
    }

    #[test]
    fn qshift_substitutes() {
        assert_eq!(p("M").qshift(1), p("t^2*M"));
        let a1 = p("t^-2*M^2 - t^2*M^-2");
        assert_eq!(a1.qshift(0), a1);
        assert_eq!(a1.qshift(1), p("t^2*M^2 - t^-2*M^-2"));
    }

    #[test]
    fn invert_and_evaluate() {
        assert_eq!(p("M^2 + M^-2").invert_m(), p("M^2 + M^-2"));
        let a1 = p("t^-2*M^2 - t^2*M^-2");
        assert_eq!(a1.eval_t(-1), p("M^2 - M^-2"));
        assert!(p("1").eval_t(-1).is_one());
        assert_eq!(p("t - t^3*M").eval_t(-1), p("-1 + M"));
        assert_eq!(p("M").eval_m_at_qn(1), p("t^2"));
        assert_eq!(p("M^4 + M^-4").eval_m_at_qn(0), p("2"));
        assert_eq!(a1.eval_m_at_qn(2), p("t^6 - t^-6"));
    }

    #[test]
    fn normalize_examples() {
        let (q, f) = p("t^-2*M^2 - t^2*M^-2").normalize_to_poly();
        assert_eq!(q, p("M^4 - t^4"));
        assert_eq!(f, Mono::tm(2, 2));
        assert_eq!(p("1").normalize_to_poly(), (p("1"), Mono::ONE));
    }

    #[test]
    fn exact_division() {
        let a = p("M^4 - t^4");
        let b = p("M - t");
        assert_eq!(a.div_exact(&b).unwrap(), p("M^3 + M^2*t + M*t^2 + t^3"));
        assert!(a.div_exact(&p("M - 2*t")).is_none());
        let al = p("t^-2*M^2 - t^2*M^-2");
        assert_eq!(al.div_exact(&p("M^2 - t^2")).unwrap(), p("t^-2 + M^-2"));
    }

    #[test]
    fn symmetric_split_examples() {
        assert_eq!(p("M^2 + M^-2").symmetric_split().unwrap(), p("M^2"));
        assert_eq!(p("2*t^4 + 2*t^6").symmetric_split().unwrap(), p("t^4 + t^6"));
        assert!(p("M").symmetric_split().is_err());
    }

    #[test]
    fn primitive_normalization() {
        let (c, q) = p("-4*t^2 + 6*M").primitive();
        assert_eq!(c, rat(-2));
        assert_eq!(q, p("2*t^2 - 3*M"));
    }
}
