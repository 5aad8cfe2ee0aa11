//! Colored Jones values of the figure-eight knot and the bracket
//! `<Q>(n) = [n] sum_{k<n} Q(t, t^(2n), t^(4k)) prod_{l=1..k} (t^(4n) + t^(-4n) - t^(4l) - t^(-4l))`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{MultiLaurent, Var};
use crate::torus::Operator;
use crate::unilaurent::LaurentT;

/// A summand `Q(t, M, x)` of a bracket.
#[derive(Clone, Debug, PartialEq)]
pub struct Summand(MultiLaurent);

impl Summand {
    pub fn new(q: MultiLaurent) -> Result<Self> {
        q.only_uses(&[Var::T, Var::M, Var::X])?;
        if !q.is_integral() {
            return Err(Error::InexactDivision { num: q.to_string(), den: "1".into() });
        }
        Ok(Self(q))
    }

    pub fn one() -> Self {
        Self(MultiLaurent::one())
    }

    pub fn x() -> Self {
        Self(MultiLaurent::var(Var::X))
    }

    pub fn poly(&self) -> &MultiLaurent {
        &self.0
    }
}

/// `[n] = (t^(2n) - t^(-2n)) / (t^2 - t^(-2))`.
pub fn quantum_integer(n: i64) -> LaurentT {
    if n == 0 {
        return LaurentT::zero();
    }
    let m = n.abs();
    let mut out = LaurentT::zero();
    let sign = if n < 0 { -BigInt::one() } else { BigInt::one() };
    for i in 0..m {
        out.add_monomial(2 * (m - 1) - 4 * i, &sign);
    }
    out
}

/// `<Q>(n)`, extended to all integers as an odd function.
pub fn habiro_bracket(q: &Summand, n: i64) -> LaurentT {
    if n == 0 {
        return LaurentT::zero();
    }
    if n < 0 {
        return -&habiro_bracket(q, -n);
    }
    let by_x: BTreeMap<i32, MultiLaurent> = q.0.coeffs_in(Var::X);
    let parts: Vec<(i64, LaurentT)> = by_x
        .iter()
        .map(|(&e, c)| (e as i64, LaurentT::eval_tm(c, n).expect("summand checked integral in t, M")))
        .collect();
    let one = BigInt::one();
    let neg = -BigInt::one();
    let mut prod = LaurentT::one();
    let mut sum = LaurentT::zero();
    for k in 0..n {
        if k > 0 {
            let mut next = prod.shift(4 * n);
            next.add_scaled(&prod, &one, -4 * n);
            next.add_scaled(&prod, &neg, 4 * k);
            next.add_scaled(&prod, &neg, -4 * k);
            prod = next;
        }
        for (e, c) in &parts {
            let term = if c.low() == c.high() {
                // monomial coefficient: just shift and scale
                prod.shift(c.low() + 4 * k * e).scale(&c.coeff(c.low()))
            } else {
                (&prod * c).shift(4 * k * e)
            };
            sum = &sum + &term;
        }
    }
    &quantum_integer(n) * &sum
}

pub fn colored_jones_fig8(n: i64) -> LaurentT {
    habiro_bracket(&Summand::one(), n)
}

type ValueFn = dyn Fn(i64) -> LaurentT + Send + Sync;

pub enum Definition {
    /// `<Q>`, odd in `n`.
    Bracket(Summand),
    /// `n -> (op f)(n)`.
    Operator { op: Operator, inner: Arc<DiscreteFunction> },
    /// Arbitrary values, e.g. test sequences.
    Table(Box<ValueFn>),
}

impl fmt::Debug for Definition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Definition::Bracket(q) => write!(f, "Bracket({})", q.0),
            Definition::Operator { op, .. } => write!(f, "Operator({op})"),
            Definition::Table(_) => f.write_str("Table"),
        }
    }
}

/// A memoized sequence `n -> Z[t, 1/t]`. Distinct `n` may be evaluated
/// from several threads; a value is computed at most once per winner and
/// every reader sees the same result.
#[derive(Debug)]
pub struct DiscreteFunction {
    def: Definition,
    cache: RwLock<HashMap<i64, Arc<LaurentT>>>,
}

impl DiscreteFunction {
    pub fn new(def: Definition) -> Self {
        Self { def, cache: RwLock::new(HashMap::new()) }
    }

    pub fn bracket(q: Summand) -> Self {
        Self::new(Definition::Bracket(q))
    }

    pub fn from_operator(op: Operator, inner: Arc<DiscreteFunction>) -> Self {
        Self::new(Definition::Operator { op, inner })
    }

    pub fn from_fn<F: Fn(i64) -> LaurentT + Send + Sync + 'static>(f: F) -> Self {
        Self::new(Definition::Table(Box::new(f)))
    }

    pub fn definition(&self) -> &Definition {
        &self.def
    }

    pub fn is_odd(&self) -> bool {
        matches!(self.def, Definition::Bracket(_))
    }

    pub fn value(&self, n: i64) -> Result<Arc<LaurentT>> {
        if let Some(v) = self.cache.read().expect("cache lock").get(&n) {
            return Ok(v.clone());
        }
        let v = Arc::new(self.compute(n)?);
        let mut w = self.cache.write().expect("cache lock");
        Ok(w.entry(n).or_insert(v).clone())
    }

    /// Evaluate without consulting or filling the cache.
    pub fn compute(&self, n: i64) -> Result<LaurentT> {
        match &self.def {
            Definition::Bracket(q) => {
                if n == 0 {
                    Ok(LaurentT::zero())
                } else if n < 0 {
                    Ok(-&*self.value(-n)?)
                } else {
                    Ok(habiro_bracket(q, n))
                }
            }
            Definition::Operator { op, inner } => op.act(inner, n),
            Definition::Table(f) => Ok(f(n)),
        }
    }

    pub fn cached_len(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }
}

/// The shared `J_E = <1>`.
pub fn jones_fig8() -> Arc<DiscreteFunction> {
    static J: OnceLock<Arc<DiscreteFunction>> = OnceLock::new();
    J.get_or_init(|| Arc::new(DiscreteFunction::bracket(Summand::one()))).clone()
}

/// The shared `<x>`.
pub fn bracket_x() -> Arc<DiscreteFunction> {
    static X: OnceLock<Arc<DiscreteFunction>> = OnceLock::new();
    X.get_or_init(|| Arc::new(DiscreteFunction::bracket(Summand::x()))).clone()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointwiseReport {
    pub checked: Vec<i64>,
    pub first_failure: Option<i64>,
}

impl PointwiseReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Check `(u f)(n) = sum_i c_i(t, t^(2n)) f_i(n)` for every `n` in `ns`,
/// stopping at the first failure.
pub fn verify_pointwise_identity(
    u: &Operator,
    f: &DiscreteFunction,
    rhs: &[(MultiLaurent, &DiscreteFunction)],
    ns: impl IntoIterator<Item = i64>,
) -> Result<PointwiseReport> {
    let (u_int, du) = clear_operator(u);
    let cleared: Vec<(MultiLaurent, BigInt)> = rhs.iter().map(|(c, _)| c.clear_denominators()).collect();
    let d = cleared.iter().fold(du.clone(), |a, (_, di)| a.lcm(di));
    let mut checked = Vec::new();
    for n in ns {
        checked.push(n);
        let lhs = u_int.act(f, n)?.scale(&(&d / &du));
        let mut acc = LaurentT::zero();
        for ((c, di), (_, fi)) in cleared.iter().zip(rhs) {
            let cv = LaurentT::eval_tm(c, n)?.scale(&(&d / di));
            acc = &acc + &(&cv * &*fi.value(n)?);
        }
        if lhs != acc {
            return Ok(PointwiseReport { checked, first_failure: Some(n) });
        }
    }
    Ok(PointwiseReport { checked, first_failure: None })
}

fn clear_operator(u: &Operator) -> (Operator, BigInt) {
    let d = u.terms().fold(BigInt::one(), |a, (_, c)| a.lcm(&c.clear_denominators().1));
    if d.is_one() {
        return (u.clone(), d);
    }
    let s = MultiLaurent::constant(num_rational::BigRational::from_integer(d.clone()));
    (u.scale_left(&s), d)
}

/// The constant sequence `n -> c`.
pub fn constant_function(c: LaurentT) -> DiscreteFunction {
    DiscreteFunction::from_fn(move |_| c.clone())
}

/// Whether every coefficient of `v` vanishes; convenience for reports.
pub fn is_zero_value(v: &LaurentT) -> bool {
    v.is_zero() || v.nonzero_terms().all(|(_, c)| c.is_zero())
}
