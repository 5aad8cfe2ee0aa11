//! Rewriting `P <1>` as `c1 <1> + cx <x>` with the relation table for
//! `L^k <1>` and `L <x>`, plus exact recovery of the additive remainder the
//! table leaves open.
//!
//! A table row only holds modulo polynomials in `t, M`: numerically
//! `L^k<1>(n) = c1(t,t^2n) <1>(n) + cx(t,t^2n) <x>(n) + s(t,t^2n)` with `s`
//! a Laurent polynomial in `M` over `Q(t)`. Fitting recovers `s`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::parse_laurent;
use crate::jones::{
    bracket_x, constant_function, jones_fig8, verify_pointwise_identity, DiscreteFunction, PointwiseReport,
};
use crate::laurent::{Mono, MultiLaurent, Var};
use crate::linsolve::linsolve_fraction_free;
use crate::ratfun::RationalFunction;
use crate::torus::Operator;
use crate::unilaurent::LaurentT;

/// Which bracket relation a row describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RowKind {
    /// `L^k <1>`
    Power(i32),
    /// `L <x>`
    ShiftX,
}

impl fmt::Display for RowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowKind::Power(k) => write!(f, "L^{k}<1>"),
            RowKind::ShiftX => f.write_str("L<x>"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BracketVector {
    pub c1: MultiLaurent,
    pub cx: MultiLaurent,
    /// The additive part in `Q(t)[M, 1/M]`, once fitted.
    pub remainder: Option<RationalFunction>,
}

impl BracketVector {
    pub fn new(c1: MultiLaurent, cx: MultiLaurent) -> Self {
        Self { c1, cx, remainder: None }
    }

    pub fn zero() -> Self {
        Self { c1: MultiLaurent::zero(), cx: MultiLaurent::zero(), remainder: Some(RationalFunction::zero()) }
    }

    pub fn remainder_resolved(&self) -> bool {
        self.remainder.is_some()
    }

    /// `(d * value, d)` at `n`, where `value = c1 <1>(n) + cx <x>(n) + s(n)`
    /// and `d(t)` clears the denominator of `s`.
    pub fn evaluate_scaled(&self, n: i64) -> Result<(LaurentT, LaurentT)> {
        let s = self.remainder.as_ref().ok_or_else(|| Error::Unresolved(format!("{} / {}", self.c1, self.cx)))?;
        let (num, den) = scaled_parts(s)?;
        let (c1, d1) = self.c1.clear_denominators();
        let (cx, dx) = self.cx.clear_denominators();
        if !d1.is_one() || !dx.is_one() {
            return Err(Error::InexactDivision { num: format!("{} / {}", self.c1, self.cx), den: "1".into() });
        }
        let hom = &(&LaurentT::eval_tm(&c1, n)? * &*jones_fig8().value(n)?)
            + &(&LaurentT::eval_tm(&cx, n)? * &*bracket_x().value(n)?);
        Ok((&(&den * &hom) + &LaurentT::eval_tm(&num, n)?, den))
    }
}

/// `s = num / den` with `num` integral in `t, M` and `den` in `t` alone.
fn scaled_parts(s: &RationalFunction) -> Result<(MultiLaurent, LaurentT)> {
    s.den().only_uses(&[Var::T])?;
    let (num, c) = s.num().clear_denominators();
    let den = LaurentT::from_multi(s.den())?.scale(&c);
    Ok((num, den))
}

// Rows as printed, in the expression syntax of `expr`.
const ROW_L1: (&str, &str) = ("t^{-2}M^{-4}-t^{-2}M^{-2}-t^2", "t^6M^2-t^2M^{-2}");
const ROW_L2: (&str, &str) = (
    "t^{-12}M^{-8} - (t^{-12} + t^{-8})M^{-6} - t^{12}M^4 - (t^{-4}+1)M^{-4} + (t^{-4} + 1)M^{-2} +t^8 + t^4 +1",
    "t^{16}M^6 - t^{-8}M^{-6} - t^{12}M^{4} + t^{-4}M^{-4} - (t^{12}+t^8+t^4)M^2 + (t^4 + t^{-4} + 1)M^{-2}",
);
const ROW_LM1: (&str, &str) = ("t^{-2}M^4 - t^{-2}M^2 -t^{2}", "t^6M^{-2} - t^2 M^2");
const ROW_LM2: (&str, &str) = (
    "t^{-12}M^8 - (t^{-12} + t^{-8})M^6 - t^{12}M^{-4} - (t^{-4} + 1)M^4 + (t^{-4}+1)M^2 + t^{8} + t^4 +1",
    "t^{16}M^{-6} - t^{-8}M^6 - t^{12}M^{-4} + t^{-4}M^{4} - (t^{12}+t^8+t^4)M^{-2} + (t^4+t^{-4}+1)M^{2}",
);
const ROW_LX: (&str, &str) = ("t^{-2}M^{-2}-t^2M^2", "t^6M^4-t^2M^2-t^2");

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationTable {
    rows: BTreeMap<i32, BracketVector>,
    x_row: BracketVector,
}

impl RelationTable {
    pub fn new(rows: BTreeMap<i32, BracketVector>, x_row: BracketVector) -> Self {
        Self { rows, x_row }
    }

    /// The published rows for `L^{+-1}<1>`, `L^{+-2}<1>` and `L<x>`, unresolved.
    pub fn paper() -> Self {
        let row = |(a, b): (&str, &str)| {
            BracketVector::new(parse_laurent(a).expect("table row"), parse_laurent(b).expect("table row"))
        };
        let rows = BTreeMap::from([(-2, row(ROW_LM2)), (-1, row(ROW_LM1)), (1, row(ROW_L1)), (2, row(ROW_L2))]);
        Self { rows, x_row: row(ROW_LX) }
    }

    /// The published table with every remainder fitted under the default
    /// configuration. Built once and shared.
    pub fn paper_resolved() -> Result<Arc<RelationTable>> {
        static T: OnceLock<std::result::Result<Arc<RelationTable>, Error>> = OnceLock::new();
        T.get_or_init(|| RelationTable::paper().resolve(&FitConfig::default()).map(Arc::new)).clone()
    }

    pub fn row(&self, kind: RowKind) -> Option<&BracketVector> {
        match kind {
            RowKind::Power(k) => self.rows.get(&k),
            RowKind::ShiftX => Some(&self.x_row),
        }
    }

    pub fn kinds(&self) -> Vec<RowKind> {
        self.rows.keys().map(|&k| RowKind::Power(k)).chain(std::iter::once(RowKind::ShiftX)).collect()
    }

    pub fn is_resolved(&self) -> bool {
        self.rows.values().all(BracketVector::remainder_resolved) && self.x_row.remainder_resolved()
    }

    /// Fit every row; rows are independent and fitted in parallel.
    pub fn resolve(&self, cfg: &FitConfig) -> Result<RelationTable> {
        let kinds = self.kinds();
        let fitted: Vec<Result<BracketVector>> = std::thread::scope(|s| {
            let handles: Vec<_> = kinds
                .iter()
                .map(|&k| {
                    let row = self.row(k).expect("listed kind");
                    s.spawn(move || fit_exact_row(k, row, cfg))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("fit thread")).collect()
        });
        let mut out = self.clone();
        for (k, row) in kinds.into_iter().zip(fitted) {
            let row = row?;
            match k {
                RowKind::Power(p) => {
                    out.rows.insert(p, row);
                }
                RowKind::ShiftX => out.x_row = row,
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FitMethod {
    /// Geometric elimination on consecutive points when possible, else Bareiss.
    Auto,
    /// Fraction-free elimination on the Vandermonde system.
    Elimination,
}

#[derive(Clone, Debug)]
pub struct FitConfig {
    /// Fit `s = sum_{|j| <= bound} s_j(t) M^j`.
    pub degree_bound: i32,
    pub fit_points: Vec<i64>,
    pub check_points: Vec<i64>,
    pub method: FitMethod,
}

impl Default for FitConfig {
    fn default() -> Self {
        Self {
            degree_bound: 10,
            fit_points: (1..=21).collect(),
            check_points: (22..=30).collect(),
            method: FitMethod::Auto,
        }
    }
}

/// `lhs(n) - c1(n) <1>(n) - cx(n) <x>(n)`, all scaled by the integer `d`
/// that clears the row's rational coefficients.
fn residual(kind: RowKind, (c1, cx, d): &(MultiLaurent, MultiLaurent, BigInt), n: i64) -> Result<LaurentT> {
    let j = jones_fig8();
    let x = bracket_x();
    let lhs = match kind {
        RowKind::Power(k) => j.value(n + k as i64)?,
        RowKind::ShiftX => x.value(n + 1)?,
    };
    let hom = &(&LaurentT::eval_tm(c1, n)? * &*j.value(n)?) + &(&LaurentT::eval_tm(cx, n)? * &*x.value(n)?);
    Ok(&lhs.scale(d) - &hom)
}

fn integral_row(row: &BracketVector) -> (MultiLaurent, MultiLaurent, BigInt) {
    let (_, d1) = row.c1.clear_denominators();
    let (_, dx) = row.cx.clear_denominators();
    let d = num_integer::Integer::lcm(&d1, &dx);
    let s = num_rational::BigRational::from_integer(d.clone());
    (row.c1.scale(&s), row.cx.scale(&s), d)
}

/// Recover the exact remainder of a row and confirm it at every fit and
/// check point.
pub fn fit_exact_row(kind: RowKind, row: &BracketVector, cfg: &FitConfig) -> Result<BracketVector> {
    let scaled = integral_row(row);
    let unknowns = (2 * cfg.degree_bound + 1) as usize;
    if cfg.fit_points.len() < unknowns {
        return Err(Error::Singular { rank: cfg.fit_points.len(), unknowns });
    }
    assert!(cfg.fit_points.iter().all(|n| !cfg.check_points.contains(n)), "fit and check points must be disjoint");
    let consecutive = cfg.fit_points.windows(2).all(|w| w[1] == w[0] + 1);
    let s = if cfg.method == FitMethod::Auto && consecutive {
        let vals =
            cfg.fit_points[..unknowns].iter().map(|&n| residual(kind, &scaled, n)).collect::<Result<Vec<_>>>()?;
        fit_geometric(&vals, cfg.fit_points[0], cfg.degree_bound)?
    } else {
        let vals = cfg.fit_points.iter().map(|&n| residual(kind, &scaled, n)).collect::<Result<Vec<_>>>()?;
        fit_elimination(&cfg.fit_points, &vals, cfg.degree_bound).map_err(|e| match e {
            Error::Inconsistent { row } => Error::FitMismatch {
                row: kind.to_string(),
                n: cfg.fit_points[row],
                residual: "no remainder within the degree bound".into(),
            },
            e => e,
        })?
    };
    let (num, den) = scaled_parts(&s)?;
    for &n in cfg.fit_points.iter().chain(&cfg.check_points) {
        let lhs = &den * &residual(kind, &scaled, n)?;
        let rhs = LaurentT::eval_tm(&num, n)?;
        if lhs != rhs {
            return Err(Error::FitMismatch { row: kind.to_string(), n, residual: short(&(&lhs - &rhs)) });
        }
    }
    let inv = num_rational::BigRational::new(BigInt::one(), scaled.2);
    let s = RationalFunction::from_coprime(s.num().scale(&inv), s.den().clone())?;
    Ok(BracketVector { c1: row.c1.clone(), cx: row.cx.clone(), remainder: Some(s) })
}

fn short(p: &LaurentT) -> String {
    let s = p.to_string();
    if s.len() <= 120 {
        s
    } else {
        let cut = (0..=117).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
        format!("{}...", &s[..cut])
    }
}

/// Solve `sum_j s_j t^(2jn) = v_n` at `n = n0, n0+1, ...` by killing every
/// geometric component but one with the shift operators `E - t^(2i)`.
/// Denominators are products of cyclotomic polynomials and are tracked as
/// multisets of their indices, so no polynomial gcd is ever needed.
fn fit_geometric(vals: &[LaurentT], n0: i64, bound: i32) -> Result<RationalFunction> {
    let js: Vec<i64> = (-bound as i64..=bound as i64).collect();
    let mut cyclo: HashMap<u64, LaurentT> = HashMap::new();
    let mut parts: Vec<(i64, LaurentT, BTreeMap<u64, u32>)> = Vec::new();
    for &j in &js {
        let mut u = vals.to_vec();
        for &i in js.iter().filter(|&&i| i != j) {
            u = (0..u.len() - 1).map(|m| &u[m + 1] - &u[m].shift(2 * i)).collect();
        }
        let mut num = u.swap_remove(0);
        if num.is_zero() {
            continue;
        }
        // u_0 = s_j t^(2 j n0) prod_{i != j} (t^(2j) - t^(2i))
        let mut shift = -2 * j * n0;
        let mut negate = false;
        let mut factors = Vec::new();
        for &i in js.iter().filter(|&&i| i != j) {
            if j > i {
                shift -= 2 * i;
            } else {
                shift -= 2 * j;
                negate = !negate;
            }
            let e = 2 * (j - i).unsigned_abs();
            factors.extend((1..=e).filter(|dd| e % dd == 0));
        }
        let mut den = BTreeMap::new();
        for dd in factors {
            let phi = cyclo.entry(dd).or_insert_with(|| cyclotomic(dd));
            match num.div_exact(phi) {
                Some(q) => num = q,
                None => *den.entry(dd).or_insert(0) += 1,
            }
        }
        let mut num = num.shift(shift);
        if negate {
            num = -&num;
        }
        parts.push((j, num, den));
    }
    // common denominator: the largest multiplicity of each factor
    let mut common: BTreeMap<u64, u32> = BTreeMap::new();
    for (_, _, den) in &parts {
        for (&d, &e) in den {
            let c = common.entry(d).or_insert(0);
            *c = (*c).max(e);
        }
    }
    let mut total = MultiLaurent::zero();
    for (j, mut num, den) in parts {
        for (&d, &e) in &common {
            for _ in den.get(&d).copied().unwrap_or(0)..e {
                num = &num * &cyclo[&d];
            }
        }
        total += num.to_multi().mul_mono(Mono::var(Var::M, j as i32));
    }
    let mut den = LaurentT::one();
    for (d, e) in common {
        let phi = &cyclo[&d];
        for _ in 0..e {
            match divide_coeffs(&total, phi) {
                Some(q) => total = q,
                None => den = &den * phi,
            }
        }
    }
    // every cyclotomic factor left in `den` fails to divide `total`
    RationalFunction::from_coprime(total, den.to_multi())
}

/// Divide every `M`-coefficient of `p` by `d(t)`, if all divide exactly.
fn divide_coeffs(p: &MultiLaurent, d: &LaurentT) -> Option<MultiLaurent> {
    let mut out = MultiLaurent::zero();
    for (j, c) in p.coeffs_in(Var::M) {
        let q = LaurentT::from_multi(&c).ok()?.div_exact(d)?;
        out += q.to_multi().mul_mono(Mono::var(Var::M, j));
    }
    Some(out)
}

fn fit_elimination(points: &[i64], vals: &[LaurentT], bound: i32) -> Result<RationalFunction> {
    let js: Vec<i64> = (-bound as i64..=bound as i64).collect();
    let a: Vec<Vec<LaurentT>> =
        points.iter().map(|&n| js.iter().map(|&j| LaurentT::monomial(BigInt::one(), 2 * j * n)).collect()).collect();
    let sol = linsolve_fraction_free(&a, vals)?;
    let mut total = RationalFunction::zero();
    for (j, s) in js.iter().zip(sol) {
        let m = RationalFunction::from(MultiLaurent::monomial(One::one(), Mono::var(Var::M, *j as i32)));
        total = &total + &(&s * &m);
    }
    Ok(total)
}

/// The `d`-th cyclotomic polynomial in `t`.
pub fn cyclotomic(d: u64) -> LaurentT {
    let mut p = LaurentT::from_pairs([(d as i64, 1), (0, -1)]);
    for e in (1..d).filter(|e| d % e == 0) {
        p = p.div_exact(&cyclotomic(e)).expect("t^d - 1 factors over its divisors");
    }
    p
}

/// Reduce `P <1>` with the table. Coefficients multiply commutatively since
/// they all act on the same `n`.
pub fn apply_operator(p: &Operator, table: &RelationTable) -> Result<BracketVector> {
    let mut c1 = MultiLaurent::zero();
    let mut cx = MultiLaurent::zero();
    let mut rem = Some(RationalFunction::zero());
    for (k, pk) in p.terms() {
        pk.only_uses(&[Var::T, Var::M])?;
        if k == 0 {
            c1 += pk.clone();
            continue;
        }
        let row = table.rows.get(&k).ok_or(Error::TableRange(k))?;
        c1 += pk * &row.c1;
        cx += pk * &row.cx;
        rem = match (rem, &row.remainder) {
            (Some(r), Some(s)) => Some(&r + &(&RationalFunction::from(pk.clone()) * s)),
            _ => None,
        };
    }
    Ok(BracketVector { c1, cx, remainder: rem })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnnihilationReport {
    pub c1: MultiLaurent,
    pub cx: MultiLaurent,
    /// The fixed sequence `S(t, t^2n)` with `P <1> = S`.
    pub inhomogeneity: RationalFunction,
    pub pointwise: PointwiseReport,
}

impl AnnihilationReport {
    pub fn passed(&self) -> bool {
        self.c1.is_zero() && self.cx.is_zero() && self.pointwise.passed()
    }
}

/// `P <1>` reduces to `0 <1> + 0 <x> + S` and `(P <1>)(n) = S(t, t^2n)`
/// exactly for every `n` in `ns`.
pub fn check_annihilation(
    p: &Operator,
    table: &RelationTable,
    ns: impl IntoIterator<Item = i64>,
) -> Result<AnnihilationReport> {
    let v = apply_operator(p, table)?;
    let inhom = v.remainder.clone().ok_or_else(|| Error::Unresolved(p.to_string()))?;
    let (num, den) = scaled_parts(&inhom)?;
    let u = p.scale_left(&den.to_multi());
    let one = one_function();
    let pointwise = verify_pointwise_identity(&u, &jones_fig8(), &[(num, &*one)], ns)?;
    Ok(AnnihilationReport { c1: v.c1, cx: v.cx, inhomogeneity: inhom, pointwise })
}

fn one_function() -> Arc<DiscreteFunction> {
    static ONE: OnceLock<Arc<DiscreteFunction>> = OnceLock::new();
    ONE.get_or_init(|| Arc::new(constant_function(LaurentT::one()))).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;

    fn p(s: &str) -> MultiLaurent {
        parse_laurent(s).unwrap()
    }

    fn small_cfg() -> FitConfig {
        FitConfig {
            degree_bound: 4,
            fit_points: (1..=9).collect(),
            check_points: (10..=15).collect(),
            method: FitMethod::Auto,
        }
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), LaurentT::from_pairs([(1, 1), (0, -1)]));
        assert_eq!(cyclotomic(4), LaurentT::from_pairs([(2, 1), (0, 1)]));
        assert_eq!(cyclotomic(6), LaurentT::from_pairs([(2, 1), (1, -1), (0, 1)]));
    }

    #[test]
    fn first_row_remainder() {
        let t = RelationTable::paper();
        let row = fit_exact_row(RowKind::Power(1), t.row(RowKind::Power(1)).unwrap(), &small_cfg()).unwrap();
        assert_eq!(row.remainder.unwrap(), parse_expr("(t^4 M - M^-3)/(t^4 - 1)").unwrap());
    }

    #[test]
    fn geometric_and_elimination_agree() {
        let t = RelationTable::paper();
        let row = t.row(RowKind::ShiftX).unwrap();
        let a = fit_exact_row(RowKind::ShiftX, row, &small_cfg()).unwrap();
        let cfg = FitConfig { method: FitMethod::Elimination, ..small_cfg() };
        let b = fit_exact_row(RowKind::ShiftX, row, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn wrong_row_is_rejected() {
        let bad = BracketVector::new(p("t^{-2}M^{-4}-t^{-2}M^{-2}-t^2"), p("t^6M^2"));
        let err = fit_exact_row(RowKind::Power(1), &bad, &small_cfg()).unwrap_err();
        assert!(matches!(err, Error::FitMismatch { n: 10, .. }), "{err}");
    }

    #[test]
    fn out_of_range_power() {
        let op = Operator::l_pow(3);
        assert_eq!(apply_operator(&op, &RelationTable::paper()), Err(Error::TableRange(3)));
        assert_eq!(apply_operator(&Operator::zero(), &RelationTable::paper()).unwrap(), BracketVector::zero());
    }

    #[test]
    fn shift_is_not_annihilated() {
        let mut t = RelationTable::paper();
        let row = fit_exact_row(RowKind::Power(1), t.row(RowKind::Power(1)).unwrap(), &small_cfg()).unwrap();
        t.rows.insert(1, row);
        let r = check_annihilation(&Operator::l_pow(1), &t, 1..=5).unwrap();
        assert!(!r.passed());
        assert_eq!(r.pointwise.first_failure, Some(1));
    }

    #[test]
    fn full_table_and_recurrence() {
        let t = RelationTable::paper_resolved().unwrap();
        assert!(t.is_resolved());
        let alpha = Operator::from_terms([
            (1, p("t^{-2}M^2 - t^2M^{-2}")),
            (0, p("(M^2-M^{-2})(-M^4-M^{-4}+M^2+M^{-2}+t^4+t^{-4})")),
            (-1, p("t^2M^2 - t^{-2}M^{-2}")),
        ]);
        let r = check_annihilation(&alpha, &t, 1..=20).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(
            r.inhomogeneity,
            parse_expr("(t^2 M^-5 + t^2 M^-3 - t^-2 (t^8+1) M^-1 - t^-2 (t^8+1) M + t^2 M^3 + t^2 M^5)/(t^4-1)")
                .unwrap()
        );
    }
}
