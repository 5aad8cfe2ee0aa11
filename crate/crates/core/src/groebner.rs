//! Gröbner bases over `Q[t, M]` with conversion matrices, reduction with
//! quotients, ideal membership and the two-generator Diophantine solver.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gcd::poly_gcd;
use crate::laurent::{Mono, MultiLaurent, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Grevlex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    /// Highest precedence first; unlisted variables follow in `t, M, x, L` order.
    pub vars: Vec<Var>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::lex()
    }
}

impl MonomialOrder {
    pub fn lex() -> Self {
        Self { kind: OrderKind::Lex, vars: vec![Var::T, Var::M] }
    }

    pub fn grevlex() -> Self {
        Self { kind: OrderKind::Grevlex, vars: vec![Var::T, Var::M] }
    }

    pub fn with_vars(kind: OrderKind, vars: Vec<Var>) -> Self {
        Self { kind, vars }
    }

    fn precedence(&self) -> impl Iterator<Item = Var> + '_ {
        self.vars.iter().copied().chain(Var::ALL.into_iter().filter(|v| !self.vars.contains(v)))
    }

    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for v in self.precedence() {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                let vars: Vec<Var> = self.precedence().collect();
                for v in vars.into_iter().rev() {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => {}
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Leading monomial and coefficient.
    pub fn leading(&self, p: &MultiLaurent) -> Option<(Mono, BigRational)> {
        p.terms().max_by(|a, b| self.cmp(a.0, b.0)).map(|(m, c)| (*m, c.clone()))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::Grevlex => "grevlex",
        };
        let vars: Vec<String> = self.vars.iter().map(|v| v.symbol().to_string()).collect();
        write!(f, "{kind}({})", vars.join(" > "))
    }
}

/// Terms sorted by decreasing monomial under a fixed order.
#[derive(Clone, Debug, PartialEq)]
struct Poly(Vec<(Mono, BigRational)>);

impl Poly {
    fn from_laurent(p: &MultiLaurent, ord: &MonomialOrder) -> Self {
        let mut v: Vec<(Mono, BigRational)> = p.terms().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Poly(v)
    }

    fn to_laurent(&self) -> MultiLaurent {
        MultiLaurent::from_terms(self.0.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn lead(&self) -> Option<&(Mono, BigRational)> {
        self.0.first()
    }

    /// `self - c * m * g`, merging sorted term lists.
    fn sub_mul(&self, c: &BigRational, m: Mono, g: &Poly, ord: &MonomialOrder) -> Poly {
        let mut out = Vec::with_capacity(self.0.len() + g.0.len());
        let mut a = self.0.iter().peekable();
        let mut b = g.0.iter().map(|(gm, gc)| (*gm * m, gc * c)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match ord.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(a.next().expect("peeked").clone()),
                    Ordering::Less => {
                        let (m, c) = b.next().expect("peeked");
                        out.push((m, -c));
                    }
                    Ordering::Equal => {
                        let (m, c) = b.next().expect("peeked");
                        let d = &a.next().expect("peeked").1 - c;
                        if !d.is_zero() {
                            out.push((m, d));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().expect("peeked").clone()),
                (None, Some(_)) => {
                    let (m, c) = b.next().expect("peeked");
                    out.push((m, -c));
                }
                (None, None) => break,
            }
        }
        Poly(out)
    }

    fn scale(&self, c: &BigRational) -> Poly {
        Poly(self.0.iter().map(|(m, a)| (*m, a * c)).collect())
    }
}

fn check_polynomial(p: &MultiLaurent) -> Result<()> {
    if p.is_polynomial() {
        Ok(())
    } else {
        Err(Error::NegativeExponent(p.to_string()))
    }
}

/// Full reduction of `f` by `basis`: `f = sum q_i basis_i + r` and no term
/// of `r` is divisible by a leading monomial of the basis.
fn reduce_poly(f: &Poly, basis: &[Poly], ord: &MonomialOrder) -> (Vec<BTreeMap<Mono, BigRational>>, Poly) {
    let mut quotients = vec![BTreeMap::new(); basis.len()];
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((m, c)) = p.lead().cloned() {
        let hit = basis.iter().enumerate().find(|(_, g)| g.lead().is_some_and(|(gm, _)| gm.divides(&m)));
        match hit {
            Some((i, g)) => {
                let (gm, gc) = g.lead().expect("nonzero basis element");
                let fac = &c / gc;
                let mm = m / *gm;
                p = p.sub_mul(&fac, mm, g, ord);
                let e = quotients[i].entry(mm).or_insert_with(BigRational::zero);
                *e += fac;
            }
            None => {
                rem.push((m, c));
                p.0.remove(0);
            }
        }
    }
    (quotients, Poly(rem))
}

/// Divide `f` by `basis` under `order`.
pub fn reduce(
    f: &MultiLaurent,
    basis: &[MultiLaurent],
    order: &MonomialOrder,
) -> Result<(Vec<MultiLaurent>, MultiLaurent)> {
    check_polynomial(f)?;
    for g in basis {
        check_polynomial(g)?;
    }
    let gs: Vec<Poly> = basis.iter().filter(|g| !g.is_zero()).map(|g| Poly::from_laurent(g, order)).collect();
    let (q, r) = reduce_poly(&Poly::from_laurent(f, order), &gs, order);
    let mut q = q.into_iter();
    let quotients = basis
        .iter()
        .map(|g| {
            if g.is_zero() {
                MultiLaurent::zero()
            } else {
                MultiLaurent::from_terms(q.next().expect("one per element"))
            }
        })
        .collect();
    Ok((quotients, r.to_laurent()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtendedBasis {
    pub order: MonomialOrder,
    pub input: Vec<MultiLaurent>,
    pub gens: Vec<MultiLaurent>,
    /// `gens[i] = sum_j conversion[i][j] * input[j]`.
    pub conversion: Vec<Vec<MultiLaurent>>,
}

struct Tracked {
    poly: Poly,
    row: Vec<MultiLaurent>,
}

impl Tracked {
    /// Divide by the content and fix the sign of the leading coefficient.
    fn normalize(&mut self) {
        let p = self.poly.to_laurent();
        let (mut c, _) = p.primitive();
        let lead_neg = self.poly.lead().is_some_and(|(_, a)| a.is_negative());
        if c.is_negative() != lead_neg {
            c = -c;
        }
        if c.is_one() {
            return;
        }
        let inv = c.recip();
        self.poly = self.poly.scale(&inv);
        for r in &mut self.row {
            *r = r.scale(&inv);
        }
    }

    /// Reduce fully by `others`, updating the conversion row.
    fn reduce_by(&mut self, others: &[&Tracked], ord: &MonomialOrder) {
        let polys: Vec<Poly> = others.iter().map(|o| o.poly.clone()).collect();
        let (q, r) = reduce_poly(&self.poly, &polys, ord);
        for (qi, o) in q.into_iter().zip(others) {
            if qi.is_empty() {
                continue;
            }
            let qi = MultiLaurent::from_terms(qi);
            for (a, b) in self.row.iter_mut().zip(&o.row) {
                *a -= &qi * b;
            }
        }
        self.poly = r;
    }
}

/// Buchberger's algorithm with the normal selection strategy, the
/// coprime-leading-term and chain criteria, and cofactor tracking. The
/// result is the reduced basis with primitive integer generators, positive
/// leading coefficients, sorted by increasing leading monomial.
pub fn buchberger_extended(input: &[MultiLaurent], order: &MonomialOrder) -> Result<ExtendedBasis> {
    for f in input {
        check_polynomial(f)?;
    }
    let n = input.len();
    let mut gens: Vec<Tracked> = Vec::new();
    for (i, f) in input.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let mut row = vec![MultiLaurent::zero(); n];
        row[i] = MultiLaurent::one();
        let mut t = Tracked { poly: Poly::from_laurent(f, order), row };
        t.normalize();
        gens.push(t);
    }
    let lm = |g: &Tracked| g.poly.lead().expect("basis elements are nonzero").0;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..gens.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut done: std::collections::HashSet<(usize, usize)> = Default::default();
    while !pairs.is_empty() {
        // normal strategy: smallest lcm, ties by index
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = lm(&gens[a.0]).max(lm(&gens[a.1]));
                let lb = lm(&gens[b.0]).max(lm(&gens[b.1]));
                order.cmp(&la, &lb).then(a.cmp(b))
            })
            .expect("nonempty");
        let (i, j) = pairs.remove(pos);
        done.insert((i, j));
        let (mi, mj) = (lm(&gens[i]), lm(&gens[j]));
        if mi.coprime(&mj) {
            continue;
        }
        let l = mi.max(mj);
        let chain = (0..gens.len()).any(|k| {
            k != i
                && k != j
                && lm(&gens[k]).divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let (ci, cj) = (&gens[i].poly.lead().expect("nonzero").1, &gens[j].poly.lead().expect("nonzero").1);
        let (ui, uj) = (l / mi, l / mj);
        let (si, sj) = (ci.recip(), cj.recip());
        let zero = Poly(Vec::new());
        let poly = zero.sub_mul(&-si.clone(), ui, &gens[i].poly, order).sub_mul(&sj, uj, &gens[j].poly, order);
        let mono = |u: Mono, c: &BigRational| MultiLaurent::monomial(c.clone(), u);
        let row: Vec<MultiLaurent> =
            gens[i].row.iter().zip(&gens[j].row).map(|(a, b)| &(&mono(ui, &si) * a) - &(&mono(uj, &sj) * b)).collect();
        let mut s = Tracked { poly, row };
        let refs: Vec<&Tracked> = gens.iter().collect();
        s.reduce_by(&refs, order);
        if s.poly.is_zero() {
            continue;
        }
        s.normalize();
        let k = gens.len();
        gens.push(s);
        for a in 0..k {
            pairs.push((a, k));
        }
    }
    // minimize: drop generators whose leading monomial is divisible by another's
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..gens.len() {
        let mi = lm(&gens[i]);
        let redundant = (0..gens.len()).any(|j| j != i && lm(&gens[j]).divides(&mi) && (lm(&gens[j]) != mi || j < i));
        if !redundant {
            keep.push(i);
        }
    }
    let mut min: Vec<Tracked> = Vec::new();
    let mut gens: Vec<Option<Tracked>> = gens.into_iter().map(Some).collect();
    for i in keep {
        min.push(gens[i].take().expect("kept once"));
    }
    min.sort_by(|a, b| order.cmp(&lm(a), &lm(b)));
    // interreduce
    for i in 0..min.len() {
        let mut g = std::mem::replace(&mut min[i], Tracked { poly: Poly(Vec::new()), row: Vec::new() });
        let others: Vec<&Tracked> = min.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, t)| t).collect();
        let (head, tail) = (g.poly.0[0].clone(), Poly(g.poly.0[1..].to_vec()));
        let mut rest = Tracked { poly: tail, row: vec![MultiLaurent::zero(); n] };
        rest.reduce_by(&others, order);
        // g = head + tail; tail reduced to rest.poly with row change rest.row
        for (a, b) in g.row.iter_mut().zip(&rest.row) {
            *a += b.clone();
        }
        let mut terms = vec![head];
        terms.extend(rest.poly.0);
        g.poly = Poly(terms);
        g.normalize();
        min[i] = g;
    }
    Ok(ExtendedBasis {
        order: order.clone(),
        input: input.to_vec(),
        gens: min.iter().map(|g| g.poly.to_laurent()).collect(),
        conversion: min.into_iter().map(|g| g.row).collect(),
    })
}

/// Outcome of a membership query.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Membership {
    pub member: bool,
    /// `f = sum cofactors_i * input_i` when `member`.
    pub cofactors: Vec<MultiLaurent>,
    /// Zero for members; the nonzero witness otherwise.
    pub remainder: MultiLaurent,
}

/// How many powers of `t M` to try when saturating a Laurent target.
const SATURATION_LIMIT: i32 = 16;

impl ExtendedBasis {
    /// `conversion * input = gens` exactly.
    pub fn verify_conversion(&self) -> bool {
        self.conversion.iter().zip(&self.gens).all(|(row, g)| {
            let s = row.iter().zip(&self.input).fold(MultiLaurent::zero(), |acc, (c, f)| &acc + &(c * f));
            s == *g
        })
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn s_polynomials_reduce(&self) -> bool {
        let ord = &self.order;
        let gs: Vec<Poly> = self.gens.iter().map(|g| Poly::from_laurent(g, ord)).collect();
        for j in 0..gs.len() {
            for i in 0..j {
                let (mi, ci) = gs[i].lead().expect("nonzero").clone();
                let (mj, cj) = gs[j].lead().expect("nonzero").clone();
                let l = mi.max(mj);
                let s = Poly(Vec::new()).sub_mul(&-ci.recip(), l / mi, &gs[i], ord).sub_mul(
                    &cj.recip(),
                    l / mj,
                    &gs[j],
                    ord,
                );
                if !reduce_poly(&s, &gs, ord).1.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Reduce a polynomial by the generators.
    pub fn reduce(&self, f: &MultiLaurent) -> Result<(Vec<MultiLaurent>, MultiLaurent)> {
        reduce(f, &self.gens, &self.order)
    }

    /// Cofactors on the input from quotients on the generators.
    /// For two inputs the result is made canonical: the second cofactor is
    /// reduced modulo `input_0 / gcd`.
    fn compose(&self, quotients: &[MultiLaurent]) -> Result<Vec<MultiLaurent>> {
        let mut out = vec![MultiLaurent::zero(); self.input.len()];
        for (q, row) in quotients.iter().zip(&self.conversion) {
            if q.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(row) {
                *o += q * c;
            }
        }
        if let [a, b] = &self.input[..] {
            if !a.is_zero() && !b.is_zero() {
                let [p0, p1]: [MultiLaurent; 2] = out.try_into().expect("two cofactors");
                let (p0, p1, ..) = canonical_pair(a, b, p0, p1, &self.order)?;
                return Ok(vec![p0, p1]);
            }
        }
        Ok(out)
    }

    /// Membership of `f` in the ideal of the input.
    ///
    /// A polynomial `f` is tested in the polynomial ring. A target with
    /// negative exponents is tested in the Laurent ring: it is cleared to a
    /// polynomial and multiplied by powers of `t M` until it reduces to
    /// zero, and the cofactors are Laurent polynomials.
    pub fn membership(&self, f: &MultiLaurent) -> Result<Membership> {
        if f.is_polynomial() {
            let (q, r) = self.reduce(f)?;
            let member = r.is_zero();
            let cofactors = if member { self.compose(&q)? } else { Vec::new() };
            return Ok(Membership { member, cofactors, remainder: r });
        }
        let (base, shift) = f.normalize_to_poly();
        let tm = Mono::tm(1, 1);
        let mut first = None;
        for k in 0..=SATURATION_LIMIT {
            let g = base.mul_mono(tm.pow(k));
            let (q, r) = self.reduce(&g)?;
            if r.is_zero() {
                let back = (shift * tm.pow(k)).inv();
                let cofactors = self.compose(&q)?.into_iter().map(|c| c.mul_mono(back)).collect();
                return Ok(Membership { member: true, cofactors, remainder: r });
            }
            first.get_or_insert(r);
        }
        Ok(Membership { member: false, cofactors: Vec::new(), remainder: first.expect("at least one attempt") })
    }
}

pub fn ideal_membership(f: &MultiLaurent, basis: &ExtendedBasis) -> Result<Membership> {
    basis.membership(f)
}

/// Solutions of `A p0 + B p1 = C`: the particular pair plus the family
/// `(p0 - f B/g, p1 + f A/g)` with `g = gcd(A, B)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DioSolution {
    pub particular: (MultiLaurent, MultiLaurent),
    /// `(B/g, A/g)`
    pub modulus: (MultiLaurent, MultiLaurent),
    pub gcd: MultiLaurent,
}

impl DioSolution {
    /// The member of the family for the parameter `f`.
    pub fn shifted(&self, f: &MultiLaurent) -> (MultiLaurent, MultiLaurent) {
        (&self.particular.0 - &(f * &self.modulus.0), &self.particular.1 + &(f * &self.modulus.1))
    }

    /// The parameter taking the particular solution to `(p0, p1)`, if that
    /// pair lies in the family.
    pub fn parameter_of(&self, p0: &MultiLaurent, p1: &MultiLaurent) -> Option<MultiLaurent> {
        let f = (p1 - &self.particular.1).div_exact(&self.modulus.1)?;
        (self.shifted(&f).0 == *p0).then_some(f)
    }
}

/// Solve `A p0 + B p1 = C` over the Laurent ring. The particular solution
/// has `p1` reduced modulo `A/g`, which makes it independent of how the
/// cofactors were found.
pub fn dio_solve_pair(
    a: &MultiLaurent,
    b: &MultiLaurent,
    c: &MultiLaurent,
    order: &MonomialOrder,
) -> Result<DioSolution> {
    let (pa, ma) = polynomial_part(a);
    let (pb, mb) = polynomial_part(b);
    let basis = buchberger_extended(&[pa, pb], order)?;
    let m = basis.membership(c)?;
    if !m.member {
        return Err(Error::NotInIdeal(m.remainder.to_string()));
    }
    // cofactors on the normalized inputs, moved back to a and b
    let p0 = m.cofactors[0].mul_mono(ma);
    let p1 = m.cofactors[1].mul_mono(mb);
    let (p0, p1, g, bg, ag) = canonical_pair(a, b, p0, p1, order)?;
    debug_assert_eq!(&(a * &p0) + &(b * &p1), *c);
    Ok(DioSolution { particular: (p0, p1), modulus: (bg, ag), gcd: g })
}

/// Move `(p0, p1)` along the syzygies `(B/g, -A/g)` so that `p1` is reduced
/// modulo `A/g`. Returns the new pair, `g`, `B/g` and `A/g`.
#[allow(clippy::type_complexity)]
fn canonical_pair(
    a: &MultiLaurent,
    b: &MultiLaurent,
    p0: MultiLaurent,
    p1: MultiLaurent,
    order: &MonomialOrder,
) -> Result<(MultiLaurent, MultiLaurent, MultiLaurent, MultiLaurent, MultiLaurent)> {
    let g = poly_gcd(a, b);
    let ag = a.div_exact(&g).expect("gcd divides a");
    let bg = b.div_exact(&g).expect("gcd divides b");
    let (p1n, s) = polynomial_part(&p1);
    let (agn, sa) = polynomial_part(&ag);
    let (q, r) = reduce(&p1n, &[agn], order)?;
    // p1 = s^-1 (q sa ag + r)
    let f = q[0].mul_mono(sa / s);
    let p1 = r.mul_mono(s.inv());
    let p0 = &p0 + &(&f * &bg);
    Ok((p0, p1, g, bg, ag))
}

/// `(p * m, m)` with `p * m` a polynomial; `m = 1` when `p` already is one.
fn polynomial_part(p: &MultiLaurent) -> (MultiLaurent, Mono) {
    if p.is_polynomial() {
        (p.clone(), Mono::ONE)
    } else {
        p.normalize_to_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn orders() {
        let lex = MonomialOrder::lex();
        let grev = MonomialOrder::grevlex();
        let (a, b) = (Mono::tm(1, 0), Mono::tm(0, 5));
        assert_eq!(lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(grev.cmp(&a, &b), Ordering::Less);
        assert_eq!(grev.cmp(&Mono::tm(2, 1), &Mono::tm(1, 2)), Ordering::Greater);
        assert_eq!(lex.leading(&p("M^5 + t")).unwrap().0, a);
    }

    #[test]
    fn reduce_contract() {
        let basis = [p("t - M"), p("M^2 - 1")];
        let f = p("t^2*M + 3*t + 1");
        let (q, r) = reduce(&f, &basis, &MonomialOrder::lex()).unwrap();
        let back = &(&(&q[0] * &basis[0]) + &(&q[1] * &basis[1])) + &r;
        assert_eq!(back, f);
        assert_eq!(r, p("4*M + 1"));
        let (q, r) = reduce(&MultiLaurent::zero(), &basis, &MonomialOrder::lex()).unwrap();
        assert!(r.is_zero() && q.iter().all(MultiLaurent::is_zero));
        assert!(reduce(&p("t^-1"), &basis, &MonomialOrder::lex()).is_err());
    }

    #[test]
    fn trivial_bases() {
        let eb = buchberger_extended(&[p("M"), p("t")], &MonomialOrder::lex()).unwrap();
        assert_eq!(eb.gens, vec![p("M"), p("t")]);
        assert_eq!(eb.conversion, vec![vec![p("1"), p("0")], vec![p("0"), p("1")]]);
        let eb = buchberger_extended(&[p("-4*t^2 + 6*M")], &MonomialOrder::lex()).unwrap();
        assert_eq!(eb.gens, vec![p("2*t^2 - 3*M")]);
        assert!(eb.verify_conversion());
    }

    #[test]
    fn twisted_cubic_like() {
        let input = [p("t^3 - M^2"), p("t^2*M - 1")];
        for ord in [MonomialOrder::lex(), MonomialOrder::grevlex()] {
            let eb = buchberger_extended(&input, &ord).unwrap();
            assert!(eb.verify_conversion());
            assert!(eb.s_polynomials_reduce());
            for f in &input {
                assert!(eb.membership(f).unwrap().member);
            }
        }
    }

    #[test]
    fn membership_examples() {
        let eb = buchberger_extended(&[p("t"), p("M")], &MonomialOrder::lex()).unwrap();
        let m = eb.membership(&p("1")).unwrap();
        assert!(!m.member);
        assert_eq!(m.remainder, p("1"));
        let a = p("t^2 - M^3");
        let b = p("t*M + 1");
        let eb = buchberger_extended(&[a.clone(), b.clone()], &MonomialOrder::lex()).unwrap();
        assert_eq!(eb.membership(&a).unwrap().cofactors, vec![p("1"), p("0")]);
        let lau = &a * &p("t^-3*M^-1");
        let m = eb.membership(&lau).unwrap();
        assert!(m.member);
        assert_eq!(&(&m.cofactors[0] * &a) + &(&m.cofactors[1] * &b), lau);
    }

    #[test]
    fn diophantine_examples() {
        let ord = MonomialOrder::lex();
        let a = p("t^2 - M^3");
        let b = p("t*M + 1");
        let s = dio_solve_pair(&a, &b, &a, &ord).unwrap();
        assert_eq!(s.particular, (p("1"), p("0")));
        let s = dio_solve_pair(&p("t"), &p("M"), &p("t + M"), &ord).unwrap();
        assert_eq!(s.particular, (p("1"), p("1")));
        assert_eq!(s.modulus, (p("M"), p("t")));
        assert!(matches!(dio_solve_pair(&p("t"), &p("M"), &p("1"), &ord), Err(Error::NotInIdeal(_))));
    }
}
