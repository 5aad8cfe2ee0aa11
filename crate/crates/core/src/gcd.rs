//! Polynomial gcd over the rationals.
//!
//! The general path is a recursive primitive pseudo-remainder sequence
//! (main variable `M` when present, coefficients in the remaining
//! variables). Products that are known factor by factor go through
//! [`Factored`], which only has to confirm coprimality of the unmatched
//! factors.

use num_traits::One;

use crate::laurent::{MultiLaurent, Var};

/// Greatest common divisor in the Laurent ring, returned as the canonical
/// associate: no monomial factor, primitive integer coefficients, positive
/// graded-lex leading coefficient. `gcd(p, 0)` is `p` normalized.
pub fn poly_gcd(p: &MultiLaurent, q: &MultiLaurent) -> MultiLaurent {
    if p.is_zero() {
        return q.canonical_associate();
    }
    if q.is_zero() {
        return p.canonical_associate();
    }
    let a = p.canonical_associate();
    let b = q.canonical_associate();
    if a == b {
        return a;
    }
    gcd_rec(&a, &b).canonical_associate()
}

/// `true` when `gcd(p, q)` is a unit of the Laurent ring.
pub fn coprime(p: &MultiLaurent, q: &MultiLaurent) -> bool {
    poly_gcd(p, q).is_one()
}

fn main_var(a: &MultiLaurent, b: &MultiLaurent) -> Option<Var> {
    [Var::M, Var::T, Var::X, Var::L].into_iter().find(|&v| a.uses(v) || b.uses(v))
}

/// Both inputs are nonzero polynomials.
fn gcd_rec(a: &MultiLaurent, b: &MultiLaurent) -> MultiLaurent {
    let Some(v) = main_var(a, b) else {
        return MultiLaurent::one();
    };
    if a.len() == 1 || b.len() == 1 {
        // a monomial shares at most a monomial with anything
        let common = a.min_exps().min(b.min_exps());
        return MultiLaurent::monomial(One::one(), common);
    }
    let (ca, pa) = content_in(a, v);
    let (cb, pb) = content_in(b, v);
    let c = gcd_rec(&ca, &cb);
    let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) { (pa, pb) } else { (pb, pa) };
    let h = loop {
        if g.degree_in(v) == 0 {
            break MultiLaurent::one();
        }
        let r = prem(&f, &g, v);
        if r.is_zero() {
            break g;
        }
        f = g;
        g = content_in(&r, v).1;
    };
    &c * &h
}

/// Content with respect to `v` (a polynomial in the other variables) and
/// the primitive part, both with integer coefficients.
fn content_in(a: &MultiLaurent, v: Var) -> (MultiLaurent, MultiLaurent) {
    let coeffs = a.coeffs_in(v);
    let mut cont: Option<MultiLaurent> = None;
    for c in coeffs.values() {
        let next = match cont {
            None => c.primitive().1,
            Some(ref g) if g.is_one() => break,
            Some(ref g) => gcd_rec(g, c).primitive().1,
        };
        cont = Some(next);
    }
    let cont = cont.unwrap_or_else(MultiLaurent::one);
    let pp = if cont.is_one() { a.primitive().1 } else { a.div_exact(&cont).expect("content divides").primitive().1 };
    (cont, pp)
}

/// Sparse pseudo-remainder of `f` by `g` in the variable `v`.
fn prem(f: &MultiLaurent, g: &MultiLaurent, v: Var) -> MultiLaurent {
    let dg = g.degree_in(v);
    let gc = g.coeffs_in(v);
    let lg = &gc[&dg];
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = r.degree_in(v);
        if dr < dg {
            break;
        }
        let lr = r.coeffs_in(v).remove(&dr).expect("top coefficient");
        let shift = crate::laurent::Mono::var(v, dr - dg);
        r = &(lg * &r) - &(&lr * &g.mul_mono(shift));
        r = r.primitive().1;
    }
    r
}

/// A product of polynomial factors with multiplicities, times a unit.
#[derive(Clone, Debug, PartialEq)]
pub struct Factored {
    pub unit: MultiLaurent,
    pub factors: Vec<(MultiLaurent, u32)>,
}

impl Factored {
    pub fn new(unit: MultiLaurent) -> Self {
        Self { unit, factors: Vec::new() }
    }

    /// Append a factor; its monomial part and content move into the unit.
    pub fn times(mut self, f: &MultiLaurent) -> Self {
        let (q, m) = f.normalize_to_poly();
        let (c, pp) = q.primitive();
        self.unit = self.unit.mul_mono(m.inv()).scale(&c);
        if pp.is_one() {
            return self;
        }
        match self.factors.iter_mut().find(|(g, _)| *g == pp) {
            Some((_, e)) => *e += 1,
            None => self.factors.push((pp, 1)),
        }
        self
    }

    pub fn expand(&self) -> MultiLaurent {
        let mut out = self.unit.clone();
        for (f, e) in &self.factors {
            out = &out * &f.pow(*e as i64).expect("nonnegative power");
        }
        out
    }

    /// gcd from matched factors, after confirming that no unmatched factor
    /// of `self` shares anything with an unmatched factor of `other`. Falls
    /// back to the general algorithm otherwise.
    pub fn gcd(&self, other: &Factored) -> MultiLaurent {
        let mut common = MultiLaurent::one();
        let mut rest_a = Vec::new();
        let mut rest_b: Vec<(MultiLaurent, u32)> = other.factors.clone();
        for (f, ea) in &self.factors {
            match rest_b.iter_mut().find(|(g, _)| g == f) {
                Some((_, eb)) => {
                    let k = (*ea).min(*eb);
                    common = &common * &f.pow(k as i64).expect("nonnegative power");
                    *eb -= k;
                    if *ea > k {
                        rest_a.push((f.clone(), ea - k));
                    }
                }
                None => rest_a.push((f.clone(), *ea)),
            }
        }
        rest_b.retain(|(_, e)| *e > 0);
        let clean = rest_a.iter().all(|(f, _)| rest_b.iter().all(|(g, _)| coprime(f, g)));
        if clean {
            common.canonical_associate()
        } else {
            poly_gcd(&self.expand(), &other.expand())
        }
    }
}
