//! Seeded generators and property checks shared by the property suite and
//! the acceptance runner. Each check builds its instance from a seed and
//! returns a description of the first violated identity.

#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qtorus_core::groebner::reduce;
use qtorus_core::jones::{habiro_bracket, DiscreteFunction};
use qtorus_core::laurent::Mono;
use qtorus_core::torus::commutative_sigma;
use qtorus_core::{LaurentT, MonomialOrder, MultiLaurent, Operator, Summand, Var};

pub type Check = std::result::Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coeff(r: &mut ChaCha8Rng, integral: bool) -> BigRational {
    let n = loop {
        let n: i64 = r.random_range(-6..=6);
        if n != 0 {
            break n;
        }
    };
    let d: i64 = if integral || r.random_bool(0.7) { 1 } else { r.random_range(2..=5) };
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A Laurent polynomial in `t, M` with a few terms and small exponents.
pub fn laurent(r: &mut ChaCha8Rng) -> MultiLaurent {
    laurent_with(r, false, -3..=3)
}

pub fn laurent_with(r: &mut ChaCha8Rng, integral: bool, exps: std::ops::RangeInclusive<i32>) -> MultiLaurent {
    let terms = r.random_range(1..=4);
    let mut p = MultiLaurent::zero();
    for _ in 0..terms {
        let m = Mono::tm(r.random_range(exps.clone()), r.random_range(exps.clone()));
        p.add_term(m, coeff(r, integral));
    }
    p
}

/// A polynomial (non-negative exponents) in `t, M`.
pub fn polynomial(r: &mut ChaCha8Rng) -> MultiLaurent {
    laurent_with(r, false, 0..=3)
}

/// A torus element with `L`-support in `[-2, 2]`.
pub fn operator(r: &mut ChaCha8Rng) -> Operator {
    let terms = r.random_range(1..=3);
    Operator::from_terms((0..terms).map(|_| (r.random_range(-2..=2), laurent_with(r, true, -2..=2))))
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, a: T, b: T) -> Check {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what}: {a:?} != {b:?}"))
    }
}

pub fn ring_axioms(seed: u64) -> Check {
    let r = &mut rng(seed);
    let (a, b, c) = (laurent(r), laurent(r), laurent(r));
    eq("a+b", &a + &b, &b + &a)?;
    eq("(a+b)+c", &(&a + &b) + &c, &a + &(&b + &c))?;
    eq("ab", &a * &b, &b * &a)?;
    eq("(ab)c", &(&a * &b) * &c, &a * &(&b * &c))?;
    eq("a(b+c)", &a * &(&b + &c), &(&a * &b) + &(&a * &c))?;
    eq("a+0", &a + &MultiLaurent::zero(), a.clone())?;
    eq("a*1", &a * &MultiLaurent::one(), a.clone())?;
    eq("a-a", (&a - &a.clone()).is_zero(), true)
}

pub fn qshift_homomorphism(seed: u64) -> Check {
    let r = &mut rng(seed);
    let (a, b) = (laurent(r), laurent(r));
    let (j, k) = (r.random_range(-3..=3), r.random_range(-3..=3));
    eq("product", (&a * &b).qshift(k), &a.qshift(k) * &b.qshift(k))?;
    eq("sum", (&a + &b).qshift(k), &a.qshift(k) + &b.qshift(k))?;
    eq("composition", a.qshift(j).qshift(k), a.qshift(j + k))
}

pub fn substitutions(seed: u64) -> Check {
    let r = &mut rng(seed);
    let (a, b) = (laurent(r), laurent(r));
    eq("invert_m product", (&a * &b).invert_m(), &a.invert_m() * &b.invert_m())?;
    eq("invert_m involution", a.invert_m().invert_m(), a.clone())?;
    eq("t=-1 product", (&a * &b).eval_t(-1), &a.eval_t(-1) * &b.eval_t(-1))?;
    eq("t=-1 sum", (&a + &b).eval_t(-1), &a.eval_t(-1) + &b.eval_t(-1))?;
    let n = r.random_range(-5..=5);
    eq("M=t^2n product", (&a * &b).eval_m_at_qn(n), &a.eval_m_at_qn(n) * &b.eval_m_at_qn(n))
}

pub fn normalize_round_trip(seed: u64) -> Check {
    let r = &mut rng(seed);
    let a = laurent(r);
    let (q, m) = a.normalize_to_poly();
    eq("polynomial", q.is_polynomial(), true)?;
    eq("round trip", q.mul_mono(m.inv()), a)
}

pub fn gcd_divides(seed: u64) -> Check {
    let r = &mut rng(seed);
    let common = polynomial(r);
    let a = &common * &polynomial(r);
    let b = &common * &polynomial(r);
    let g = qtorus_core::gcd::poly_gcd(&a, &b);
    let ag = a.div_exact(&g).ok_or("gcd does not divide a")?;
    let bg = b.div_exact(&g).ok_or("gcd does not divide b")?;
    eq("cofactors coprime", qtorus_core::gcd::poly_gcd(&ag, &bg).is_one(), true)?;
    eq("common factor divides gcd", g.div_exact(&common).is_some(), true)
}

pub fn symmetric_split(seed: u64) -> Check {
    let r = &mut rng(seed);
    let a = laurent(r);
    let s = &a + &a.invert_m();
    let k = s.symmetric_split().map_err(|e| e.to_string())?;
    eq("k + k(1/M)", &k + &k.invert_m(), s)
}

pub fn torus_associative(seed: u64) -> Check {
    let r = &mut rng(seed);
    let (u, v, w) = (operator(r), operator(r), operator(r));
    eq("(uv)w", &(&u * &v) * &w, &u * &(&v * &w))?;
    eq("1u", &Operator::one() * &u, u.clone())?;
    eq("u1", &u * &Operator::one(), u)
}

pub fn sigma_automorphism(seed: u64) -> Check {
    let r = &mut rng(seed);
    let (u, v) = (operator(r), operator(r));
    eq("sigma(uv)", (&u * &v).sigma(), &u.sigma() * &v.sigma())?;
    eq("sigma involution", u.sigma().sigma(), u)
}

pub fn epsilon_homomorphism(seed: u64) -> Check {
    let r = &mut rng(seed);
    let (u, v) = (operator(r), operator(r));
    eq("eps(uv)", (&u * &v).epsilon(), &u.epsilon() * &v.epsilon())?;
    eq("eps(u+v)", (&u + &v).epsilon(), &u.epsilon() + &v.epsilon())?;
    eq("eps sigma", u.sigma().epsilon(), commutative_sigma(&u.epsilon()))
}

/// A sequence with unrelated values at every color.
fn test_sequence(seed: u64) -> DiscreteFunction {
    DiscreteFunction::from_fn(move |n| {
        let r = &mut rng(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let terms: Vec<(i64, i64)> = (0..3).map(|_| (r.random_range(-6..=6), r.random_range(-4..=4))).collect();
        LaurentT::from_pairs(terms)
    })
}

/// `(uv) f = u (v f)` pointwise, and a nonzero `u` moves some delta
/// sequence to a nonzero one.
pub fn faithful_action(seed: u64) -> Check {
    let r = &mut rng(seed);
    let (u, v) = (operator(r), operator(r));
    let f = Arc::new(test_sequence(seed));
    let vf = DiscreteFunction::from_operator(v.clone(), f.clone());
    let uv = &u * &v;
    for n in [-3, 0, 2, 7] {
        let lhs = uv.act(&f, n).map_err(|e| e.to_string())?;
        let rhs = u.act(&vf, n).map_err(|e| e.to_string())?;
        eq("(uv)f", lhs, rhs)?;
    }
    let moved = (-4..=4).any(|n0| {
        let delta = DiscreteFunction::from_fn(move |n| if n == n0 { LaurentT::one() } else { LaurentT::zero() });
        (n0 - 2..=n0 + 2).any(|n| !u.act(&delta, n).map(|v| v.is_zero()).unwrap_or(true))
    });
    eq("nonzero action", moved, !u.is_zero())
}

pub fn reduce_contract(seed: u64) -> Check {
    let r = &mut rng(seed);
    let gens = [polynomial(r), polynomial(r)];
    if gens.iter().any(MultiLaurent::is_zero) {
        return Ok(());
    }
    let f = &(&polynomial(r) * &gens[0]) + &polynomial(r);
    for order in [MonomialOrder::lex(), MonomialOrder::grevlex()] {
        let (q, rem) = reduce(&f, &gens, &order).map_err(|e| e.to_string())?;
        let back = q.iter().zip(&gens).fold(rem.clone(), |acc, (q, g)| &acc + &(q * g));
        eq("reconstruction", back, f.clone())?;
        for g in &gens {
            let lm = order.leading(g).expect("nonzero").0;
            if rem.terms().any(|(m, _)| lm.divides(m)) {
                return Err(format!("remainder term divisible by {lm:?} under {order}"));
            }
        }
    }
    Ok(())
}

/// `A p0 + B p1 = C` for small random `A, B` and `C` in their ideal; every
/// member of the family solves it and two solutions differ by a multiple
/// of the modulus.
pub fn dio_family(seed: u64) -> Check {
    let r = &mut rng(seed);
    let (a, b) = (polynomial(r), polynomial(r));
    if a.is_zero() || b.is_zero() {
        return Ok(());
    }
    let (x, y) = (polynomial(r), polynomial(r));
    let c = &(&a * &x) + &(&b * &y);
    let sol = qtorus_core::dio_solve_pair(&a, &b, &c, &MonomialOrder::lex()).map_err(|e| e.to_string())?;
    let f = laurent(r);
    let (p0, p1) = sol.shifted(&f);
    eq("family member solves", &(&a * &p0) + &(&b * &p1), c.clone())?;
    eq("recovered parameter", sol.parameter_of(&p0, &p1), Some(f))?;
    eq("given solution in family", sol.parameter_of(&x, &y).is_some(), true)
}

fn summand(r: &mut ChaCha8Rng) -> MultiLaurent {
    let terms = r.random_range(1..=3);
    let mut q = MultiLaurent::zero();
    for _ in 0..terms {
        let m = Mono::tm(r.random_range(-2..=2), r.random_range(-1..=1)).with(Var::X, r.random_range(0..=2));
        q.add_term(m, coeff(r, true));
    }
    q
}

pub fn bracket_linearity(seed: u64) -> Check {
    let r = &mut rng(seed);
    let (q, s) = (summand(r), summand(r));
    let c = laurent_with(r, true, -2..=2);
    let n = r.random_range(1..=6);
    let br = |p: &MultiLaurent| Summand::new(p.clone()).map(|s| habiro_bracket(&s, n)).map_err(|e| e.to_string());
    eq("sum", br(&(&q + &s))?, &br(&q)? + &br(&s)?)?;
    let cn = LaurentT::from_multi(&c.eval_m_at_qn(n)).map_err(|e| e.to_string())?;
    eq("scalar", br(&(&c * &q))?, &cn * &br(&q)?)?;
    eq("odd", habiro_bracket(&Summand::new(q.clone()).unwrap(), -n), -&br(&q)?)
}

pub fn grammar_round_trip(seed: u64) -> Check {
    let r = &mut rng(seed);
    let a = laurent(r);
    let text = a.to_string();
    let back: MultiLaurent = text.parse().map_err(|e: qtorus_core::Error| e.to_string())?;
    eq("round trip", back, a)
}

fn table() -> Arc<qtorus_core::RelationTable> {
    qtorus_core::RelationTable::paper_resolved().expect("relation rows fit")
}

/// Reduction against the relation table is linear over `Q(t)[M]`.
pub fn cx_linearity(seed: u64) -> Check {
    use qtorus_core::bracket::apply_operator;
    let r = &mut rng(seed);
    let (u, v) = (operator(r), operator(r));
    let c = laurent_with(r, true, -2..=2);
    let t = table();
    let ap = |p: &Operator| apply_operator(p, &t).map_err(|e| e.to_string());
    let (a, b, s) = (ap(&u)?, ap(&v)?, ap(&(&u + &v))?);
    eq("c1 of sum", s.c1.clone(), &a.c1 + &b.c1)?;
    eq("cx of sum", s.cx.clone(), &a.cx + &b.cx)?;
    let rem = |x: &qtorus_core::bracket::BracketVector| x.remainder.clone().expect("resolved table");
    eq("remainder of sum", rem(&s), &rem(&a) + &rem(&b))?;
    let scaled = ap(&u.scale_left(&c))?;
    eq("cx of multiple", scaled.cx, &c * &a.cx)
}

/// The symbolic reduction and direct evaluation of `u <1>` agree.
pub fn symbolic_matches_pointwise(seed: u64) -> Check {
    use qtorus_core::bracket::apply_operator;
    let r = &mut rng(seed);
    let u = operator(r);
    let v = apply_operator(&u, &table()).map_err(|e| e.to_string())?;
    let j = qtorus_core::jones_fig8();
    for n in 1..=4 {
        let (scaled, d) = v.evaluate_scaled(n).map_err(|e| e.to_string())?;
        let direct = u.act(&j, n).map_err(|e| e.to_string())?;
        eq("d (u J)(n)", &d * &direct, scaled)?;
    }
    Ok(())
}

/// Every named property with its check, in a fixed order.
pub type Property = (&'static str, fn(u64) -> Check);

pub const PROPERTIES: &[Property] = &[
    ("ring axioms", ring_axioms),
    ("qshift homomorphism", qshift_homomorphism),
    ("substitution homomorphisms", substitutions),
    ("normalize round trip", normalize_round_trip),
    ("gcd divides", gcd_divides),
    ("symmetric split", symmetric_split),
    ("torus associativity", torus_associative),
    ("sigma automorphism", sigma_automorphism),
    ("epsilon homomorphism", epsilon_homomorphism),
    ("faithful action", faithful_action),
    ("reduce contract", reduce_contract),
    ("diophantine family", dio_family),
    ("bracket linearity", bracket_linearity),
    ("grammar round trip", grammar_round_trip),
    ("cx linearity", cx_linearity),
    ("symbolic matches pointwise", symbolic_matches_pointwise),
];
