//! Fraction-free (Bareiss) elimination over `Z[t, 1/t]`.

use crate::error::{Error, Result};
use crate::ratfun::RationalFunction;
use crate::unilaurent::LaurentT;

/// Solve `a x = b` exactly over the fraction field of `Z[t, 1/t]`.
///
/// `a` has at least as many rows as columns; surplus rows must be
/// consistent with the rest.
pub fn linsolve_fraction_free(a: &[Vec<LaurentT>], b: &[LaurentT]) -> Result<Vec<RationalFunction>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "right-hand side length must match row count");
    let cols = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");
    if rows < cols {
        return Err(Error::Singular { rank: rows, unknowns: cols });
    }
    let mut m: Vec<Vec<LaurentT>> =
        a.iter().zip(b).map(|(r, bi)| r.iter().cloned().chain(std::iter::once(bi.clone())).collect()).collect();
    let mut prev = LaurentT::one();
    for k in 0..cols {
        let Some(p) = (k..rows).find(|&i| !m[i][k].is_zero()) else {
            return Err(Error::Singular { rank: k, unknowns: cols });
        };
        m.swap(k, p);
        for i in k + 1..rows {
            for j in k + 1..=cols {
                let v = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = LaurentT::zero();
        }
        prev = m[k][k].clone();
    }
    if let Some(row) = (cols..rows).find(|&i| !m[i][cols].is_zero()) {
        return Err(Error::Inconsistent { row });
    }
    let mut x = vec![RationalFunction::zero(); cols];
    for k in (0..cols).rev() {
        let mut acc = RationalFunction::from(m[k][cols].to_multi());
        for j in k + 1..cols {
            if !m[k][j].is_zero() {
                acc = &acc - &(&RationalFunction::from(m[k][j].to_multi()) * &x[j]);
            }
        }
        x[k] = acc.checked_div(&RationalFunction::from(m[k][k].to_multi()))?;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(pairs: &[(i64, i64)]) -> LaurentT {
        LaurentT::from_pairs(pairs.iter().copied())
    }

    fn r(s: &str) -> RationalFunction {
        crate::expr::parse_expr(s).unwrap()
    }

    #[test]
    fn identity() {
        let a = vec![vec![t(&[(0, 1)]), LaurentT::zero()], vec![LaurentT::zero(), t(&[(0, 1)])]];
        let b = vec![t(&[(3, 2)]), t(&[(-1, 1)])];
        let x = linsolve_fraction_free(&a, &b).unwrap();
        assert_eq!(x, vec![r("2 t^3"), r("t^-1")]);
    }

    #[test]
    fn diagonal() {
        let a = vec![vec![t(&[(1, 1)]), LaurentT::zero()], vec![LaurentT::zero(), t(&[(2, 1)])]];
        let b = vec![t(&[(0, 1)]), t(&[(0, 1)])];
        assert_eq!(linsolve_fraction_free(&a, &b).unwrap(), vec![r("t^-1"), r("t^-2")]);
    }

    #[test]
    fn genuine_fractions() {
        // (t - 1) x + y = 1, x + y = 0
        let a = vec![vec![t(&[(1, 1), (0, -1)]), t(&[(0, 1)])], vec![t(&[(0, 1)]), t(&[(0, 1)])]];
        let b = vec![t(&[(0, 1)]), LaurentT::zero()];
        let x = linsolve_fraction_free(&a, &b).unwrap();
        assert_eq!(x, vec![r("1/(t - 2)"), r("-1/(t - 2)")]);
    }

    #[test]
    fn singular_and_inconsistent() {
        let one = t(&[(0, 1)]);
        let a = vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]];
        assert!(matches!(
            linsolve_fraction_free(&a, &[one.clone(), one.clone()]),
            Err(Error::Singular { rank: 1, unknowns: 2 })
        ));
        let a = vec![vec![one.clone()], vec![one.clone()]];
        assert!(matches!(
            linsolve_fraction_free(&a, &[one.clone(), t(&[(1, 1)])]),
            Err(Error::Inconsistent { row: 1 })
        ));
        assert!(linsolve_fraction_free(&a, &[one.clone(), one]).is_ok());
    }
}
