use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::expression::Expression;
use super::generator::Generator;
use crate::error::{Error, Result};

/// Values for generators at a single point.
pub type Point = BTreeMap<Generator, BigRational>;

fn lookup(point: &Point, g: Generator) -> Result<&BigRational> {
    point.get(&g).ok_or_else(|| Error::MissingAssignment(g.to_string()))
}

/// Exact value of `e` at `point`.
pub fn evaluate(e: &Expression, point: &Point) -> Result<BigRational> {
    let mut den = BigRational::one();
    for ((i, j), m) in e.denominator().factors() {
        let d = lookup(point, Generator::U(i as u8))? - lookup(point, Generator::U(j as u8))?;
        if d.is_zero() {
            return Err(Error::PoleHit(i, j));
        }
        den *= num_traits::pow(d, m as usize);
    }
    let mut total = BigRational::zero();
    for (m, c) in e.numerator().terms() {
        let mut v = c.to_big();
        for (g, k) in m.factors() {
            let x = lookup(point, g)?;
            if k >= 0 {
                v *= num_traits::pow(x.clone(), k as usize);
            } else {
                if x.is_zero() {
                    return Err(Error::PoleHit(0, 0));
                }
                v /= num_traits::pow(x.clone(), (-k) as usize);
            }
        }
        total += v;
    }
    Ok(total / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn direct_substitution() {
        let e = &Expression::u(1) * &Expression::inv_g(1);
        let p: Point = [(Generator::U(1), q(2, 1)), (Generator::S(1), q(3, 1))].into_iter().collect();
        assert_eq!(evaluate(&e, &p), Ok(q(2, 9)));
    }

    #[test]
    fn pole_and_missing() {
        let e = Expression::inv_delta(1, 2);
        let p: Point = [(Generator::U(1), q(1, 1)), (Generator::U(2), q(1, 1))].into_iter().collect();
        assert_eq!(evaluate(&e, &p), Err(Error::PoleHit(1, 2)));
        let p: Point = [(Generator::U(1), q(1, 1))].into_iter().collect();
        assert!(matches!(evaluate(&e, &p), Err(Error::MissingAssignment(_))));
    }
}
