//! Images of the generators under each derivation.

use super::{complete_h, u_pow, VectorId};
use crate::context::Engine;
use crate::error::{Error, Result};
use crate::expr::{ExprSum, Expression, Generator};
use crate::rational::Rat;

/// A vector field `W` known only through its pairings with the
/// idempotents: `a_i = <W, E_i>`, `b_i = <τ₋W, E_i>`, `c_i = <τ₋²W, E_i>`.
/// Enough to act on `u`, `s`, `r`; t-generators need more data.
#[derive(Clone, Debug)]
pub struct VectorFieldData {
    pub a: Vec<Expression>,
    pub b: Vec<Expression>,
    pub c: Vec<Expression>,
}

impl VectorFieldData {
    fn a(&self, i: usize) -> &Expression {
        &self.a[i - 1]
    }
}

fn int(n: i64) -> Expression {
    Expression::int(n)
}

impl Engine {
    pub(crate) fn e_image(&self, k: usize, g: Generator) -> Result<Expression> {
        let n = self.n();
        Ok(match g {
            Generator::U(i) => int((i as usize == k) as i64),
            Generator::S(i) => &Expression::r(i as usize, k) * &Expression::s(k),
            Generator::R(i, j) => {
                let (i, j) = (i as usize, j as usize);
                if i != j {
                    let mut acc = &Expression::r(i, k) * &Expression::r(j, k);
                    if k == i {
                        acc = &acc + &self.theta(i, j)?;
                    }
                    if k == j {
                        acc = &acc + &self.theta(j, i)?;
                    }
                    acc
                } else if k != i {
                    &Expression::r(i, k).pow(2) + &(&Expression::s_ratio(k, i) * &self.theta(i, k)?)
                } else {
                    let mut acc = ExprSum::new();
                    acc.add(&Expression::r(i, i).pow(2));
                    for l in 1..=n {
                        acc.add_scaled(&Expression::r(i, l).pow(2), &Rat::int(-2));
                        if l != i {
                            acc.add_product(&Expression::s_ratio(l, i), &self.theta(l, i)?, &Rat::ONE);
                        }
                    }
                    acc.add_product(&self.t(2, i)?, &Expression::inv_g(i), &Rat::ONE);
                    acc.finish()
                }
            }
            Generator::T(level, i) => {
                let (level, i) = (level as usize, i as usize);
                let mut acc = ExprSum::new();
                let rik = Expression::r(i, k);
                acc.add_product(&(&rik * &Expression::s_ratio(i, k)), &self.s_pairing(level as i32, k)?, &Rat::ONE);
                acc.add_product(&(&rik * &Expression::s_ratio(k, i)), &self.s_pairing(level as i32, i)?, &Rat::ONE);
                if i == k {
                    acc.add(&self.t(level + 1, i)?);
                    for m in 1..=n {
                        let c = &Expression::r(i, m) * &Expression::s_ratio(i, m);
                        acc.add_product(&c, &self.s_pairing(level as i32, m)?, &Rat::int(-1));
                    }
                }
                acc.finish()
            }
        })
    }

    pub(crate) fn t_xbar_image(&self, g: Generator) -> Result<Expression> {
        Ok(match g {
            Generator::U(_) => Expression::zero(),
            Generator::S(i) => -(&Expression::u(i as usize) * &Expression::s(i as usize)),
            Generator::R(i, j) if i == j => {
                let i = i as usize;
                self.sum(|k| {
                    &(&Expression::r(i, k) * &Expression::u(k)) * &Expression::s_ratio(k, i)
                })
            }
            Generator::R(..) => Expression::zero(),
            Generator::T(_, i) => -(&Expression::u(i as usize) * &Expression::gen(g)),
        })
    }

    pub(crate) fn l_image(&self, m: i32, g: Generator) -> Result<Expression> {
        if m == -1 {
            // L_{-1} = -S: only the coordinates move.
            return Ok(match g {
                Generator::U(_) => int(-1),
                _ => Expression::zero(),
            });
        }
        let n = self.n();
        let up = |i: usize, k: i32| u_pow(i, k);
        let three_halves_m1 = Rat::new(3 * (m as i64 + 1), 2);
        Ok(match g {
            Generator::U(i) => -up(i as usize, m + 1),
            Generator::S(i) => {
                let i = i as usize;
                (&up(i, m) * &Expression::s(i)).scale(&three_halves_m1)
            }
            Generator::R(i, j) if i != j => {
                let (i, j) = (i as usize, j as usize);
                let h = complete_h(i, j, m);
                let mut acc = ExprSum::new();
                acc.add_product(&Expression::r(i, j), &h, &Rat::ONE);
                for k in 1..=n {
                    let bracket = &(&up(j, m + 1) - &up(k, m + 1)) + &(&Expression::delta(k, j) * &h);
                    acc.add_product(&(&Expression::r(i, k) * &Expression::r(j, k)), &bracket, &Rat::ONE);
                }
                acc.finish()
            }
            Generator::R(i, _) => {
                let i = i as usize;
                let mut acc = ExprSum::new();
                if m >= 1 {
                    let ml = m as i64;
                    acc.add_scaled(&up(i, m - 1), &Rat::new(15 * ml * (ml + 1), 8));
                }
                acc.add_product(&up(i, m), &Expression::r(i, i), &Rat::int(m as i64 + 1));
                for k in 1..=n {
                    let quad = &(&(&up(i, m) * &Expression::u(k)).scale(&Rat::int(m as i64 + 1))
                        - &up(i, m + 1).scale(&Rat::int(m as i64)))
                        - &up(k, m + 1);
                    acc.add_product(&Expression::r(i, k).pow(2), &quad, &Rat::ONE);
                }
                acc.finish()
            }
            Generator::T(level, i) => {
                let (level, i) = (level as usize, i as usize);
                let t = Expression::gen(g);
                let mut acc = ExprSum::new();
                acc.sub(&self.pairing(VectorId::L(m), level + 1, i)?);
                acc.add_product(&up(i, m + 1), &self.t(level + 1, i)?, &Rat::int(-1));
                acc.add_product(&up(i, m), &t, &three_halves_m1);
                for j in 1..=n {
                    if j == i {
                        continue;
                    }
                    let c = &(&(&up(i, m + 1) - &up(j, m + 1)) * &Expression::r(i, j)) * &Expression::s_ratio(i, j);
                    acc.add_product(&c, &Expression::t(level, j), &Rat::ONE);
                }
                acc.finish()
            }
        })
    }

    pub(crate) fn vector_field_image(&self, w: &VectorFieldData, g: Generator) -> Result<Expression> {
        let n = self.n();
        // a_k / g_k
        let ag = |k: usize| w.a(k) * &Expression::inv_g(k);
        Ok(match g {
            Generator::U(i) => ag(i as usize),
            Generator::S(i) => {
                let i = i as usize;
                let mut acc = ExprSum::new();
                acc.add_product(&w.b[i - 1], &Expression::s_pow(i, -1), &Rat::int(-1));
                for j in 1..=n {
                    let c = &Expression::r(i, j) * &Expression::s_pow(j, -1);
                    acc.add_product(&c, w.a(j), &Rat::ONE);
                }
                acc.finish()
            }
            Generator::R(i, j) if i != j => {
                let (i, j) = (i as usize, j as usize);
                let mut acc = ExprSum::new();
                acc.add_product(&ag(i), &self.theta(i, j)?, &Rat::ONE);
                acc.add_product(&ag(j), &self.theta(j, i)?, &Rat::ONE);
                for k in 1..=n {
                    acc.add_product(&ag(k), &(&Expression::r(i, k) * &Expression::r(j, k)), &Rat::ONE);
                }
                acc.finish()
            }
            Generator::R(i, _) => {
                let i = i as usize;
                let mut acc = ExprSum::new();
                for j in (1..=n).filter(|&j| j != i) {
                    let inner = &(&ag(j) * &self.theta(i, j)?) + &(&ag(i) * &self.theta(j, i)?);
                    acc.add_product(&inner, &Expression::s_ratio(j, i), &Rat::ONE);
                }
                acc.add_product(&w.c[i - 1], &Expression::inv_g(i), &Rat::int(-1));
                acc.add_product(&(&ag(i) * &Expression::inv_g(i)), &self.t(2, i)?, &Rat::ONE);
                for j in 1..=n {
                    let c = &(&Expression::r(i, j) * &Expression::s_pow(i, -1)) * &Expression::s_pow(j, -1);
                    acc.add_product(&c, &w.b[j - 1], &Rat::ONE);
                    let bracket = &ag(j) - &ag(i).scale(&Rat::int(2));
                    acc.add_product(&Expression::r(i, j).pow(2), &bracket, &Rat::ONE);
                }
                acc.finish()
            }
            Generator::T(level, _) => {
                return Err(Error::UnsupportedPairing { vector: "general vector field".into(), level: level as usize })
            }
        })
    }
}
