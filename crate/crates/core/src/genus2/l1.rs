use super::formula::{sum1, sum2, sum3, sum4, sum5, sum_off, term};
use super::{inv_ss, s_over_cube, Formula, PredictionRoute};
use crate::context::Engine;
use crate::error::Result;
use crate::expr::{ExprSum, Expression};
use crate::rational::Rat;

type E = Expression;

fn g(i: usize) -> E {
    E::inv_g(i)
}

fn r(i: usize, j: usize) -> E {
    E::r(i, j)
}

fn rv(e: &Engine, i: usize, j: usize) -> E {
    &r(i, j) * &e.v(i, j)
}

fn prod(fs: &[&E]) -> E {
    fs.iter().fold(E::one(), |acc, f| &acc * *f)
}

/// Closed form of `L₁ F₂` in rotation coefficients, scaled by 1152.
pub fn l1f2_formula() -> Formula {
    Formula {
        name: "L1 F2 (rotation coefficients)",
        norm: Rat::int(1152),
        terms: vec![
            term!("t2_i/g_i^2", 6, 1, |e| sum1(e, |i| Ok(&e.t(2, i)? * &g(i).pow(2)))),
            term!("t2_i v_ij^2/g_i^2", 24, 1, |e| {
                sum2(e, |i, j| Ok(prod(&[&e.t(2, i)?, &g(i).pow(2), &e.v(i, j).pow(2)])))
            }),
            term!("theta_ij s_i/s_j^3", 6, 1, |e| sum_off(e, |i, j| Ok(&e.theta(i, j)? * &s_over_cube(i, j)))),
            term!("theta_ij v_ik v_jk/g_i", 48, 1, |e| {
                sum_off(e, |i, j| Ok(prod(&[&e.theta(i, j)?, &g(i), &sum1(e, |k| Ok(&e.v(i, k) * &e.v(j, k)))?])))
            }),
            term!("theta_ij v_ik^2/(s_i s_j)", 24, 1, |e| {
                sum_off(e, |i, j| Ok(prod(&[&e.theta(i, j)?, &inv_ss(i, j), &sum1(e, |k| Ok(e.v(i, k).pow(2)))?])))
            }),
            term!("theta_ij v_jk^2 s_i/s_j^3", 24, 1, |e| {
                sum_off(e, |i, j| {
                    Ok(prod(&[&e.theta(i, j)?, &s_over_cube(i, j), &sum1(e, |k| Ok(e.v(j, k).pow(2)))?]))
                })
            }),
            term!("r_ii^2/g_i", -72, 1, |e| sum1(e, |i| Ok(&r(i, i).pow(2) * &g(i)))),
            term!("r_ij^2/g_i", 57, 1, |e| sum2(e, |i, j| Ok(&r(i, j).pow(2) * &g(i)))),
            term!("r_ii r_ij v_ij/g_i", -144, 1, |e| sum2(e, |i, j| Ok(prod(&[&r(i, i), &rv(e, i, j), &g(i)])))),
            term!("r_ij r_ik/(s_j s_k)", 11, 4, |e| sum3(e, |i, j, k| Ok(prod(&[&r(i, j), &r(i, k), &inv_ss(j, k)])))),
            term!("r_ij r_ik v_ik/(s_i s_j)", 66, 1, |e| {
                sum3(e, |i, j, k| Ok(prod(&[&r(i, j), &rv(e, i, k), &inv_ss(i, j)])))
            }),
            term!("r_ij v_ij r_ik v_ik/g_i", -36, 1, |e| {
                sum3(e, |i, j, k| Ok(prod(&[&rv(e, i, j), &rv(e, i, k), &g(i)])))
            }),
            term!("r_jk^2 v_ij v_ik/(s_j s_k)", -288, 1, |e| {
                sum3(e, |i, j, k| Ok(prod(&[&r(j, k).pow(2), &e.v(i, j), &e.v(i, k), &inv_ss(j, k)])))
            }),
            term!("r_jk^2 v_ij^2/g_j", 240, 1, |e| {
                sum3(e, |i, j, k| Ok(prod(&[&r(j, k).pow(2), &e.v(i, j).pow(2), &g(j)])))
            }),
            term!("r_jl r_kl v_ij v_ik/g_l", -24, 1, |e| {
                sum4(e, |i, j, k, l| Ok(prod(&[&r(j, l), &r(k, l), &e.v(i, j), &e.v(i, k), &g(l)])))
            }),
            term!("r_jk r_kl v_ij^2/(s_j s_l)", 24, 1, |e| {
                sum4(e, |i, j, k, l| Ok(prod(&[&r(j, k), &r(k, l), &e.v(i, j).pow(2), &inv_ss(j, l)])))
            }),
            term!("r_jk r_kl v_kl v_ij v_ik/g_k", -576, 1, |e| {
                sum4(e, |i, j, k, l| Ok(prod(&[&r(j, k), &rv(e, k, l), &e.v(i, j), &e.v(i, k), &g(k)])))
            }),
            term!("r_jk r_kl v_kl v_ij^2/(s_j s_k)", 288, 1, |e| {
                sum4(e, |i, j, k, l| Ok(prod(&[&r(j, k), &rv(e, k, l), &e.v(i, j).pow(2), &inv_ss(j, k)])))
            }),
            term!("r_jp r_kl v_ij v_ik/(s_l s_p)", -1, 1, |e| {
                sum5(e, |i, j, k, l, p| Ok(prod(&[&r(j, p), &r(k, l), &e.v(i, j), &e.v(i, k), &inv_ss(l, p)])))
            }),
            term!("r_jp r_kl v_kl v_ij v_ik/(s_k s_p)", -24, 1, |e| {
                sum5(e, |i, j, k, l, p| Ok(prod(&[&r(j, p), &rv(e, k, l), &e.v(i, j), &e.v(i, k), &inv_ss(k, p)])))
            }),
            term!("r_jp v_jp r_kl v_kl v_ij v_ik/(s_j s_k)", -144, 1, |e| {
                sum5(e, |i, j, k, l, p| {
                    Ok(prod(&[&rv(e, j, p), &rv(e, k, l), &e.v(i, j), &e.v(i, k), &inv_ss(j, k)]))
                })
            }),
        ],
    }
}

impl Engine {
    /// `L₁ F₂`, the genus-2 part of the first Virasoro constraint.
    pub fn l1f2_target(&self) -> Result<Expression> {
        l1f2_formula().evaluate(self)
    }

    /// The value of `L₁ F₂` predicted from genus-1 data alone.
    pub fn prediction(&self, route: PredictionRoute) -> Result<Expression> {
        let mut out = ExprSum::new();
        for i in self.ctx().indices() {
            let inner = match route {
                PredictionRoute::Rotation => {
                    let mut t = ExprSum::new();
                    let phi_i = self.phi(&[i])?;
                    t.add_scaled(&self.phi(&[i, i])?, &Rat::new(1, 4));
                    t.add_scaled(&phi_i.pow(2), &Rat::new(1, 4));
                    for j in self.ctx().indices() {
                        for k in self.ctx().indices() {
                            let w = prod(&[&self.v(i, j), &self.v(i, k), &E::g(i), &inv_ss(j, k)]);
                            let p = &self.phi(&[j, k])? + &(&self.phi(&[j])? * &self.phi(&[k])?);
                            t.add_product(&w, &p, &Rat::ONE);
                        }
                    }
                    t.finish()
                }
                PredictionRoute::GStar => {
                    // bilinear expansion over G*(E_i) with the closed
                    // one- and two-point functions
                    let row = self.gstar(i)?;
                    let mut t = ExprSum::new();
                    let mut lin = ExprSum::new();
                    for j in self.ctx().indices() {
                        lin.add_product(&row[j - 1], &self.phi_closed(&[j])?, &Rat::ONE);
                        for k in self.ctx().indices() {
                            t.add_product(&(&row[j - 1] * &row[k - 1]), &self.phi_closed(&[j, k])?, &Rat::ONE);
                        }
                    }
                    t.add(&lin.finish().pow(2));
                    t.finish()
                }
            };
            out.add_product(&E::inv_g(i), &inner, &Rat::new(-1, 2));
        }
        Ok(out.finish())
    }
}
