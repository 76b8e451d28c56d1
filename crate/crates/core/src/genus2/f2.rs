use super::formula::{sum1, sum2, sum3, sum4, sum_off, term};
use super::{inv_ss, s_over_cube, A1Arg, F2Route, Formula};
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

/// `r_ij v_ij`
fn rv(e: &Engine, i: usize, j: usize) -> E {
    &r(i, j) * &e.v(i, j)
}

fn prod(fs: &[&E]) -> E {
    fs.iter().fold(E::one(), |acc, f| &acc * *f)
}

/// The rotation-coefficient form of `F₂`, scaled by 5760.
pub fn f2_rotation_formula() -> Formula {
    Formula {
        name: "F2 (rotation coefficients)",
        norm: Rat::int(5760),
        terms: vec![
            term!("t3_i/g_i^2", -5, 1, |e| sum1(e, |i| Ok(&e.t(3, i)? * &g(i).pow(2)))),
            term!("Omega_ij s_i/s_j^3", 5, 1, |e| sum_off(e, |i, j| Ok(&e.omega(i, j)? * &s_over_cube(i, j)))),
            term!("-Omega_ij/(s_i s_j)", -5, 1, |e| sum_off(e, |i, j| Ok(&e.omega(i, j)? * &inv_ss(i, j)))),
            term!("t2_i r_ii/g_i^2", 24, 1, |e| sum1(e, |i| Ok(prod(&[&e.t(2, i)?, &r(i, i), &g(i).pow(2)])))),
            term!("t2_i r_ij s_i/(g_i s_j^3)", 5, 1, |e| {
                sum2(e, |i, j| Ok(prod(&[&e.t(2, i)?, &g(i), &r(i, j), &s_over_cube(i, j)])))
            }),
            term!("t2_i r_ij v_ij/g_i^2", 144, 1, |e| {
                sum2(e, |i, j| Ok(prod(&[&e.t(2, i)?, &g(i).pow(2), &rv(e, i, j)])))
            }),
            term!("theta_ij r_ii s_j/s_i^3", -24, 1, |e| {
                sum_off(e, |i, j| Ok(prod(&[&e.theta(i, j)?, &r(i, i), &s_over_cube(j, i)])))
            }),
            term!("theta_ij r_ij/g_j", 200, 1, |e| sum_off(e, |i, j| Ok(prod(&[&e.theta(i, j)?, &r(i, j), &g(j)])))),
            term!("theta_ij r_ik v_ik/(s_i s_j)", 120, 1, |e| {
                sum_off(e, |i, j| Ok(prod(&[&e.theta(i, j)?, &inv_ss(i, j), &sum1(e, |k| Ok(rv(e, i, k)))?])))
            }),
            term!("theta_ij r_ik v_ik s_j/s_i^3", -144, 1, |e| {
                sum_off(e, |i, j| Ok(prod(&[&e.theta(i, j)?, &s_over_cube(j, i), &sum1(e, |k| Ok(rv(e, i, k)))?])))
            }),
            term!("theta_ij r_jk v_ik/g_i", 85, 1, |e| {
                sum_off(e, |i, j| {
                    Ok(prod(&[&e.theta(i, j)?, &g(i), &sum1(e, |k| Ok(&r(j, k) * &e.v(i, k)))?]))
                })
            }),
            term!("theta_ij r_jk v_ik/g_j", 45, 1, |e| {
                sum_off(e, |i, j| {
                    Ok(prod(&[&e.theta(i, j)?, &g(j), &sum1(e, |k| Ok(&r(j, k) * &e.v(i, k)))?]))
                })
            }),
            term!("r_ii^3/g_i", -576, 1, |e| sum1(e, |i| Ok(&r(i, i).pow(3) * &g(i)))),
            term!("(sum_j r_ij v_ij)^3/g_i", -576, 1, |e| {
                sum1(e, |i| Ok(&sum1(e, |j| Ok(rv(e, i, j)))?.pow(3) * &g(i)))
            }),
            term!("r_ij^3/(s_i s_j)", 480, 1, |e| sum2(e, |i, j| Ok(&r(i, j).pow(3) * &inv_ss(i, j)))),
            term!("r_ii r_ij^2/g_i", -23, 1, |e| sum2(e, |i, j| Ok(prod(&[&r(i, i), &r(i, j).pow(2), &g(i)])))),
            term!("r_ii^2 r_ij v_ij/g_i", -1728, 1, |e| {
                sum2(e, |i, j| Ok(prod(&[&r(i, i).pow(2), &rv(e, i, j), &g(i)])))
            }),
            term!("r_ii r_ik r_jk s_j/s_i^3", -24, 1, |e| {
                sum3(e, |i, j, k| Ok(prod(&[&r(i, i), &r(i, k), &r(j, k), &s_over_cube(j, i)])))
            }),
            term!("r_ij r_ik r_jk/g_i", 115, 1, |e| {
                sum3(e, |i, j, k| Ok(prod(&[&r(i, j), &r(i, k), &r(j, k), &g(i)])))
            }),
            term!("r_ik^2 r_ij v_ij/g_i", 1452, 1, |e| {
                sum3(e, |i, j, k| Ok(prod(&[&r(i, k).pow(2), &rv(e, i, j), &g(i)])))
            }),
            term!("r_ii r_ij v_ij r_ik v_ik/g_i", -1728, 1, |e| {
                sum3(e, |i, j, k| Ok(prod(&[&r(i, i), &rv(e, i, j), &rv(e, i, k), &g(i)])))
            }),
            term!("r_ik r_jk r_il v_il/(s_i s_j)", 120, 1, |e| {
                sum4(e, |i, j, k, l| Ok(prod(&[&r(i, k), &r(j, k), &rv(e, i, l), &inv_ss(i, j)])))
            }),
            term!("r_ij r_il r_jk v_jk s_l/s_j^3", -144, 1, |e| {
                sum4(e, |i, j, k, l| Ok(prod(&[&r(i, j), &r(i, l), &rv(e, j, k), &s_over_cube(l, j)])))
            }),
            term!("r_ik r_jk r_il v_jl/g_i", -40, 1, |e| {
                sum4(e, |i, j, k, l| Ok(prod(&[&r(i, k), &r(j, k), &r(i, l), &e.v(j, l), &g(i)])))
            }),
            term!("r_ij r_ik v_ik r_jl v_jl/(s_i s_j)", 720, 1, |e| {
                sum4(e, |i, j, k, l| Ok(prod(&[&r(i, j), &rv(e, i, k), &rv(e, j, l), &inv_ss(i, j)])))
            }),
        ],
    }
}

impl Engine {
    /// The genus-2 generating function.
    pub fn f2(&self, route: F2Route) -> Result<Expression> {
        match route {
            F2Route::Rotation => f2_rotation_formula().evaluate(self),
            F2Route::Assembled => {
                let mut acc = ExprSum::new();
                acc.add_scaled(&self.a1_of(A1Arg::TauS)?, &Rat::new(1, 2));
                acc.add_scaled(&self.a1_of(A1Arg::Tau2L0)?, &Rat::new(1, 3));
                for i in self.ctx().indices() {
                    acc.add_product(&E::u(i), &self.b_diag(i)?, &Rat::new(-1, 6));
                }
                Ok(acc.finish())
            }
        }
    }
}
