use super::inv_gg;
use crate::context::Engine;
use crate::derivation::VectorId;
use crate::error::Result;
use crate::expr::{ExprSum, Expression};
use crate::rational::Rat;

/// Vector fields whose `A₁` tensor enters the genus-2 formulas.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum A1Arg {
    /// `τ₋(S)`
    TauS,
    /// `τ₋²(L₀)`
    Tau2L0,
    /// `τ₋²(L₁)`
    Tau2L1,
}

fn q(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

/// `1 - 2δ_ij`
fn sign_delta(i: usize, j: usize) -> Rat {
    if i == j {
        Rat::int(-1)
    } else {
        Rat::ONE
    }
}

impl Engine {
    /// The pairing data `(a, b, c)` of one of the fixed vector fields.
    pub fn a1_data(&self, w: A1Arg) -> Result<[Vec<Expression>; 3]> {
        let level = |k: usize| -> Result<Vec<Expression>> {
            self.ctx()
                .indices()
                .map(|i| match w {
                    // the string field sits one level lower
                    A1Arg::TauS => self.s_pairing(k as i32 - 1, i),
                    A1Arg::Tau2L0 => self.pairing(VectorId::L(0), k, i),
                    A1Arg::Tau2L1 => self.pairing(VectorId::L(1), k, i),
                })
                .collect()
        };
        Ok([level(2)?, level(3)?, level(4)?])
    }

    pub fn a1_of(&self, w: A1Arg) -> Result<Expression> {
        let [a, b, c] = self.a1_data(w)?;
        self.a1(&a, &b, &c)
    }

    /// `A₁(W)` for a vector field given by `a_i = <W,E_i>`,
    /// `b_i = <τ₋W,E_i>`, `c_i = <τ₋²W,E_i>`.
    pub fn a1(&self, a: &[Expression], b: &[Expression], c: &[Expression]) -> Result<Expression> {
        let idx = || self.ctx().indices();
        let mut out = ExprSum::new();
        for i in idx() {
            let gi = Expression::inv_g(i);
            let phi_i = self.phi(&[i])?;

            // coefficient of a_i / g_i
            let mut ca = ExprSum::new();
            ca.add_product(&gi, &phi_i.pow(2), &q(7, 10));
            ca.add_product(&gi, &self.phi(&[i, i])?, &q(1, 10));
            for j in idx() {
                ca.add_product(&Expression::inv_g(j), &self.phi(&[i, j])?, &q(-1, 240));
                for k in idx() {
                    let w = inv_gg(j, k);
                    ca.add_product(&w, &(&self.z(&[i, j, j, k])? * &self.phi(&[k])?), &q(13, 240));
                    ca.add_product(&w, &self.z(&[i, j, j, k, k])?, &q(1, 960));
                }
            }
            out.add_product(&(&a[i - 1] * &gi), &ca.finish(), &Rat::ONE);

            // coefficient of b_i / g_i
            let mut cb = ExprSum::new();
            cb.add_product(&gi, &phi_i, &q(1, 20));
            for j in idx() {
                cb.add_product(&inv_gg(i, j), &self.z(&[i, i, j, j])?, &q(1, 480));
                for k in idx() {
                    cb.add_product(&inv_gg(j, k), &self.z(&[i, j, k, k])?, &q(1, 1152));
                }
            }
            out.add_product(&(&b[i - 1] * &gi), &cb.finish(), &Rat::ONE);

            out.add_product(&c[i - 1], &gi.pow(2), &q(1, 1152));
        }
        Ok(out.finish())
    }

    /// `B(E_i, E_i, E_i)`.
    pub fn b_diag(&self, i: usize) -> Result<Expression> {
        self.check_index(i)?;
        let idx = || self.ctx().indices();
        let z = |k: &[usize]| self.z(k);
        let phi = |k: &[usize]| self.phi(k);
        let mut out = ExprSum::new();
        for j in idx() {
            let gj = Expression::inv_g(j);
            let sd = sign_delta(i, j);
            for k in idx() {
                let w = inv_gg(j, k);
                let mut t = ExprSum::new();
                t.add_product(&z(&[i, i, i, j, k])?, &(&phi(&[j])? * &phi(&[k])?), &q(1, 5));
                t.add_product(&z(&[i, i, i, j])?, &(&phi(&[j, k])? * &phi(&[k])?), &q(-6, 5));
                t.add_product(&z(&[i, i, j, k])?, &(&phi(&[j])? * &phi(&[i, k])?), &q(-6, 5));
                t.add_product(&z(&[i, i, i, j, j, k])?, &phi(&[k])?, &q(1, 120));
                t.add_product(&z(&[i, i, i, j, k])?, &phi(&[j, k])?, &q(1, 10));
                t.add_product(&z(&[i, i, i, j])?, &phi(&[j, k, k])?, &q(-1, 20));
                t.add_product(&z(&[i, i, j, j, k])?, &phi(&[i, k])?, &q(-3, 40));
                t.add_product(&z(&[i, j, j, k])?, &phi(&[i, i, k])?, &q(3, 40));
                t.add_product(&z(&[i, i, j, k])?, &phi(&[i, j, k])?, &q(-3, 10));
                out.add_product(&w, &t.finish(), &Rat::ONE);
            }
            let mut t = ExprSum::new();
            t.add_scaled(&phi(&[i, j])?.pow(2), &(&q(9, 5) * &sd));
            t.add_product(&phi(&[i, i, j])?, &phi(&[j])?, &(&q(-6, 5) * &sd));
            t.add_scaled(&phi(&[i, i, i, j])?, &q(-1, 120));
            t.add_scaled(&phi(&[i, i, j, j])?, &(&q(-1, 20) * &sd));
            out.add_product(&gj, &t.finish(), &Rat::ONE);
        }
        Ok(out.finish())
    }
}
