use crate::context::Engine;
use crate::error::{Error, Result};
use crate::expr::{ExprSum, Expression};
use crate::rational::Rat;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum SpecialKind {
    V,
    Theta,
    Omega,
    Lambda,
}

impl SpecialKind {
    pub fn parse(s: &str) -> Option<SpecialKind> {
        match s {
            "v" => Some(SpecialKind::V),
            "theta" => Some(SpecialKind::Theta),
            "omega" => Some(SpecialKind::Omega),
            "lambda" => Some(SpecialKind::Lambda),
            _ => None,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpecialKey(pub SpecialKind, pub u8, pub u8);

impl Engine {
    pub fn special(&self, kind: SpecialKind, i: usize, j: usize) -> Result<Expression> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return match kind {
                SpecialKind::V => Ok(Expression::zero()),
                _ => Err(Error::BadIndexPair(i, j)),
            };
        }
        self.specials.get_or_try(&SpecialKey(kind, i as u8, j as u8), || match kind {
            SpecialKind::V => Ok(&Expression::delta(j, i) * &Expression::r(i, j)),
            SpecialKind::Theta => self.build_theta(i, j),
            SpecialKind::Omega => self.build_omega(i, j),
            SpecialKind::Lambda => self.build_lambda(i, j),
        })
    }

    /// `v_ij = (u_j - u_i) r_ij`; zero on the diagonal.
    pub fn v(&self, i: usize, j: usize) -> Expression {
        if i == j {
            return Expression::zero();
        }
        self.special(SpecialKind::V, i, j).expect("index in range")
    }

    pub fn theta(&self, i: usize, j: usize) -> Result<Expression> {
        self.special(SpecialKind::Theta, i, j)
    }

    pub fn omega(&self, i: usize, j: usize) -> Result<Expression> {
        self.special(SpecialKind::Omega, i, j)
    }

    pub fn lambda(&self, i: usize, j: usize) -> Result<Expression> {
        self.special(SpecialKind::Lambda, i, j)
    }

    /// Diagonal extension of theta: `t_{2,i}/g_i - 2 sum_l r_il^2`, the part of
    /// `E_i r_ii` that plays the role of `theta_ii`. Needed for the `k = i`
    /// term in the lambda sum.
    pub fn theta_diag(&self, i: usize) -> Result<Expression> {
        self.check_index(i)?;
        let sq = self.sum(|l| Expression::r(i, l).pow(2));
        Ok(&(&Expression::inv_g(i) * &Expression::t(2, i)) - &(&sq * &Expression::int(2)))
    }

    /// `theta_ij`, falling back to [`Engine::theta_diag`] on the diagonal.
    pub fn theta_ext(&self, i: usize, j: usize) -> Result<Expression> {
        if i == j {
            self.theta_diag(i)
        } else {
            self.theta(i, j)
        }
    }

    /// `r_ii + sum_k r_ik v_ik`, the diagonal companion of the theta numerator.
    fn diag_numerator(&self, i: usize) -> Expression {
        &Expression::r(i, i) + &self.sum(|k| &Expression::r(i, k) * &self.v(i, k))
    }

    fn build_theta(&self, i: usize, j: usize) -> Result<Expression> {
        let num = &Expression::r(i, j) + &self.sum(|k| &Expression::r(i, k) * &self.v(j, k));
        Ok(&num * &Expression::inv_delta(j, i))
    }

    fn build_omega(&self, i: usize, j: usize) -> Result<Expression> {
        let mut acc = ExprSum::new();
        acc.add(&self.theta(i, j)?);
        acc.sub(&self.theta(j, i)?);
        for k in self.ctx().indices() {
            for l in self.ctx().indices() {
                let rr = &Expression::r(i, l) * &Expression::r(j, k);
                acc.add_product(&rr, &self.v(k, l), &Rat::ONE);
            }
        }
        Ok(&acc.finish() * &Expression::inv_delta(j, i))
    }

    fn build_lambda(&self, i: usize, j: usize) -> Result<Expression> {
        let mut acc = ExprSum::new();
        acc.add_scaled(&self.omega(i, j)?, &Rat::int(3));
        // k = j drops out; k = i uses the diagonal extension
        for k in self.ctx().indices().filter(|&k| k != j) {
            let tt = &self.theta_ext(i, k)? * &self.theta(j, k)?;
            acc.add_product(&Expression::delta(k, j), &tt, &Rat::int(-1));
        }
        acc.add_product(&self.diag_numerator(i), &self.theta(j, i)?, &Rat::int(-1));
        acc.add_product(&self.diag_numerator(j), &self.theta(i, j)?, &Rat::int(-1));
        Ok(&acc.finish() * &Expression::inv_delta(j, i))
    }
}
