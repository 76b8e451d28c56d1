//! Pairings `<τ₋ᵏ(V), E_i>` of descendant vector fields with idempotents.

use std::fmt;

use super::{complete_h, u_pow};
use crate::context::Engine;
use crate::error::{Error, Result};
use crate::expr::{ExprSum, Expression};
use crate::rational::Rat;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum VectorId {
    /// The string vector field.
    S,
    /// Virasoro field `L_m`, `m >= -1`.
    L(i32),
    /// `X̄^k`, only at level 0.
    XbarPow(u32),
}

impl fmt::Display for VectorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VectorId::S => write!(f, "S"),
            VectorId::L(m) => write!(f, "L{m}"),
            VectorId::XbarPow(k) => write!(f, "Xbar^{k}"),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum PairingPath {
    Closed,
    Recursion,
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairingKey(pub VectorId, pub u8, pub u8, pub PairingPath);

impl Engine {
    /// `<τ₋ᵏ(S), E_i>`: `g_i`, `sum_j r_ij s_i s_j`, then the bare `t_{k,i}`;
    /// zero for negative `k`.
    pub fn s_pairing(&self, k: i32, i: usize) -> Result<Expression> {
        Ok(match k {
            k if k < 0 => Expression::zero(),
            0 => Expression::g(i),
            1 => self.sum(|j| &(&Expression::r(i, j) * &Expression::s(i)) * &Expression::s(j)),
            k => self.t(k as usize, i)?,
        })
    }

    /// `<τ₋ᵏ(V), E_i>` via the closed forms where one exists, otherwise the
    /// recursion in `m`.
    pub fn pairing(&self, v: VectorId, k: usize, i: usize) -> Result<Expression> {
        self.check_index(i)?;
        let key = PairingKey(v, k as u8, i as u8, PairingPath::Closed);
        self.pairings.get_or_try(&key, || match v {
            VectorId::S => self.s_pairing(k as i32, i),
            VectorId::XbarPow(p) if k == 0 => Ok(&Expression::u_pow(i, p) * &Expression::g(i)),
            VectorId::XbarPow(_) => Err(Error::UnsupportedPairing { vector: v.to_string(), level: k }),
            VectorId::L(m) if m < -1 => Err(Error::UnsupportedPairing { vector: v.to_string(), level: k }),
            VectorId::L(-1) => Ok(-self.s_pairing(k as i32, i)?),
            VectorId::L(m) if k == 0 => Ok(-(&u_pow(i, m + 1) * &Expression::g(i))),
            VectorId::L(0) => self.l0_closed(k, i),
            VectorId::L(1) => self.l1_closed(k, i),
            VectorId::L(m) if k == 1 => Ok(self.lm_level1(m, i)),
            VectorId::L(m) if k == 2 => self.lm_level2(m, i),
            VectorId::L(m) => self.lm_recursive(m, k, i),
        })
    }

    /// `<τ₋ᵏ(L_m), E_i>` by recursion in `m` down to `L_{-1} = -S`.
    pub fn lm_recursive(&self, m: i32, k: usize, i: usize) -> Result<Expression> {
        if m < -1 {
            return Err(Error::UnsupportedPairing { vector: format!("L{m}"), level: k });
        }
        let key = PairingKey(VectorId::L(m), k as u8, i as u8, PairingPath::Recursion);
        self.pairings.get_or_try(&key, || {
            if m == -1 {
                return Ok(-self.s_pairing(k as i32, i)?);
            }
            if k == 0 {
                return Ok(-(&u_pow(i, m + 1) * &Expression::g(i)));
            }
            let mut acc = ExprSum::new();
            acc.add_product(&Expression::u(i), &self.lm_recursive(m - 1, k, i)?, &Rat::ONE);
            acc.add_scaled(&self.lm_recursive(m - 1, k - 1, i)?, &Rat::new(2 * k as i64 + 1, 2));
            for j in self.ctx().indices().filter(|&j| j != i) {
                let c = &self.v(i, j) * &Expression::s_ratio(i, j);
                acc.add_product(&c, &self.lm_recursive(m - 1, k - 1, j)?, &Rat::ONE);
            }
            Ok(acc.finish())
        })
    }

    fn l0_closed(&self, k: usize, i: usize) -> Result<Expression> {
        let k = k as i32;
        let mut acc = ExprSum::new();
        acc.add_product(&Expression::u(i), &self.s_pairing(k, i)?, &Rat::int(-1));
        acc.add_scaled(&self.s_pairing(k - 1, i)?, &Rat::new(-(2 * k as i64 + 1), 2));
        for j in self.ctx().indices() {
            let c = &self.v(i, j) * &Expression::s_ratio(i, j);
            acc.add_product(&c, &self.s_pairing(k - 1, j)?, &Rat::int(-1));
        }
        Ok(acc.finish())
    }

    fn l1_closed(&self, level: usize, i: usize) -> Result<Expression> {
        let m = level as i32;
        let mut acc = ExprSum::new();
        let ui = Expression::u(i);
        acc.add_product(&ui.pow(2), &self.s_pairing(m, i)?, &Rat::int(-1));
        acc.add_product(&ui, &self.s_pairing(m - 1, i)?, &Rat::int(-(2 * m as i64 + 1)));
        acc.add_scaled(&self.s_pairing(m - 2, i)?, &Rat::new(1 - 4 * (m as i64).pow(2), 4));
        for j in self.ctx().indices() {
            let uj = Expression::u(j);
            let sij = Expression::s_ratio(i, j);
            let c = &(&(&uj.pow(2) - &ui.pow(2)) * &Expression::r(i, j)) * &sij;
            acc.add_product(&c, &self.s_pairing(m - 1, j)?, &Rat::int(-1));
            let c = &self.v(i, j) * &sij;
            acc.add_product(&c, &self.s_pairing(m - 2, j)?, &Rat::int(-2 * m as i64));
            for l in self.ctx().indices() {
                let c = &(&self.v(i, j) * &self.v(j, l)) * &Expression::s_ratio(i, l);
                acc.add_product(&c, &self.s_pairing(m - 2, l)?, &Rat::int(-1));
            }
        }
        Ok(acc.finish())
    }

    fn lm_level1(&self, m: i32, i: usize) -> Expression {
        let mut acc = ExprSum::new();
        acc.add_product(&u_pow(i, m), &Expression::g(i), &Rat::new(-3 * (m as i64 + 1), 2));
        for j in self.ctx().indices() {
            let c = &(&Expression::r(i, j) * &Expression::s(i)) * &Expression::s(j);
            acc.add_product(&u_pow(j, m + 1), &c, &Rat::int(-1));
        }
        acc.finish()
    }

    fn lm_level2(&self, m: i32, i: usize) -> Result<Expression> {
        let mut acc = ExprSum::new();
        let ml = m as i64;
        acc.add_product(&u_pow(i, m + 1), &self.t(2, i)?, &Rat::int(-1));
        if m >= 1 {
            acc.add_product(&u_pow(i, m - 1), &Expression::g(i), &Rat::new(-15 * ml * (ml + 1), 8));
        }
        for j in self.ctx().indices() {
            let rss = &(&Expression::r(i, j) * &Expression::s(i)) * &Expression::s(j);
            // (3m+5)/2 u_j^m + sum_{p=1}^m u_i^p u_j^(m-p)
            let bracket = &(&u_pow(j, m).scale(&Rat::new(3 * ml + 7, 2)) + &complete_h(i, j, m))
                - &u_pow(j, m).scale(&Rat::int(2));
            acc.add_product(&rss, &bracket, &Rat::int(-1));
            for k in self.ctx().indices() {
                let c = &(&(&self.v(i, j) * &Expression::r(j, k)) * &Expression::s(i)) * &Expression::s(k);
                acc.add_product(&c, &complete_h(i, k, m), &Rat::int(-1));
            }
        }
        Ok(acc.finish())
    }

    /// Row `i` of the grading operator: the coefficient of `E_j` in `G∗E_i`.
    pub fn gstar(&self, i: usize) -> Result<Vec<Expression>> {
        self.check_index(i)?;
        Ok(self
            .ctx()
            .indices()
            .map(|j| {
                let off = &(&Expression::delta(i, j) * &Expression::r(i, j)) * &Expression::s_ratio(i, j);
                if i == j {
                    &off + &Expression::frac(1, 2)
                } else {
                    off
                }
            })
            .collect())
    }
}
