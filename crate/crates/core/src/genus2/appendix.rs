//! `L₁F₂` split into the `A₁` part
//! `L_A` and the `B` part `L_B`, both by definition (through `T(X̄)`) and
//! through the expanded forms in `c_{ij;k}`, `d_{i;k}` and correlators.

use super::formula::{sum1, sum2, sum3};
use super::{inv_gg, inv_ggg, inv_ss};
use crate::context::Engine;
use crate::derivation::VectorId;
use crate::error::Result;
use crate::expr::{ExprSum, Expression};
use crate::rational::Rat;

type E = Expression;

/// How to compute the appendix coefficients `c_{ij;k}` and `d_{i;k}`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CdPath {
    /// From the `L₀`, `L₁` and `S` pairings.
    Definition,
    /// From the expansion in `S` pairings and rotation coefficients.
    Expanded,
}

fn q(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

fn u(i: usize) -> E {
    E::u(i)
}

fn g(i: usize) -> E {
    E::inv_g(i)
}

/// `a u_i + b u_j + c u_k`
fn lin(terms: &[(i64, usize)]) -> E {
    let mut acc = ExprSum::new();
    for &(c, i) in terms {
        acc.add_scaled(&u(i), &Rat::int(c));
    }
    acc.finish()
}

fn prod(fs: &[&E]) -> E {
    fs.iter().fold(E::one(), |acc, f| &acc * *f)
}

impl Engine {
    /// `<τ₋ᵏL₀ + (3/2)τ₋ᵏ⁻¹S, E_i>`
    fn shifted_l0(&self, k: usize, i: usize) -> Result<E> {
        Ok(&self.pairing(VectorId::L(0), k, i)? + &self.s_pairing(k as i32 - 1, i)?.scale(&q(3, 2)))
    }

    pub fn appendix_c(&self, i: usize, j: usize, k: usize, path: CdPath) -> Result<E> {
        self.check_index(j)?;
        match path {
            CdPath::Definition => {
                let l1 = self.pairing(VectorId::L(1), k, i)?;
                Ok(&g(i) * &(&l1 - &(&lin(&[(1, i), (2, j)]) * &self.shifted_l0(k, i)?)))
            }
            CdPath::Expanded => {
                let k = k as i32;
                let p = |l: i32, a: usize| self.s_pairing(l, a);
                let mut acc = ExprSum::new();
                acc.add_product(&prod(&[&u(i), &u(j), &g(i)]), &p(k, i)?, &Rat::int(2));
                acc.add_product(&(&lin(&[(k as i64 + 2, i), (2 * (1 - k as i64), j)]) * &g(i)), &p(k - 1, i)?, &Rat::int(-1));
                acc.add_product(&g(i), &p(k - 2, i)?, &(&q(1, 4) - &Rat::int((k * k) as i64)));
                for a in self.ctx().indices() {
                    let w = &(&E::delta(i, a) * &E::r(i, a)) * &inv_ss(i, a);
                    acc.add_product(&(&w * &lin(&[(1, a), (-2, j)])), &p(k - 1, a)?, &Rat::ONE);
                    acc.add_product(&w, &p(k - 2, a)?, &Rat::int(2 * k as i64));
                    for b in self.ctx().indices() {
                        let w2 = prod(&[&E::delta(i, a), &E::delta(a, b), &E::r(i, a), &E::r(a, b), &inv_ss(i, b)]);
                        acc.add_product(&w2, &p(k - 2, b)?, &Rat::int(-1));
                    }
                }
                Ok(acc.finish())
            }
        }
    }

    pub fn appendix_d(&self, i: usize, k: usize, path: CdPath) -> Result<E> {
        match path {
            CdPath::Definition => Ok(&g(i) * &self.shifted_l0(k, i)?),
            CdPath::Expanded => {
                let k = k as i32;
                let p = |l: i32, a: usize| self.s_pairing(l, a);
                let mut acc = ExprSum::new();
                acc.add_product(&(&u(i) * &g(i)), &p(k, i)?, &Rat::int(-1));
                acc.add_product(&g(i), &p(k - 1, i)?, &Rat::int(1 - k as i64));
                for a in self.ctx().indices() {
                    let w = prod(&[&E::delta(a, i), &E::r(i, a), &inv_ss(i, a)]);
                    acc.add_product(&w, &p(k - 1, a)?, &Rat::int(-1));
                }
                Ok(acc.finish())
            }
        }
    }

    /// `(L_A, L_B)` from their expanded forms.
    pub fn appendix_decomposition(&self) -> Result<(E, E)> {
        Ok((self.l_a()?, self.l_b()?))
    }

    /// `L_A` by definition: `A₁(τ₋²L₁) − T(X̄) A₁(τ₋²L₀ + (3/2)τ₋S)`.
    pub fn l_a_definition(&self) -> Result<E> {
        let lvl = |k: usize| -> Result<Vec<E>> { self.ctx().indices().map(|i| self.shifted_l0(k, i)).collect() };
        let shifted = self.a1(&lvl(2)?, &lvl(3)?, &lvl(4)?)?;
        Ok(&self.a1_of(super::A1Arg::Tau2L1)? - &self.act_t_xbar(&shifted)?)
    }

    /// `L_B` by definition: `½ Σ_i (u_i T(X̄) B_i − u_i² B_i)`.
    pub fn l_b_definition(&self) -> Result<E> {
        let mut acc = ExprSum::new();
        for i in self.ctx().indices() {
            let b = self.b_diag(i)?;
            acc.add_product(&u(i), &self.act_t_xbar(&b)?, &q(1, 2));
            acc.add_product(&u(i).pow(2), &b, &q(-1, 2));
        }
        Ok(acc.finish())
    }

    /// `L_A` from its expansion in `c`, `d` and correlators.
    pub fn l_a(&self) -> Result<E> {
        let c = |i, j, k| self.appendix_c(i, j, k, CdPath::Expanded);
        let d = |i, k| self.appendix_d(i, k, CdPath::Expanded);
        let z = |x: &[usize]| self.z(x);
        let phi = |x: &[usize]| self.phi(x);
        let mut acc = ExprSum::new();
        for i in self.ctx().indices() {
            let phi_i = phi(&[i])?;
            let c2 = c(i, i, 2)?;
            let (d2, d3) = (d(i, 2)?, d(i, 3)?);
            acc.add_product(&(&g(i) * &c2), &phi_i.pow(2), &q(7, 10));
            acc.add_product(&(&g(i) * &c2), &phi(&[i, i])?, &q(1, 10));
            acc.add_product(&g(i), &c(i, i, 4)?, &q(1, 1152));

            // the φ_i bracket
            let mut br = ExprSum::new();
            br.add_product(&g(i), &c(i, i, 3)?, &q(1, 20));
            let mut d3_br = ExprSum::new();
            let mut d2_br = ExprSum::new();
            for j in self.ctx().indices() {
                acc.add_product(&g(j), &(&c(i, j, 2)? * &phi(&[i, j])?), &q(-1, 240));
                acc.add_product(&inv_gg(i, j), &(&c(i, i, 3)? * &z(&[i, i, j, j])?), &q(1, 480));
                for k in self.ctx().indices() {
                    br.add_product(&inv_gg(i, j), &(&c(k, i, 2)? * &z(&[i, j, j, k])?), &q(13, 240));
                    let zk = z(&[i, j, k, k])?;
                    br.add_product(&(&u(j) * &inv_gg(i, k)), &(&d2 * &zk), &q(-7, 120));
                    br.add_product(&(&u(j) * &inv_gg(i, k)), &(&d(k, 2)? * &zk), &q(-1, 10));
                    acc.add_product(&inv_gg(j, k), &(&c(i, j, 3)? * &zk), &q(1, 1152));
                    acc.add_product(&inv_gg(j, k), &(&c(i, j, 2)? * &z(&[i, j, j, k, k])?), &q(1, 960));
                    d3_br.add_product(&(&u(j) * &inv_gg(i, k)), &zk, &q(1, 480));
                    d3_br.add_product(&(&u(k) * &inv_gg(i, j)), &z(&[i, i, j, k])?, &q(1, 480));
                    d2_br.add_product(&(&u(j) * &inv_gg(i, k)), &z(&[i, i, j, k, k])?, &q(1, 240));
                    for p in self.ctx().indices() {
                        let w = &u(p) * &inv_gg(j, k);
                        br.add_product(&(&u(p) * &inv_gg(i, j)), &(&d(k, 2)? * &z(&[i, j, k, p])?), &q(-1, 20));
                        d3_br.add_product(&w, &z(&[i, j, k, p])?, &q(1, 1152));
                        d2_br.add_product(&w, &z(&[i, j, k, k, p])?, &q(1, 1152));
                        for qq in self.ctx().indices() {
                            let w = &u(p) * &inv_ggg(j, k, qq);
                            let mut t = ExprSum::new();
                            t.add_product(&z(&[i, j, j, k])?, &z(&[k, p, qq, qq])?, &q(19, 12));
                            t.add_product(&z(&[i, j, p, qq])?, &z(&[j, k, k, qq])?, &Rat::ONE);
                            d2_br.add_product(&w, &t.finish(), &q(1, 480));
                        }
                    }
                }
            }
            acc.add_product(&phi_i, &br.finish(), &Rat::ONE);
            acc.add_product(&d3, &d3_br.finish(), &Rat::int(-1));
            acc.add_product(&d2, &d2_br.finish(), &Rat::int(-1));
        }
        Ok(acc.finish())
    }

    /// `L_B` from the expansion of `2 L_B`.
    pub fn l_b(&self) -> Result<E> {
        Ok(self.two_l_b()?.scale(&q(1, 2)))
    }

    fn two_l_b(&self) -> Result<E> {
        let z = |x: &[usize]| self.z(x);
        let phi = |x: &[usize]| self.phi(x);
        // u_k (2u_i + 2u_j − 3u_k)
        let w3 = |i, j, k| &u(k) * &lin(&[(2, i), (2, j), (-3, k)]);
        let uu = |a, b| &u(a) * &u(b);
        let mut acc = ExprSum::new();

        // pure genus-0 part
        acc.add(&sum3(self, |i, j, k| {
            let mut t = ExprSum::new();
            let w = &uu(i, j) * &inv_gg(j, k);
            t.add_product(&w, &z(&[i, j, j, j, j, k, k])?, &q(1, 240));
            for p in self.ctx().indices() {
                let w = &uu(i, p) * &inv_gg(j, k);
                t.add_product(&w, &z(&[i, i, j, j, k, k, p])?, &q(-1, 480));
                t.add_product(&w, &z(&[i, i, i, j, k, k, p])?, &q(-1, 2880));
                for qq in self.ctx().indices() {
                    let w = &uu(i, p) * &inv_ggg(j, k, qq);
                    let mut s = ExprSum::new();
                    s.add_product(&z(&[i, i, i, j, j, k])?, &z(&[k, p, qq, qq])?, &q(1, 2880));
                    s.add_product(&z(&[i, i, i, j])?, &z(&[j, k, k, p, qq, qq])?, &q(-1, 480));
                    s.add_product(&z(&[i, j, j, k])?, &z(&[i, i, k, p, qq, qq])?, &q(1, 320));
                    s.add_product(&z(&[i, i, j, k])?, &z(&[i, j, k, p, qq, qq])?, &q(-1, 80));
                    s.add_product(&z(&[i, i, i, j, k])?, &z(&[j, k, p, qq, qq])?, &q(1, 240));
                    s.add_product(&z(&[i, i, j, j, k])?, &z(&[i, k, p, qq, qq])?, &q(-1, 320));
                    t.add_product(&w, &s.finish(), &Rat::ONE);
                }
            }
            Ok(t.finish())
        })?);

        // φ_i bracket
        acc.add(&sum1(self, |i| {
            let mut br = ExprSum::new();
            for j in self.ctx().indices() {
                for k in self.ctx().indices() {
                    br.add_product(&(&uu(i, j) * &inv_gg(i, k)), &z(&[i, i, i, j, k, k])?, &q(1, 10));
                    br.add_product(&(&uu(j, k) * &inv_gg(i, k)), &z(&[i, j, k, k, k, k])?, &q(1, 10));
                    br.add_product(&(&w3(i, j, k) * &inv_gg(i, j)), &z(&[i, j, j, k, k, k])?, &q(1, 120));
                    for p in self.ctx().indices() {
                        let w = &uu(k, p) * &inv_gg(i, j);
                        br.add_product(&w, &z(&[i, j, j, k, k, p])?, &q(-11, 120));
                        br.add_product(&w, &z(&[i, j, k, k, k, p])?, &q(-1, 120));
                        for qq in self.ctx().indices() {
                            let w = &uu(p, qq) * &inv_ggg(i, j, k);
                            let mut s = ExprSum::new();
                            s.add_product(&z(&[i, j, qq, qq, qq])?, &z(&[j, k, k, p])?, &q(1, 40));
                            s.add_product(&z(&[i, j, k, k, p])?, &z(&[j, qq, qq, qq])?, &q(-11, 120));
                            s.add_product(&z(&[i, k, qq, qq])?, &z(&[j, j, k, p, qq])?, &q(-1, 24));
                            s.add_product(&z(&[i, j, k, p])?, &z(&[j, k, qq, qq, qq])?, &q(7, 60));
                            s.add_product(&z(&[i, j, k, qq, qq])?, &z(&[j, k, p, qq])?, &q(1, 60));
                            s.add_product(&z(&[i, k, p, qq])?, &z(&[j, j, k, qq, qq])?, &q(-1, 15));
                            s.add_product(&z(&[i, j, k, p, qq])?, &z(&[j, k, qq, qq])?, &q(-17, 60));
                            s.add_product(&z(&[i, k, p, qq, qq])?, &z(&[j, j, k, qq])?, &q(3, 40));
                            br.add_product(&w, &s.finish(), &Rat::ONE);
                        }
                    }
                }
            }
            Ok(&phi(&[i])? * &br.finish())
        })?);

        // φ_ii, φ_iii, φ_iiii and the diagonal products
        acc.add(&sum1(self, |i| {
            let mut t = ExprSum::new();
            let mut a = ExprSum::new();
            let mut b = ExprSum::new();
            for j in self.ctx().indices() {
                for k in self.ctx().indices() {
                    a.add_product(&(&uu(i, j) * &inv_gg(i, k)), &z(&[i, i, j, k, k])?, &q(-3, 10));
                    b.add_product(&(&uu(i, j) * &inv_gg(i, k)), &z(&[i, j, k, k])?, &q(1, 10));
                }
            }
            t.add_product(&phi(&[i, i])?, &a.finish(), &Rat::ONE);
            t.add_product(&phi(&[i, i, i])?, &b.finish(), &Rat::ONE);
            let w = &u(i).pow(2) * &g(i);
            t.add_product(&w, &phi(&[i, i, i, i])?, &q(1, 10));
            t.add_product(&w, &(&phi(&[i])? * &phi(&[i, i, i])?), &q(12, 5));
            t.add_product(&w, &phi(&[i, i])?.pow(2), &q(-18, 5));
            Ok(t.finish())
        })?);

        // two-index groups
        acc.add(&sum2(self, |i, j| {
            let mut t = ExprSum::new();
            let (phi_i, phi_j) = (phi(&[i])?, phi(&[j])?);

            // φ_ij bracket
            let mut a = ExprSum::new();
            // φ_iij bracket
            let mut b = ExprSum::new();
            // φ_i φ_j bracket
            let mut c = ExprSum::new();
            // φ_i φ_jj and φ_i φ_ij brackets
            let mut d = ExprSum::new();
            let mut e = ExprSum::new();
            for k in self.ctx().indices() {
                let gij = inv_gg(i, j);
                let gjk = inv_gg(j, k);
                a.add_product(&(&uu(i, k) * &gij), &z(&[i, i, i, j, k])?, &q(2, 5));
                a.add_product(&(&w3(i, j, k) * &gij), &z(&[i, j, k, k, k])?, &q(1, 10));
                a.add_product(&(&w3(j, k, i) * &gjk), &z(&[i, i, j, k, k])?, &q(-3, 40));
                b.add_product(&(&uu(i, k) * &gij), &z(&[i, i, j, k])?, &q(3, 5));
                b.add_product(&(&w3(i, j, k) * &gij), &z(&[j, k, k, k])?, &q(-1, 20));
                b.add_product(&(&(&u(i) * &lin(&[(2, j), (-1, i)])) * &gjk), &z(&[i, j, k, k])?, &q(3, 40));
                c.add_product(&(&uu(i, k) * &gij), &z(&[i, i, i, j, k])?, &q(12, 5));
                c.add_product(&(&w3(i, j, k) * &gij), &z(&[i, j, k, k, k])?, &q(1, 5));
                d.add_product(&(&uu(j, k) * &gij), &z(&[i, j, j, k])?, &q(-36, 5));
                e.add_product(&(&uu(i, k) * &gij), &z(&[i, i, j, k])?, &q(36, 5));
                e.add_product(&(&w3(i, j, k) * &gij), &z(&[j, k, k, k])?, &q(-6, 5));
                for p in self.ctx().indices() {
                    let wip = &uu(i, p) * &gjk;
                    let wkp = &uu(k, p) * &gij;
                    a.add_product(&wip, &(&z(&[i, j, k, k, p])? + &z(&[i, i, j, k, p])?), &q(-1, 40));
                    a.add_product(&wkp, &z(&[i, k, k, k, p])?, &q(-1, 120));
                    b.add_product(&(&wip + &wkp), &z(&[j, k, k, p])?, &q(-1, 10));
                    b.add_product(&wip, &z(&[i, j, k, p])?, &q(1, 20));
                    c.add_product(&wkp, &z(&[i, j, k, k, p])?, &Rat::int(-1));
                    e.add_product(&wkp, &z(&[j, k, k, p])?, &q(-12, 5));
                    for qq in self.ctx().indices() {
                        let wpq = &uu(p, qq) * &inv_ggg(i, j, k);
                        let mut s = ExprSum::new();
                        s.add_product(&z(&[i, k, k, p])?, &z(&[j, qq, qq, qq])?, &Rat::int(-4));
                        s.add_product(&z(&[i, k, p, qq])?, &z(&[j, k, qq, qq])?, &Rat::int(-16));
                        s.add_product(&z(&[i, p, qq, qq])?, &z(&[j, k, k, qq])?, &Rat::int(3));
                        a.add_product(&wpq, &s.finish(), &q(1, 40));
                        let mut s = ExprSum::new();
                        s.add_product(&z(&[i, i, j, k])?, &z(&[k, p, qq, qq])?, &Rat::int(-5));
                        s.add_product(&z(&[i, i, k, qq])?, &z(&[j, k, p, qq])?, &Rat::int(-18));
                        s.add_product(&z(&[i, k, qq, qq])?, &z(&[i, j, k, p])?, &Rat::int(6));
                        a.add_product(&(&uu(i, p) * &inv_ggg(j, k, qq)), &s.finish(), &q(1, 40));
                        let mut s = ExprSum::new();
                        s.add_product(&z(&[i, k, p, qq])?, &z(&[j, k, qq, qq])?, &q(4, 5));
                        s.add_product(&z(&[i, j, k, p])?, &z(&[k, qq, qq, qq])?, &Rat::ONE);
                        c.add_product(&wpq, &s.finish(), &Rat::int(-1));
                    }
                }
            }
            let phi_ij = phi(&[i, j])?;
            t.add_product(&phi_ij, &a.finish(), &Rat::ONE);
            t.add_product(&phi(&[i, i, j])?, &b.finish(), &Rat::ONE);
            t.add_product(&(&phi_i * &phi_j), &c.finish(), &Rat::ONE);
            t.add_product(&(&phi_i * &phi(&[j, j])?), &d.finish(), &Rat::ONE);
            t.add_product(&(&phi_i * &phi_ij), &e.finish(), &Rat::ONE);

            let w = &(&u(i) * &lin(&[(2, j), (-1, i)])) * &g(j);
            let mut s = ExprSum::new();
            s.add_scaled(&phi(&[i, i, i, j])?, &q(-1, 120));
            s.add_scaled(&phi(&[i, i, j, j])?, &q(-1, 20));
            s.add_scaled(&phi_ij.pow(2), &q(9, 5));
            t.add_product(&w, &s.finish(), &Rat::ONE);
            let w = &(&u(j) * &lin(&[(2, i), (-1, j)])) * &g(i);
            t.add_product(&w, &(&phi_i * &phi(&[i, j, j])?), &q(-6, 5));
            Ok(t.finish())
        })?);

        // three-index groups
        acc.add(&sum3(self, |i, j, k| {
            let mut t = ExprSum::new();
            let mut br = ExprSum::new();
            let gjk = inv_gg(j, k);
            br.add_product(&(&w3(j, k, i) * &gjk), &z(&[i, i, j, k])?, &q(-3, 10));
            for p in self.ctx().indices() {
                let w = &uu(i, p) * &gjk;
                br.add_product(&w, &z(&[i, i, k, p])?, &q(-1, 40));
                br.add_product(&w, &z(&[i, j, k, p])?, &q(-1, 2));
            }
            t.add_product(&phi(&[i, j, k])?, &br.finish(), &Rat::ONE);
            let w = &(&w3(i, k, j) * &inv_gg(i, k)) * &z(&[i, j, j, k])?;
            t.add_product(&w, &(&phi(&[i])? * &phi(&[j, k])?), &q(-6, 5));
            Ok(t.finish())
        })?);

        Ok(acc.finish())
    }
}
