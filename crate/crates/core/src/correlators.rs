//! Genus-0 functions `z_{i1..ik}` (4 ≤ k ≤ 7) and genus-1 functions
//! `φ_{i1..ik}` (1 ≤ k ≤ 4) in terms of rotation coefficients.
//!
//! Higher arities come from the raising recursion, which appends the last
//! index of the tuple. [`Engine::correlator_exact`] memoizes on the exact
//! tuple and never assumes symmetry; [`Engine::correlator`] sorts the
//! tuple first, which is sound because symmetry is checked separately.

use std::fmt;

use crate::context::Engine;
use crate::error::{Error, Result};
use crate::expr::{ExprSum, Expression};
use crate::rational::Rat;

pub const MAX_Z_ARITY: usize = 7;
pub const MAX_PHI_ARITY: usize = 4;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CorrelatorKey {
    pub genus: u8,
    pub indices: Vec<u8>,
    canonical: bool,
}

impl CorrelatorKey {
    fn new(genus: u8, indices: &[usize], canonical: bool) -> CorrelatorKey {
        CorrelatorKey { genus, indices: indices.iter().map(|&i| i as u8).collect(), canonical }
    }
}

impl fmt::Display for CorrelatorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.genus == 0 { "z" } else { "phi" };
        write!(f, "{name}_")?;
        for i in &self.indices {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

fn arity_ok(genus: u8, arity: usize) -> bool {
    match genus {
        0 => (4..=MAX_Z_ARITY).contains(&arity),
        1 => (1..=MAX_PHI_ARITY).contains(&arity),
        _ => false,
    }
}

impl Engine {
    fn check_key(&self, genus: u8, idx: &[usize]) -> Result<()> {
        if !arity_ok(genus, idx.len()) {
            return Err(Error::ArityUnsupported { genus, arity: idx.len() });
        }
        idx.iter().try_for_each(|&i| self.check_index(i))
    }

    /// `z` (genus 0) or `φ` (genus 1), computed on the sorted index tuple.
    pub fn correlator(&self, genus: u8, idx: &[usize]) -> Result<Expression> {
        self.check_key(genus, idx)?;
        let mut sorted = idx.to_vec();
        sorted.sort_unstable();
        let key = CorrelatorKey::new(genus, &sorted, true);
        self.correlators.get_or_try(&key, || self.raise(genus, &sorted, &|g, t| self.correlator(g, t)))
    }

    /// Same as [`Engine::correlator`] but without reordering at any level
    /// of the recursion.
    pub fn correlator_exact(&self, genus: u8, idx: &[usize]) -> Result<Expression> {
        self.check_key(genus, idx)?;
        let key = CorrelatorKey::new(genus, idx, false);
        self.correlators.get_or_try(&key, || self.raise(genus, idx, &|g, t| self.correlator_exact(g, t)))
    }

    /// Shorthand for the genus-0 function.
    pub fn z(&self, idx: &[usize]) -> Result<Expression> {
        self.correlator(0, idx)
    }

    /// Shorthand for the genus-1 function.
    pub fn phi(&self, idx: &[usize]) -> Result<Expression> {
        self.correlator(1, idx)
    }

    fn raise(
        &self,
        genus: u8,
        idx: &[usize],
        sub: &dyn Fn(u8, &[usize]) -> Result<Expression>,
    ) -> Result<Expression> {
        if genus == 0 && idx.len() == 4 {
            return Ok(z4(idx));
        }
        if genus == 1 && idx.len() == 1 {
            return Ok(self.phi1(idx[0]));
        }
        let (prefix, a) = (&idx[..idx.len() - 1], idx[idx.len() - 1]);
        let base = sub(genus, prefix)?;
        let mut acc = ExprSum::new();
        acc.add(&self.derive(a, &base)?);
        let conn = self.sum_over(prefix, |ij| &Expression::r(ij, a) * &Expression::s_ratio(a, ij));
        acc.add_product(&conn, &base, &Rat::int(-1));
        let mut hat: Vec<usize> = Vec::with_capacity(prefix.len());
        for (pos, &ij) in prefix.iter().enumerate() {
            hat.clear();
            hat.extend(prefix.iter().enumerate().filter(|&(q, _)| q != pos).map(|(_, &x)| x));
            hat.push(a);
            let c = &Expression::r(ij, a) * &Expression::s_ratio(ij, a);
            acc.add_product(&c, &sub(genus, &hat)?, &Rat::int(-1));
            if ij == a {
                for p in self.ctx().indices() {
                    *hat.last_mut().unwrap() = p;
                    let c = &Expression::r(p, a) * &Expression::s_ratio(a, p);
                    acc.add_product(&c, &sub(genus, &hat)?, &Rat::ONE);
                }
            }
        }
        Ok(acc.finish())
    }

    fn sum_over<F: Fn(usize) -> Expression>(&self, idx: &[usize], f: F) -> Expression {
        let mut acc = ExprSum::new();
        for &i in idx {
            acc.add(&f(i));
        }
        acc.finish()
    }

    fn phi1(&self, i: usize) -> Expression {
        let mut acc = ExprSum::new();
        for j in self.ctx().indices() {
            acc.add_product(&Expression::r(i, j), &self.v(i, j), &Rat::new(-1, 2));
            acc.add_product(&Expression::s_ratio(i, j), &Expression::r(i, j), &Rat::new(-1, 24));
        }
        acc.finish()
    }

    /// The closed forms for one- and two-point genus-1 functions.
    pub fn phi_closed(&self, idx: &[usize]) -> Result<Expression> {
        idx.iter().try_for_each(|&i| self.check_index(i))?;
        let r = Expression::r;
        let sr = Expression::s_ratio;
        let mut acc = ExprSum::new();
        match *idx {
            [i] => return Ok(self.phi1(i)),
            [i, j] if i == j => {
                acc.add_scaled(&r(i, i).pow(2), &Rat::int(12));
                acc.add_product(&self.t(2, i)?, &Expression::inv_g(i), &Rat::int(-1));
                for j in self.ctx().indices() {
                    let ratio = &Expression::g(i) * &Expression::inv_g(j);
                    acc.add_product(&r(i, j).pow(2), &(&ratio - &Expression::int(10)), &Rat::ONE);
                    acc.add_product(&(&r(i, i) * &r(i, j)), &self.v(i, j), &Rat::int(24));
                    for k in self.ctx().indices() {
                        let rr = &r(i, j) * &r(j, k);
                        acc.add_product(&(&rr * &self.v(j, k)), &sr(i, j), &Rat::int(-12));
                        acc.add_product(&rr, &sr(i, k), &Rat::int(-1));
                    }
                    if j != i {
                        acc.add_product(&self.theta(i, j)?, &sr(i, j), &Rat::int(-1));
                        acc.add_product(&self.theta(j, i)?, &sr(j, i), &Rat::int(-1));
                    }
                }
            }
            [i, j] => {
                acc.add_scaled(&r(i, j).pow(2), &Rat::int(12));
                for k in self.ctx().indices() {
                    let gk = &(&Expression::s(i) * &Expression::s(j)) * &Expression::inv_g(k);
                    acc.add_product(&(&r(i, k) * &r(j, k)), &gk, &Rat::ONE);
                    acc.add_product(&(&(&r(i, j) * &r(i, k)) * &self.v(i, k)), &sr(j, i), &Rat::int(12));
                    acc.add_product(&(&(&r(i, j) * &r(j, k)) * &self.v(j, k)), &sr(i, j), &Rat::int(12));
                }
                acc.add_product(&self.theta(i, j)?, &sr(j, i), &Rat::int(-1));
                acc.add_product(&self.theta(j, i)?, &sr(i, j), &Rat::int(-1));
            }
            _ => return Err(Error::ArityUnsupported { genus: 1, arity: idx.len() }),
        }
        Ok(acc.finish().scale(&Rat::new(1, 24)))
    }

    /// The combinatorial formula for `T(X̄)` applied to a correlator,
    /// written in terms of lower correlators only.
    pub fn t_xbar_on_correlator(&self, genus: u8, idx: &[usize]) -> Result<Expression> {
        self.check_key(genus, idx)?;
        let n = self.n();
        let mut acc = ExprSum::new();
        // contracted pair weight u_p / g_q
        let w = |p: usize, q: usize| &Expression::u(p) * &Expression::inv_g(q);
        let (k, m_max) = match genus {
            0 => (idx.len() - 2, idx.len() - 3),
            _ => (idx.len(), idx.len()),
        };
        for mask in 0u32..(1 << k) {
            let m = mask.count_ones() as usize;
            if m < 2 || m > m_max {
                continue;
            }
            let chosen: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| idx[b]).collect();
            let rest: Vec<usize> =
                (0..idx.len()).filter(|&b| b >= k || mask >> b & 1 == 0).map(|b| idx[b]).collect();
            for p in 1..=n {
                for q in 1..=n {
                    let mut left = Vec::with_capacity(m + 2);
                    left.push(p);
                    left.extend_from_slice(&chosen);
                    left.push(q);
                    let mut right = Vec::with_capacity(rest.len() + 1);
                    right.push(q);
                    right.extend_from_slice(&rest);
                    let prod = &self.z(&left)? * &self.correlator(genus, &right)?;
                    acc.add_product(&w(p, q), &prod, &Rat::ONE);
                }
            }
        }
        if genus == 0 {
            let (a, b) = (idx[k], idx[k + 1]);
            if a == b {
                for p in 1..=n {
                    let mut t = Vec::with_capacity(idx.len());
                    t.push(p);
                    t.extend_from_slice(&idx[..=k]);
                    acc.add_product(&Expression::u(p), &self.z(&t)?, &Rat::ONE);
                }
            }
            let us = &Expression::u(a) + &Expression::u(b);
            acc.add_product(&us, &self.z(idx)?, &Rat::int(-1));
        } else {
            for p in 1..=n {
                for q in 1..=n {
                    let mut t = Vec::with_capacity(idx.len() + 3);
                    t.push(p);
                    t.extend_from_slice(idx);
                    t.extend_from_slice(&[q, q]);
                    acc.add_product(&w(p, q), &self.z(&t)?, &Rat::new(1, 24));
                }
            }
        }
        Ok(acc.finish())
    }
}

/// Four-point genus-0 function; depends only on the index multiset.
fn z4(idx: &[usize]) -> Expression {
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &i in idx {
        match counts.iter_mut().find(|(x, _)| *x == i) {
            Some((_, c)) => *c += 1,
            None => counts.push((i, 1)),
        }
    }
    counts.sort_by_key(|&(_, c)| std::cmp::Reverse(c));
    let ss = |i: usize, j: usize| &Expression::s(i) * &Expression::s(j);
    match counts.as_slice() {
        [(i, 4)] => -(&Expression::g(*i) * &Expression::r(*i, *i)),
        [(i, 3), (j, 1)] => -(&ss(*i, *j) * &Expression::r(*i, *j)),
        [(i, 2), (j, 2)] => &ss(*i, *j) * &Expression::r(*i, *j),
        _ => Expression::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Context;
    use crate::expr::{Degree, Expression as X};

    fn engine(n: usize) -> Engine {
        Engine::new(Context::new(n, 6).unwrap())
    }

    #[test]
    fn four_point_base_cases() {
        let e = engine(4);
        assert_eq!(e.z(&[1, 1, 1, 1]).unwrap(), -(&X::g(1) * &X::r(1, 1)));
        assert!(e.z(&[1, 2, 3, 4]).unwrap().is_zero());
        assert!(e.z(&[1, 1, 2, 3]).unwrap().is_zero());
        assert_eq!(e.z(&[2, 1, 1, 1]).unwrap(), -e.z(&[2, 2, 1, 1]).unwrap());
        assert_eq!(e.z(&[1, 2, 1, 1]).unwrap(), -(&(&X::s(1) * &X::s(2)) * &X::r(1, 2)));
    }

    #[test]
    fn single_idempotent_values() {
        let e = engine(1);
        let r = X::r(1, 1);
        assert_eq!(e.z(&[1; 5]).unwrap(), &(&(&X::g(1) * &r.pow(2)) * &X::int(3)) - &X::t(2, 1));
        assert_eq!(e.phi(&[1]).unwrap(), &r * &X::frac(-1, 24));
        let phi11 = &(&(&r.pow(2) * &X::int(2)) - &(&X::t(2, 1) * &X::inv_g(1))) * &X::frac(1, 24);
        assert_eq!(e.phi(&[1, 1]).unwrap(), phi11);
        assert_eq!(e.phi_closed(&[1, 1]).unwrap(), phi11);
    }

    #[test]
    fn closed_two_point_forms_match_recursion() {
        let e = engine(3);
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(e.correlator_exact(1, &[i, j]).unwrap(), e.phi_closed(&[i, j]).unwrap(), "phi_{i}{j}");
            }
        }
    }

    #[test]
    fn arity_limits() {
        let e = engine(2);
        assert_eq!(e.z(&[1, 1, 1]), Err(Error::ArityUnsupported { genus: 0, arity: 3 }));
        assert_eq!(e.phi(&[1; 5]), Err(Error::ArityUnsupported { genus: 1, arity: 5 }));
        assert!(e.phi_closed(&[1, 2, 1]).is_err());
    }

    #[test]
    fn five_point_symmetry_and_degree() {
        let e = engine(2);
        let base = e.correlator_exact(0, &[1, 1, 2, 2, 1]).unwrap();
        for t in [[1, 2, 1, 2, 1], [2, 1, 1, 1, 2], [1, 1, 1, 2, 2]] {
            assert_eq!(e.correlator_exact(0, &t).unwrap(), base);
        }
        assert_eq!(base.degree(), Degree::Homogeneous(2));
        assert_eq!(e.phi(&[1, 2, 2]).unwrap().degree(), Degree::Homogeneous(3));
    }

    #[test]
    fn t_xbar_formula_on_small_keys() {
        let e = engine(2);
        for key in [vec![1usize, 1, 1, 1], vec![1, 2, 2, 1], vec![1, 1, 2, 2, 2]] {
            let z = e.z(&key).unwrap();
            assert_eq!(e.t_xbar_on_correlator(0, &key).unwrap(), e.act_t_xbar(&z).unwrap(), "z {key:?}");
        }
        for key in [vec![1usize], vec![2, 1], vec![1, 1, 2]] {
            let phi = e.phi(&key).unwrap();
            assert_eq!(e.t_xbar_on_correlator(1, &key).unwrap(), e.act_t_xbar(&phi).unwrap(), "phi {key:?}");
        }
    }
}
