use std::fmt;
use std::sync::OnceLock;

use rustc_hash::FxHashMap;

use super::generator::{Generator, NVARS};
use super::monomial::Monomial;
use crate::rational::Rat;

/// Sparse Laurent polynomial (negative powers only in `s_i`) with exact
/// rational coefficients. Terms are sorted by monomial and never zero, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Rat)>,
}

/// Unordered accumulator used while building a polynomial term by term.
#[derive(Default)]
pub struct PolyAcc {
    map: FxHashMap<Monomial, Rat>,
}

impl PolyAcc {
    pub fn new() -> Self {
        PolyAcc::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        PolyAcc { map: FxHashMap::with_capacity_and_hasher(n, Default::default()) }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.map.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = e.get_mut();
                *v += &c;
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_poly(&mut self, p: &Polynomial) {
        for (m, c) in &p.terms {
            self.add_term(*m, c.clone());
        }
    }

    /// Adds `factor * p`.
    pub fn add_scaled(&mut self, p: &Polynomial, factor: &Rat, mono: &Monomial) {
        for (m, c) in &p.terms {
            self.add_term(m.mul(mono), c * factor);
        }
    }

    /// Adds `a * b`.
    pub fn add_product(&mut self, a: &Polynomial, b: &Polynomial) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), ca * cb);
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn finish(self) -> Polynomial {
        let mut terms: Vec<(Monomial, Rat)> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        Polynomial { terms }
    }
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: Rat) -> Polynomial {
        Polynomial::term(Monomial::ONE, c)
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Rat::ONE)
    }

    pub fn term(m: Monomial, c: Rat) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn var(g: Generator) -> Polynomial {
        Polynomial::term(Monomial::var(g, 1), Rat::ONE)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(it: I) -> Polynomial {
        let mut acc = PolyAcc::new();
        for (m, c) in it {
            acc.add_term(m, c);
        }
        acc.finish()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rat)> {
        self.terms
    }

    /// The constant value, if this polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_monomial(&self, mono: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self.terms.iter().map(|(m, x)| (m.mul(mono), x * c)).collect();
        Polynomial { terms }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Polynomial { terms: out }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m, c);
        }
        let mut acc = PolyAcc::with_capacity(self.len() * other.len() / 2 + 1);
        acc.add_product(self, other);
        acc.finish()
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// True iff the polynomial vanishes after substituting `u_a := u_b`.
    pub fn vanishes_on_diagonal(&self, a: usize, b: usize) -> bool {
        let (sa, sb) = (Generator::U(a as u8).slot(), Generator::U(b as u8).slot());
        let mut acc = PolyAcc::with_capacity(self.len());
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let e = m.exp_slot(sa);
            if e != 0 {
                m2.set_slot(sa, 0);
                m2.set_slot(sb, m.exp_slot(sb) + e);
            }
            acc.add_term(m2, c.clone());
        }
        acc.finish().is_zero()
    }

    /// Exact quotient by `u_a - u_b`, or `None` if it does not divide.
    pub fn div_delta(&self, a: usize, b: usize) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if !self.fast_diagonal_screen(a, b) || !self.vanishes_on_diagonal(a, b) {
            return None;
        }
        // P(u_b) = 0, so P = sum_e C_e (u_a^e - u_b^e) and each difference
        // quotient expands to sum_{p<e} u_a^p u_b^(e-1-p).
        let (sa, sb) = (Generator::U(a as u8).slot(), Generator::U(b as u8).slot());
        let mut acc = PolyAcc::with_capacity(self.len() * 2);
        for (m, c) in &self.terms {
            let e = m.exp_slot(sa);
            let f = m.exp_slot(sb);
            for p in 0..e {
                let mut m2 = *m;
                m2.set_slot(sa, p);
                m2.set_slot(sb, f + e - 1 - p);
                acc.add_term(m2, c.clone());
            }
        }
        Some(acc.finish())
    }

    /// Cheap modular evaluation at a fixed pseudo-random point with
    /// `u_a = u_b`; returns `false` when the polynomial certainly does not
    /// vanish on that diagonal.
    fn fast_diagonal_screen(&self, a: usize, b: usize) -> bool {
        use crate::modular::{add, mul, pow, PRIME};
        let (base, base_inv) = screen_point();
        let (mut point, mut inv_point) = (*base, *base_inv);
        let (sa, sb) = (Generator::U(a as u8).slot(), Generator::U(b as u8).slot());
        point[sa] = point[sb];
        inv_point[sa] = inv_point[sb];
        let mut total = 0u64;
        for (m, c) in &self.terms {
            let Some(mut v) = c.mod_prime(PRIME) else { return true };
            for (slot, (&x, &ix)) in point.iter().zip(inv_point.iter()).enumerate() {
                let e = m.exp_slot(slot);
                if e > 0 {
                    v = mul(v, pow(x, e as u64, PRIME), PRIME);
                } else if e < 0 {
                    v = mul(v, pow(ix, (-e) as u64, PRIME), PRIME);
                }
            }
            total = add(total, v, PRIME);
        }
        total == 0
    }

    pub fn max_exp(&self, g: Generator) -> i32 {
        self.terms.iter().map(|(m, _)| m.exp(g)).max().unwrap_or(0)
    }

    pub fn min_exp(&self, g: Generator) -> i32 {
        self.terms.iter().map(|(m, _)| m.exp(g)).min().unwrap_or(0)
    }
}

type ScreenPoint = ([u64; NVARS], [u64; NVARS]);

fn screen_point() -> (&'static [u64; NVARS], &'static [u64; NVARS]) {
    static POINT: OnceLock<ScreenPoint> = OnceLock::new();
    let (p, ip) = POINT.get_or_init(|| {
        let prime = crate::modular::PRIME;
        let mut point = [0u64; NVARS];
        let mut inv_point = [0u64; NVARS];
        for (k, (p, ip)) in point.iter_mut().zip(inv_point.iter_mut()).enumerate() {
            *p = 0x9E37_79B9_7F4A_7C15u64.wrapping_mul(k as u64 + 7) % prime;
            if *p == 0 {
                *p = 3;
            }
            *ip = crate::modular::inv(*p, prime);
        }
        (point, inv_point)
    });
    (p, ip)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(i: u8) -> Polynomial {
        Polynomial::var(Generator::U(i))
    }

    #[test]
    fn exact_division_by_delta() {
        // (u1 - u2)(u1^2 + u2*u3) / (u1 - u2)
        let d = u(1).sub(&u(2));
        let q = u(1).mul(&u(1)).add(&u(2).mul(&u(3)));
        let p = d.mul(&q);
        assert_eq!(p.div_delta(1, 2), Some(q.clone()));
        assert_eq!(q.div_delta(1, 2), None);
        assert_eq!(d.div_delta(1, 2), Some(Polynomial::one()));
    }

    #[test]
    fn merge_add_cancels() {
        let a = u(1).add(&u(2));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add(&u(2).neg()), u(1));
    }
}
