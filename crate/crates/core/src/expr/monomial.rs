use std::fmt;

use super::generator::{Generator, NVARS};

/// A power product of generators over a fixed slot layout.
///
/// Only `s_i` may carry a negative exponent. The array layout makes
/// hashing and comparison a plain byte scan.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([i8; NVARS]);

impl Default for Monomial {
    fn default() -> Self {
        Monomial::ONE
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(g: Generator, exp: i32) -> Monomial {
        let mut m = Monomial::ONE;
        m.set(g, exp);
        m
    }

    pub fn exp(&self, g: Generator) -> i32 {
        self.0[g.slot()] as i32
    }

    pub fn exp_slot(&self, slot: usize) -> i32 {
        self.0[slot] as i32
    }

    pub fn set(&mut self, g: Generator, exp: i32) {
        self.set_slot(g.slot(), exp);
    }

    pub fn set_slot(&mut self, slot: usize, exp: i32) {
        self.0[slot] = i8::try_from(exp).expect("exponent out of range");
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0i8; NVARS];
        for (k, o) in out.iter_mut().enumerate() {
            *o = self.0[k].checked_add(other.0[k]).expect("exponent overflow");
        }
        Monomial(out)
    }

    /// Nonzero exponents in slot order.
    pub fn factors(&self) -> impl Iterator<Item = (Generator, i32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(slot, &e)| (Generator::from_slot(slot), e as i32))
    }

    pub fn degree(&self) -> i64 {
        self.factors().map(|(g, e)| g.degree() * e as i64).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, e) in self.factors() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
