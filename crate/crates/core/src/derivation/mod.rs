//! Derivations of the generator algebra: the idempotent vector fields
//! `E_k`, the descendant shift `T(X̄)`, the Virasoro fields `L_m`, and a
//! general vector field given by its pairings.
//!
//! Each operator is a derivation, so it is fixed by its images of the
//! generators; those images are memoized per engine and extended to
//! expressions by the Leibniz and quotient rules.

mod pairing;
mod rules;
mod special;

pub use pairing::{PairingKey, VectorId};
pub use rules::VectorFieldData;
pub use special::{SpecialKey, SpecialKind};

use rustc_hash::FxHashMap;

use crate::context::Engine;
use crate::error::Result;
use crate::expr::{Denominator, ExprSum, Expression, Generator, Monomial, PolyAcc, Polynomial};
use crate::rational::Rat;

/// Which derivation a memoized generator image belongs to.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum OpKey {
    E(u8),
    L(i32),
    TXbar,
}

/// Applies the derivation with generator images `image` to `e`.
pub fn apply_derivation<F>(e: &Expression, mut image: F) -> Result<Expression>
where
    F: FnMut(Generator) -> Result<Expression>,
{
    if e.is_zero() {
        return Ok(Expression::zero());
    }
    let num = e.numerator();
    let den = *e.denominator();

    let mut partials: FxHashMap<Generator, PolyAcc> = FxHashMap::default();
    for (m, c) in num.terms() {
        for (g, k) in m.factors() {
            let mut m2 = *m;
            m2.set(g, k - 1);
            partials.entry(g).or_default().add_term(m2, c * &Rat::int(k as i64));
        }
    }
    let mut gens: Vec<Generator> = partials.keys().copied().collect();
    gens.sort();

    let mut sum = ExprSum::new();
    for g in gens {
        let img = image(g)?;
        if img.is_zero() {
            continue;
        }
        let dp = partials.remove(&g).unwrap().finish();
        sum.add_product(&Expression::raw(dp, den), &img, &Rat::ONE);
    }
    // d(1/Δ^m) = -m Δ^(-m-1) dΔ
    for ((i, j), mult) in den.factors() {
        let d_delta = &image(Generator::U(i as u8))? - &image(Generator::U(j as u8))?;
        if d_delta.is_zero() {
            continue;
        }
        let part = Expression::raw(num.clone(), den.mul(&Denominator::delta(i, j, 1)));
        sum.add_product(&part, &d_delta, &Rat::int(-(mult as i64)));
    }
    Ok(sum.finish())
}

impl Engine {
    fn cached_image<F>(&self, op: OpKey, g: Generator, f: F) -> Result<Expression>
    where
        F: FnOnce() -> Result<Expression>,
    {
        self.images.get_or_try(&(op, g), f)
    }

    /// `E_k e`.
    pub fn derive(&self, k: usize, e: &Expression) -> Result<Expression> {
        self.check_index(k)?;
        apply_derivation(e, |g| self.cached_image(OpKey::E(k as u8), g, || self.e_image(k, g)))
    }

    /// `T(X̄) e`.
    pub fn act_t_xbar(&self, e: &Expression) -> Result<Expression> {
        apply_derivation(e, |g| self.cached_image(OpKey::TXbar, g, || self.t_xbar_image(g)))
    }

    /// `L_m e` for `m >= -1`.
    pub fn act_l(&self, m: i32, e: &Expression) -> Result<Expression> {
        if m < -1 {
            return Err(crate::Error::UnsupportedPairing { vector: format!("L{m}"), level: 0 });
        }
        apply_derivation(e, |g| self.cached_image(OpKey::L(m), g, || self.l_image(m, g)))
    }

    /// Action of the vector field described by `w` (generators u, s, r only).
    pub fn act_vector_field(&self, w: &VectorFieldData, e: &Expression) -> Result<Expression> {
        let mut local: FxHashMap<Generator, Expression> = FxHashMap::default();
        apply_derivation(e, |g| {
            if let Some(x) = local.get(&g) {
                return Ok(x.clone());
            }
            let x = self.vector_field_image(w, g)?;
            local.insert(g, x.clone());
            Ok(x)
        })
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.n()).contains(&i) {
            Ok(())
        } else {
            Err(crate::Error::BadIndexPair(i, i))
        }
    }
}

/// `sum_{p=0}^{m} u_a^p u_b^(m-p)`; zero for `m < 0`.
pub fn complete_h(a: usize, b: usize, m: i32) -> Expression {
    if m < 0 {
        return Expression::zero();
    }
    let terms = (0..=m).map(|p| {
        let mut mono = Monomial::ONE;
        let (ga, gb) = (Generator::U(a as u8), Generator::U(b as u8));
        mono.set(ga, p);
        mono.set(gb, mono.exp(gb) + (m - p));
        (mono, Rat::ONE)
    });
    Expression::from_poly(Polynomial::from_terms(terms))
}

/// `u_i^k`, also for `k < 0` only when it is multiplied away later (never here).
pub(crate) fn u_pow(i: usize, k: i32) -> Expression {
    assert!(k >= 0, "negative power of u");
    Expression::u_pow(i, k as u32)
}

#[cfg(test)]
mod tests;
