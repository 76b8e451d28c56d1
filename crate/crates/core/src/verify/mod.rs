//! Registry of exact identities and the machinery to check them.
//!
//! Each identity builds a list of [`Check`]s against an [`Engine`]. An
//! equality passes when the normalized difference is the zero
//! expression; a property check carries its own witness. Reports are
//! deterministic: the witness is the first failing difference in
//! registry order.

mod identities;
mod random;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use identities::{stated_lm_action, stated_tau2_lm, registry};
pub use random::{random_point, spot_check, SpotReport};

use crate::context::{Context, Engine};
use crate::error::{Error, Result};
use crate::expr::{Expression, Polynomial};

/// One comparison inside an identity.
#[derive(Clone, Debug)]
pub enum Check {
    Equal { label: String, lhs: Expression, rhs: Expression },
    /// A structural property; `witness` is zero exactly when it holds.
    Holds { label: String, witness: Expression },
}

impl Check {
    pub fn equal(label: impl Into<String>, lhs: Expression, rhs: Expression) -> Check {
        Check::Equal { label: label.into(), lhs, rhs }
    }

    /// `ok == false` with no natural witness is reported as the constant 1.
    pub fn holds(label: impl Into<String>, ok: bool, witness: Expression) -> Check {
        let witness = match (ok, witness.is_zero()) {
            (true, _) => Expression::zero(),
            (false, true) => Expression::one(),
            (false, false) => witness,
        };
        Check::Holds { label: label.into(), witness }
    }

    pub fn label(&self) -> &str {
        match self {
            Check::Equal { label, .. } | Check::Holds { label, .. } => label,
        }
    }

    pub fn witness(&self) -> Expression {
        match self {
            Check::Equal { lhs, rhs, .. } => lhs - rhs,
            Check::Holds { witness, .. } => witness.clone(),
        }
    }
}

/// A registered identity: a name, the formula it checks, the dimensions
/// it supports and a builder for its checks.
pub struct Identity {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Smallest and largest supported N.
    pub support: (usize, usize),
    /// Dimensions exercised by default.
    pub default_n: &'static [usize],
    pub build: fn(&Engine) -> Result<Vec<Check>>,
}

impl Identity {
    pub fn supports(&self, n: usize) -> bool {
        (self.support.0..=self.support.1).contains(&n)
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub n: usize,
    pub passed: bool,
    /// Label of the first failing check, if any.
    pub failed_check: Option<String>,
    pub witness: Expression,
    pub witness_terms: usize,
    pub checks: usize,
    pub elapsed: Duration,
    pub anchor: &'static str,
}

pub fn find(id: &str) -> Result<&'static Identity> {
    registry().iter().find(|i| i.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn report(identity: &'static Identity, n: usize, checks: &[Check], start: Instant) -> IdentityReport {
    let failing = checks.iter().map(|c| (c, c.witness())).find(|(_, w)| !w.is_zero());
    let (failed_check, witness) = match failing {
        Some((c, w)) => (Some(c.label().to_string()), w),
        None => (None, Expression::zero()),
    };
    IdentityReport {
        identity: identity.id,
        n,
        passed: witness.is_zero(),
        failed_check,
        witness_terms: witness.num_terms(),
        witness,
        checks: checks.len(),
        elapsed: start.elapsed(),
        anchor: identity.anchor,
    }
}

fn check_support(identity: &Identity, n: usize) -> Result<()> {
    if identity.supports(n) {
        Ok(())
    } else {
        Err(Error::InvalidContext(format!(
            "{} supports N in {}..={}, got {n}",
            identity.id, identity.support.0, identity.support.1
        )))
    }
}

/// Checks one identity on an existing engine (sharing its caches).
pub fn verify_with(e: &Engine, id: &str) -> Result<IdentityReport> {
    let identity = find(id)?;
    check_support(identity, e.n())?;
    let start = Instant::now();
    let checks = (identity.build)(e)?;
    Ok(report(identity, e.n(), &checks, start))
}

/// Checks one identity at dimension `n` with the default t-level cap.
pub fn verify(id: &str, n: usize) -> Result<IdentityReport> {
    verify_with(&Engine::new(Context::with_n(n)?), id)
}

/// Checks several identities in parallel on one shared engine; the
/// result order follows `ids`.
pub fn verify_many(e: &Engine, ids: &[&str]) -> Vec<Result<IdentityReport>> {
    ids.par_iter().map(|id| verify_with(e, id)).collect()
}

/// Runs an identity with one numerator term of one equality flipped in
/// sign; the choice is driven by `seed`. Returns `None` when the
/// identity has no nonzero side to mutate.
pub fn verify_mutated(e: &Engine, id: &str, seed: u64) -> Result<Option<IdentityReport>> {
    let identity = find(id)?;
    check_support(identity, e.n())?;
    let start = Instant::now();
    let mut checks = (identity.build)(e)?;
    let candidates: Vec<usize> = checks
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(c, Check::Equal { lhs, .. } if !lhs.is_zero()))
        .map(|(k, _)| k)
        .collect();
    if candidates.is_empty() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = candidates[rng.gen_range(0..candidates.len())];
    if let Check::Equal { lhs, .. } = &mut checks[k] {
        *lhs = flip_term(lhs, rng.gen_range(0..lhs.num_terms()));
    }
    Ok(Some(report(identity, e.n(), &checks, start)))
}

/// `e` with the sign of numerator term `k` reversed.
pub fn flip_term(e: &Expression, k: usize) -> Expression {
    let terms = e
        .numerator()
        .terms()
        .iter()
        .enumerate()
        .map(|(idx, (m, c))| (*m, if idx == k { -c } else { c.clone() }));
    Expression::from_parts(Polynomial::from_terms(terms), *e.denominator())
}

#[cfg(test)]
mod tests;
