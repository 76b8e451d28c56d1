use std::hash::Hash;
use std::sync::RwLock;

use rustc_hash::FxHashMap;

use crate::correlators::CorrelatorKey;
use crate::derivation::{OpKey, PairingKey, SpecialKey};
use crate::error::{Error, Result};
use crate::expr::{Expression, Generator, MAX_N, MAX_TAU_LEVEL};

/// Dimension and t-level cap for a computation.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Context {
    pub n: usize,
    pub max_tau: usize,
}

impl Context {
    pub const DEFAULT_MAX_TAU: usize = 6;

    pub fn new(n: usize, max_tau: usize) -> Result<Context> {
        if !(1..=MAX_N).contains(&n) {
            return Err(Error::InvalidContext(format!("n = {n} outside 1..={MAX_N}")));
        }
        if !(2..=MAX_TAU_LEVEL).contains(&max_tau) {
            return Err(Error::InvalidContext(format!("max tau level {max_tau} outside 2..={MAX_TAU_LEVEL}")));
        }
        Ok(Context { n, max_tau })
    }

    pub fn with_n(n: usize) -> Result<Context> {
        Context::new(n, Context::DEFAULT_MAX_TAU)
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub(crate) fn check_tau(&self, level: usize) -> Result<()> {
        if level > self.max_tau {
            Err(Error::TauLevelOverflow { level, max: self.max_tau })
        } else {
            Ok(())
        }
    }
}

/// A memo table that behaves like a pure function under concurrent use:
/// racing fills compute the same value and the first insert wins.
pub(crate) struct Memo<K, V> {
    map: RwLock<FxHashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo { map: RwLock::new(FxHashMap::default()) }
    }

    pub(crate) fn get_or_try<F: FnOnce() -> Result<V>>(&self, key: &K, f: F) -> Result<V> {
        if let Some(v) = self.map.read().unwrap().get(key) {
            return Ok(v.clone());
        }
        let v = f()?;
        Ok(self.map.write().unwrap().entry(key.clone()).or_insert(v).clone())
    }
}

/// Owns a [`Context`] and the memo tables of everything derived from it.
/// `Engine` is `Sync`; share one across threads or give each worker its own.
pub struct Engine {
    ctx: Context,
    pub(crate) images: Memo<(OpKey, Generator), Expression>,
    pub(crate) specials: Memo<SpecialKey, Expression>,
    pub(crate) pairings: Memo<PairingKey, Expression>,
    pub(crate) correlators: Memo<CorrelatorKey, Expression>,
}

impl Engine {
    pub fn new(ctx: Context) -> Engine {
        Engine {
            ctx,
            images: Memo::new(),
            specials: Memo::new(),
            pairings: Memo::new(),
            correlators: Memo::new(),
        }
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn u(&self, i: usize) -> Expression {
        Expression::u(i)
    }

    pub fn s(&self, i: usize) -> Expression {
        Expression::s(i)
    }

    pub fn r(&self, i: usize, j: usize) -> Expression {
        Expression::r(i, j)
    }

    pub fn t(&self, level: usize, i: usize) -> Result<Expression> {
        self.ctx.check_tau(level)?;
        Ok(Expression::t(level, i))
    }

    /// Sum of `f(j)` for `j` in `1..=n`.
    pub fn sum<F: FnMut(usize) -> Expression>(&self, mut f: F) -> Expression {
        let mut acc = crate::expr::ExprSum::new();
        for j in self.ctx.indices() {
            acc.add(&f(j));
        }
        acc.finish()
    }

    /// Fallible variant of [`Engine::sum`].
    pub fn try_sum<F: FnMut(usize) -> Result<Expression>>(&self, mut f: F) -> Result<Expression> {
        let mut acc = crate::expr::ExprSum::new();
        for j in self.ctx.indices() {
            acc.add(&f(j)?);
        }
        Ok(acc.finish())
    }
}
