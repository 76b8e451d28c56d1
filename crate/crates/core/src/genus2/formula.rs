use crate::context::Engine;
use crate::error::Result;
use crate::expr::{ExprSum, Expression};
use crate::rational::Rat;

/// One coefficient of a closed form: `coeff * body(engine)`.
#[derive(Clone)]
pub struct FormulaTerm {
    pub label: &'static str,
    pub coeff: Rat,
    pub body: fn(&Engine) -> Result<Expression>,
}

/// A closed form as a coefficient table, divided by `norm`.
/// Keeping the coefficients as data lets tests flip any single one.
#[derive(Clone)]
pub struct Formula {
    pub name: &'static str,
    pub norm: Rat,
    pub terms: Vec<FormulaTerm>,
}

impl Formula {
    pub fn evaluate(&self, e: &Engine) -> Result<Expression> {
        self.evaluate_with(e, |_, c| c.clone())
    }

    /// Evaluates with the sign of term `k` flipped.
    pub fn evaluate_flipped(&self, e: &Engine, k: usize) -> Result<Expression> {
        self.evaluate_with(e, |idx, c| if idx == k { -c } else { c.clone() })
    }

    fn evaluate_with<F: Fn(usize, &Rat) -> Rat>(&self, e: &Engine, coeff: F) -> Result<Expression> {
        let mut acc = ExprSum::new();
        for (k, t) in self.terms.iter().enumerate() {
            acc.add_scaled(&(t.body)(e)?, &coeff(k, &t.coeff));
        }
        Ok(acc.finish().scale(&self.norm.recip()))
    }
}

macro_rules! term {
    ($label:expr, $num:expr, $den:expr, $body:expr) => {
        $crate::genus2::FormulaTerm { label: $label, coeff: $crate::rational::Rat::new($num, $den), body: $body }
    };
}
pub(crate) use term;

// Index sums over 1..=n; each returns the exact total.

pub(crate) fn sum1(e: &Engine, f: impl Fn(usize) -> Result<Expression>) -> Result<Expression> {
    let mut acc = ExprSum::new();
    for i in e.ctx().indices() {
        acc.add(&f(i)?);
    }
    Ok(acc.finish())
}

pub(crate) fn sum2(e: &Engine, f: impl Fn(usize, usize) -> Result<Expression>) -> Result<Expression> {
    sum1(e, |i| sum1(e, |j| f(i, j)))
}

pub(crate) fn sum3(e: &Engine, f: impl Fn(usize, usize, usize) -> Result<Expression>) -> Result<Expression> {
    sum1(e, |i| sum2(e, |j, k| f(i, j, k)))
}

pub(crate) fn sum4(
    e: &Engine,
    f: impl Fn(usize, usize, usize, usize) -> Result<Expression>,
) -> Result<Expression> {
    sum2(e, |i, j| sum2(e, |k, l| f(i, j, k, l)))
}

pub(crate) fn sum5(
    e: &Engine,
    f: impl Fn(usize, usize, usize, usize, usize) -> Result<Expression>,
) -> Result<Expression> {
    sum1(e, |i| sum4(e, |j, k, l, p| f(i, j, k, l, p)))
}

/// Sum over ordered pairs `i != j`.
pub(crate) fn sum_off(e: &Engine, f: impl Fn(usize, usize) -> Result<Expression>) -> Result<Expression> {
    sum2(e, |i, j| if i == j { Ok(Expression::zero()) } else { f(i, j) })
}
