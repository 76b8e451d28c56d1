//! The generator algebra: monomials in u, s, r, t with exact rational
//! coefficients over products of differences `u_i - u_j`.

mod eval;
mod expression;
mod generator;
mod monomial;
mod polynomial;
mod render;

pub use eval::{evaluate, Point};
pub use expression::{delta_power, pairs, Degree, Denominator, ExprSum, Expression, NPAIRS};
pub use generator::{Generator, MAX_N, MAX_TAU_LEVEL, NVARS};
pub use monomial::Monomial;
pub use polynomial::{PolyAcc, Polynomial};
pub use render::{ExprJson, FactorJson, TermJson};
