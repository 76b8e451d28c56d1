//! Exact rotation-coefficient calculus for semisimple quantum cohomology.
//!
//! Every quantity is an [`Expression`]: a Laurent polynomial in the
//! generators `u_i`, `s_i = sqrt(g_i)`, `r_ij`, `t_{k,i}` with exact
//! rational coefficients, divided by a product of differences
//! `u_i - u_j`. Identities are decided by exact normalization, never
//! numerically.
//!
//! ```
//! use rotcalc::{Context, Engine, Expression};
//!
//! let engine = Engine::new(Context::new(2, 6).unwrap());
//! let lhs = &engine.theta(1, 2).unwrap() + &engine.theta(2, 1).unwrap();
//! let rhs = -(&engine.r(1, 1) * &engine.r(2, 1) + &engine.r(1, 2) * &engine.r(2, 2));
//! assert_eq!(lhs, rhs);
//! # let _ = Expression::zero();
//! ```

mod context;
pub mod correlators;
pub mod derivation;
mod error;
pub mod expr;
pub mod genus2;
mod modular;
pub mod rational;
pub mod verify;

pub use context::{Context, Engine};
pub use error::{Error, Result};
pub use expr::{Degree, Expression, Generator};
pub use rational::Rat;
