//! Genus-2 quantities assembled from genus-0 and genus-1 data: the
//! tensors `B(E_i, E_i, E_i)` and `A₁`, the generating function `F₂` by
//! two routes, the `L₁` constraint and its prediction, and the
//! decomposition `L_A + L_B`.

mod appendix;
mod f2;
mod formula;
mod l1;
mod tensors;

pub use appendix::CdPath;
pub use f2::f2_rotation_formula;
pub use formula::{Formula, FormulaTerm};
pub use l1::l1f2_formula;
pub use tensors::A1Arg;

use crate::context::Engine;
use crate::error::Result;
use crate::expr::Expression;

/// Which of the two independent derivations to use.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum F2Route {
    Assembled,
    Rotation,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum PredictionRoute {
    Rotation,
    GStar,
}

/// Everything the genus-2 checks consume, computed once per engine.
#[derive(Clone, Debug)]
pub struct GeneratingData {
    pub f2_assembled: Expression,
    pub f2_rotation: Expression,
    pub b_diag: Vec<Expression>,
    pub a1_values: Vec<(A1Arg, Expression)>,
    pub l1f2_target: Expression,
    pub prediction: Expression,
    pub l_a: Expression,
    pub l_b: Expression,
}

impl GeneratingData {
    pub fn compute(e: &Engine) -> Result<GeneratingData> {
        Ok(GeneratingData {
            f2_assembled: e.f2(F2Route::Assembled)?,
            f2_rotation: e.f2(F2Route::Rotation)?,
            b_diag: e.ctx().indices().map(|i| e.b_diag(i)).collect::<Result<_>>()?,
            a1_values: [A1Arg::TauS, A1Arg::Tau2L0, A1Arg::Tau2L1]
                .into_iter()
                .map(|w| Ok((w, e.a1_of(w)?)))
                .collect::<Result<_>>()?,
            l1f2_target: e.l1f2_target()?,
            prediction: e.prediction(PredictionRoute::Rotation)?,
            l_a: e.l_a()?,
            l_b: e.l_b()?,
        })
    }
}

// Small monomial helpers shared by the formula files.

/// `1 / (s_i s_j)`.
pub(crate) fn inv_ss(i: usize, j: usize) -> Expression {
    &Expression::s_pow(i, -1) * &Expression::s_pow(j, -1)
}

/// `s_i / s_j^3`, i.e. `(1/g_j) sqrt(g_i/g_j)`.
pub(crate) fn s_over_cube(i: usize, j: usize) -> Expression {
    &Expression::s(i) * &Expression::s_pow(j, -3)
}

/// `1 / (g_i g_j)`.
pub(crate) fn inv_gg(i: usize, j: usize) -> Expression {
    &Expression::inv_g(i) * &Expression::inv_g(j)
}

/// `1 / (g_i g_j g_k)`.
pub(crate) fn inv_ggg(i: usize, j: usize, k: usize) -> Expression {
    &inv_gg(i, j) * &Expression::inv_g(k)
}

#[cfg(test)]
mod tests;
