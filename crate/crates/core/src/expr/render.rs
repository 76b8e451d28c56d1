//! Structured (JSON) rendering of expressions and the matching parser.

use serde::{Deserialize, Serialize};

use super::expression::{Denominator, Expression};
use super::generator::Generator;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::rational::Rat;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FactorJson {
    pub generator: String,
    pub exponent: i32,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermJson {
    pub coefficient: String,
    pub factors: Vec<FactorJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DeltaJson {
    pub i: usize,
    pub j: usize,
    pub power: u32,
}

/// `numerator / product of (u_i - u_j)^power`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ExprJson {
    pub numerator: Vec<TermJson>,
    pub denominator: Vec<DeltaJson>,
}

impl Expression {
    pub fn to_json(&self) -> ExprJson {
        let numerator = self
            .numerator()
            .terms()
            .iter()
            .map(|(m, c)| TermJson {
                coefficient: c.to_string(),
                factors: m.factors().map(|(g, e)| FactorJson { generator: g.to_string(), exponent: e }).collect(),
            })
            .collect();
        let denominator = self.denominator().factors().map(|((i, j), power)| DeltaJson { i, j, power }).collect();
        ExprJson { numerator, denominator }
    }

    pub fn from_json(json: &ExprJson) -> Result<Expression> {
        let mut terms = Vec::with_capacity(json.numerator.len());
        for t in &json.numerator {
            let c = Rat::parse(&t.coefficient).ok_or_else(|| Error::Parse(format!("coefficient {}", t.coefficient)))?;
            let mut m = Monomial::ONE;
            for f in &t.factors {
                let g = Generator::parse(&f.generator)
                    .ok_or_else(|| Error::Parse(format!("generator {}", f.generator)))?;
                if f.exponent < 0 && !matches!(g, Generator::S(_)) {
                    return Err(Error::Parse(format!("negative power of {g}")));
                }
                m.set(g, m.exp(g) + f.exponent);
            }
            terms.push((m, c));
        }
        let mut den = Denominator::ONE;
        for d in &json.denominator {
            if !(d.i < d.j && d.j <= super::generator::MAX_N && d.i >= 1) {
                return Err(Error::Parse(format!("denominator pair ({}, {})", d.i, d.j)));
            }
            den = den.mul(&Denominator::delta(d.i, d.j, d.power));
        }
        Ok(Expression::from_parts(Polynomial::from_terms(terms), den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let e = &(&Expression::r(1, 2) * &Expression::s_ratio(1, 2)) * &Expression::inv_delta(2, 1).pow(2)
            + Expression::t(3, 1).scale(&Rat::new(-5, 5760));
        let text = serde_json::to_string(&e.to_json()).unwrap();
        let back: ExprJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Expression::from_json(&back).unwrap(), e);
    }
}
