use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{find, Check};
use crate::context::Engine;
use crate::error::Result;
use crate::expr::{evaluate, Generator, Point};

/// Outcome of evaluating every equality of an identity at random points.
#[derive(Clone, Debug)]
pub struct SpotReport {
    pub identity: &'static str,
    pub n: usize,
    pub points: usize,
    pub evaluations: usize,
    /// `(check label, point index)` of every disagreement.
    pub mismatches: Vec<(String, usize)>,
}

fn nonzero(rng: &mut impl Rng) -> BigRational {
    let mut num = 0;
    while num == 0 {
        num = rng.gen_range(-9i64..=9);
    }
    BigRational::new(BigInt::from(num), BigInt::from(rng.gen_range(1i64..=7)))
}

/// A point with pairwise distinct `u` (integers) and nonzero `s`.
pub fn random_point(n: usize, max_tau: usize, rng: &mut impl Rng) -> Point {
    let mut point = Point::new();
    let mut us: Vec<i64> = (-40..=40).collect();
    us.shuffle(rng);
    for i in 1..=n {
        point.insert(Generator::U(i as u8), BigRational::from_integer(BigInt::from(us[i - 1])));
        point.insert(Generator::S(i as u8), nonzero(rng));
        for j in i..=n {
            point.insert(Generator::r(i, j), nonzero(rng));
        }
        for k in 2..=max_tau {
            point.insert(Generator::t(k, i), nonzero(rng));
        }
    }
    point
}

/// Evaluates both sides of every equality of `id` at `points` random
/// points. Independent of the symbolic normalization, so it catches a
/// wrong cancellation that would make a false identity look exact.
pub fn spot_check(e: &Engine, id: &str, points: usize, seed: u64) -> Result<SpotReport> {
    let identity = find(id)?;
    let checks = (identity.build)(e)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<Point> = (0..points).map(|_| random_point(e.n(), e.ctx().max_tau, &mut rng)).collect();
    let mut mismatches = Vec::new();
    let mut evaluations = 0;
    for c in &checks {
        if let Check::Equal { label, lhs, rhs } = c {
            for (k, p) in pts.iter().enumerate() {
                evaluations += 1;
                if evaluate(lhs, p)? != evaluate(rhs, p)? {
                    mismatches.push((label.clone(), k));
                }
            }
        }
    }
    Ok(SpotReport { identity: identity.id, n: e.n(), points, evaluations, mismatches })
}
