use std::fmt;

/// Largest dimension N the fixed variable layout has room for.
pub const MAX_N: usize = 4;
/// Largest tau level the fixed variable layout has room for.
pub const MAX_TAU_LEVEL: usize = 8;

const U_BASE: usize = 0;
const S_BASE: usize = U_BASE + MAX_N;
const R_BASE: usize = S_BASE + MAX_N;
const T_BASE: usize = R_BASE + MAX_N * (MAX_N + 1) / 2;
/// Number of exponent slots in a monomial.
pub const NVARS: usize = T_BASE + (MAX_TAU_LEVEL - 1) * MAX_N;

/// One generator of the algebra. Indices are 1-based.
///
/// * `U(i)`: canonical coordinate u_i
/// * `S(i)`: s_i, the square root of the metric coefficient g_i (invertible)
/// * `R(i, j)`: rotation coefficient r_ij, stored with `i <= j`
/// * `T(k, i)`: the pairing of the k-fold lowered string field with E_i, `k >= 2`
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Generator {
    U(u8),
    S(u8),
    R(u8, u8),
    T(u8, u8),
}

fn tri(i: usize, j: usize) -> usize {
    // (i, j) with 1 <= i <= j <= MAX_N, row-major over the upper triangle
    let (i0, j0) = (i - 1, j - 1);
    i0 * MAX_N - i0 * (i0 + 1) / 2 + j0
}

impl Generator {
    pub fn r(i: usize, j: usize) -> Generator {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        Generator::R(a as u8, b as u8)
    }

    pub fn t(level: usize, i: usize) -> Generator {
        Generator::T(level as u8, i as u8)
    }

    pub fn slot(self) -> usize {
        match self {
            Generator::U(i) => U_BASE + i as usize - 1,
            Generator::S(i) => S_BASE + i as usize - 1,
            Generator::R(i, j) => R_BASE + tri(i as usize, j as usize),
            Generator::T(k, i) => T_BASE + (k as usize - 2) * MAX_N + i as usize - 1,
        }
    }

    pub fn from_slot(slot: usize) -> Generator {
        if slot < S_BASE {
            Generator::U((slot - U_BASE + 1) as u8)
        } else if slot < R_BASE {
            Generator::S((slot - S_BASE + 1) as u8)
        } else if slot < T_BASE {
            let mut k = slot - R_BASE;
            for i in 1..=MAX_N {
                let row = MAX_N - i + 1;
                if k < row {
                    return Generator::R(i as u8, (i + k) as u8);
                }
                k -= row;
            }
            unreachable!("slot {slot} out of range")
        } else {
            let k = slot - T_BASE;
            Generator::T((k / MAX_N + 2) as u8, (k % MAX_N + 1) as u8)
        }
    }

    /// Homogeneity degree: u has -1, s has 0, r has 1, t_k has k.
    pub fn degree(self) -> i64 {
        match self {
            Generator::U(_) => -1,
            Generator::S(_) => 0,
            Generator::R(..) => 1,
            Generator::T(k, _) => k as i64,
        }
    }

    pub fn tau_level(self) -> Option<usize> {
        match self {
            Generator::T(k, _) => Some(k as usize),
            _ => None,
        }
    }

    /// Largest idempotent index mentioned.
    pub fn max_index(self) -> usize {
        match self {
            Generator::U(i) | Generator::S(i) | Generator::T(_, i) => i as usize,
            Generator::R(_, j) => j as usize,
        }
    }

    pub fn parse(s: &str) -> Option<Generator> {
        let digits = |x: &str| -> Option<usize> {
            let v: usize = x.parse().ok()?;
            (1..=MAX_N).contains(&v).then_some(v)
        };
        let g = if let Some(rest) = s.strip_prefix('u') {
            Generator::U(digits(rest)? as u8)
        } else if let Some(rest) = s.strip_prefix('s') {
            Generator::S(digits(rest)? as u8)
        } else if let Some(rest) = s.strip_prefix('r') {
            let mut ch = rest.chars();
            let (a, b) = (ch.next()?, ch.next()?);
            if ch.next().is_some() {
                return None;
            }
            Generator::r(digits(&a.to_string())?, digits(&b.to_string())?)
        } else {
            let rest = s.strip_prefix('t')?;
            let (k, i) = rest.split_once('_')?;
            let k: usize = k.parse().ok()?;
            if !(2..=MAX_TAU_LEVEL).contains(&k) {
                return None;
            }
            Generator::t(k, digits(i)?)
        };
        Some(g)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::U(i) => write!(f, "u{i}"),
            Generator::S(i) => write!(f, "s{i}"),
            Generator::R(i, j) => write!(f, "r{i}{j}"),
            Generator::T(k, i) => write!(f, "t{k}_{i}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slots_are_a_bijection() {
        for slot in 0..NVARS {
            let g = Generator::from_slot(slot);
            assert_eq!(g.slot(), slot, "{g}");
            assert_eq!(Generator::parse(&g.to_string()), Some(g));
        }
    }

    #[test]
    fn r_is_symmetric() {
        assert_eq!(Generator::r(3, 1), Generator::r(1, 3));
        assert_eq!(Generator::r(2, 2), Generator::R(2, 2));
    }
}
