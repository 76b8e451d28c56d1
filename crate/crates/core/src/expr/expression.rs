use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::generator::{Generator, MAX_N};
use super::monomial::Monomial;
use super::polynomial::{PolyAcc, Polynomial};
use crate::rational::Rat;

/// Number of index pairs `i < j` with `j <= MAX_N`.
pub const NPAIRS: usize = MAX_N * (MAX_N - 1) / 2;

/// Pairs `(i, j)`, `i < j`, in slot order.
pub fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (1..=MAX_N).flat_map(|i| (i + 1..=MAX_N).map(move |j| (i, j)))
}

fn pair_slot(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j <= MAX_N);
    let i0 = i - 1;
    i0 * (2 * MAX_N - i0 - 1) / 2 + (j - i - 1)
}

/// Product of powers of `u_i - u_j`, `i < j`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Denominator([u8; NPAIRS]);

impl Denominator {
    pub const ONE: Denominator = Denominator([0; NPAIRS]);

    pub fn delta(i: usize, j: usize, power: u32) -> Denominator {
        let mut d = Denominator::ONE;
        d.0[pair_slot(i, j)] = power as u8;
        d
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.0[pair_slot(a, b)] as u32
    }

    pub fn factors(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        pairs().zip(self.0.iter()).filter(|(_, &m)| m > 0).map(|(p, &m)| (p, m as u32))
    }

    pub fn mul(&self, other: &Denominator) -> Denominator {
        let mut out = [0u8; NPAIRS];
        for (k, o) in out.iter_mut().enumerate() {
            *o = self.0[k].checked_add(other.0[k]).expect("pole order overflow");
        }
        Denominator(out)
    }

    pub fn lcm(&self, other: &Denominator) -> Denominator {
        let mut out = [0u8; NPAIRS];
        for (k, o) in out.iter_mut().enumerate() {
            *o = self.0[k].max(other.0[k]);
        }
        Denominator(out)
    }

    /// Degree contribution: each factor has degree -1 in the numerator, so +1 here.
    pub fn total(&self) -> u32 {
        self.0.iter().map(|&m| m as u32).sum()
    }

    /// Expanded polynomial of `self / other`; `other` must divide `self`.
    fn quotient_poly(&self, other: &Denominator) -> Polynomial {
        let mut acc = Polynomial::one();
        for ((i, j), k) in pairs().zip(0..) {
            let e = self.0[k] - other.0[k];
            if e > 0 {
                acc = acc.mul(&delta_power(i, j, e as u32));
            }
        }
        acc
    }
}

/// `(u_i - u_j)^e` expanded by the binomial theorem.
pub fn delta_power(i: usize, j: usize, e: u32) -> Polynomial {
    let mut terms = Vec::with_capacity(e as usize + 1);
    let mut binom: i64 = 1;
    for k in 0..=e {
        // u_i^(e-k) (-u_j)^k
        let mut m = Monomial::ONE;
        m.set(Generator::U(i as u8), (e - k) as i32);
        m.set(Generator::U(j as u8), k as i32);
        let c = if k % 2 == 0 { binom } else { -binom };
        terms.push((m, Rat::int(c)));
        binom = binom * (e - k) as i64 / (k + 1) as i64;
    }
    Polynomial::from_terms(terms)
}

/// Homogeneity of an expression under the grading u:-1, s:0, r:1, t_k:k,
/// with each denominator factor contributing +1.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Degree {
    /// The zero expression is homogeneous of every degree.
    Any,
    Homogeneous(i64),
    NonHomogeneous,
}

impl Degree {
    /// Adds `by` to a homogeneous degree.
    pub fn shifted(self, by: i64) -> Degree {
        match self {
            Degree::Homogeneous(d) => Degree::Homogeneous(d + by),
            other => other,
        }
    }
}

/// A rational function `num / den` whose denominator is a product of
/// differences `u_i - u_j`. Always normalized: no denominator factor
/// divides the numerator, and zero has the trivial denominator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Expression {
    num: Polynomial,
    den: Denominator,
}

impl Expression {
    pub fn zero() -> Expression {
        Expression { num: Polynomial::zero(), den: Denominator::ONE }
    }

    pub fn one() -> Expression {
        Expression::constant(Rat::ONE)
    }

    pub fn constant(c: Rat) -> Expression {
        Expression { num: Polynomial::constant(c), den: Denominator::ONE }
    }

    pub fn int(n: i64) -> Expression {
        Expression::constant(Rat::int(n))
    }

    pub fn frac(n: i64, d: i64) -> Expression {
        Expression::constant(Rat::new(n, d))
    }

    pub fn gen(g: Generator) -> Expression {
        Expression::from_poly(Polynomial::var(g))
    }

    pub fn monomial(m: Monomial, c: Rat) -> Expression {
        Expression::from_poly(Polynomial::term(m, c))
    }

    pub fn from_poly(p: Polynomial) -> Expression {
        Expression { num: p, den: Denominator::ONE }
    }

    /// Builds and normalizes `num / den`.
    pub fn from_parts(num: Polynomial, den: Denominator) -> Expression {
        normalize(num, den)
    }

    /// Unnormalized `num / den`; only for feeding an [`ExprSum`].
    pub(crate) fn raw(num: Polynomial, den: Denominator) -> Expression {
        Expression { num, den }
    }

    pub fn u(i: usize) -> Expression {
        Expression::gen(Generator::U(i as u8))
    }

    pub fn u_pow(i: usize, e: u32) -> Expression {
        Expression::monomial(Monomial::var(Generator::U(i as u8), e as i32), Rat::ONE)
    }

    pub fn s(i: usize) -> Expression {
        Expression::gen(Generator::S(i as u8))
    }

    pub fn s_pow(i: usize, e: i32) -> Expression {
        Expression::monomial(Monomial::var(Generator::S(i as u8), e), Rat::ONE)
    }

    /// g_i = s_i^2.
    pub fn g(i: usize) -> Expression {
        Expression::s_pow(i, 2)
    }

    /// 1 / g_i = s_i^-2.
    pub fn inv_g(i: usize) -> Expression {
        Expression::s_pow(i, -2)
    }

    /// s_i / s_j, i.e. the square root of g_i / g_j.
    pub fn s_ratio(i: usize, j: usize) -> Expression {
        let mut m = Monomial::ONE;
        m.set(Generator::S(i as u8), 1);
        m.set(Generator::S(j as u8), m.exp(Generator::S(j as u8)) - 1);
        Expression::monomial(m, Rat::ONE)
    }

    pub fn r(i: usize, j: usize) -> Expression {
        Expression::gen(Generator::r(i, j))
    }

    pub fn t(level: usize, i: usize) -> Expression {
        Expression::gen(Generator::t(level, i))
    }

    /// `u_i - u_j` as a polynomial expression.
    pub fn delta(i: usize, j: usize) -> Expression {
        &Expression::u(i) - &Expression::u(j)
    }

    /// `1 / (u_i - u_j)` for `i != j`.
    pub fn inv_delta(i: usize, j: usize) -> Expression {
        assert!(i != j, "inv_delta on a diagonal pair");
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        Expression { num: Polynomial::constant(Rat::int(sign)), den: Denominator::delta(a, b, 1) }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Denominator {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num_terms(&self) -> usize {
        self.num.len()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Multiplicity of `u_i - u_j` in the normalized denominator.
    pub fn delta_multiplicity(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 0;
        }
        self.den.multiplicity(i, j)
    }

    pub fn max_delta_multiplicity(&self) -> u32 {
        self.den.factors().map(|(_, m)| m).max().unwrap_or(0)
    }

    pub fn degree(&self) -> Degree {
        let mut deg = None;
        for (m, _) in self.num.terms() {
            let d = m.degree();
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return Degree::NonHomogeneous,
                _ => {}
            }
        }
        match deg {
            None => Degree::Any,
            Some(d) => Degree::Homogeneous(d + self.den.total() as i64),
        }
    }

    /// Tau levels of the t-generators present.
    pub fn tau_levels(&self) -> BTreeSet<usize> {
        self.generators().into_iter().filter_map(|g| g.tau_level()).collect()
    }

    pub fn generators(&self) -> BTreeSet<Generator> {
        let mut out = BTreeSet::new();
        for (m, _) in self.num.terms() {
            for (g, _) in m.factors() {
                out.insert(g);
            }
        }
        for ((i, j), _) in self.den.factors() {
            out.insert(Generator::U(i as u8));
            out.insert(Generator::U(j as u8));
        }
        out
    }

    /// Largest idempotent index mentioned anywhere.
    pub fn max_index(&self) -> usize {
        self.generators().into_iter().map(|g| g.max_index()).max().unwrap_or(0)
    }

    /// Coefficient of `g^power` when the expression is read as a
    /// polynomial in the single generator `g` (which must not be a `u`).
    pub fn coefficient_of(&self, g: Generator, power: i32) -> Expression {
        assert!(!matches!(g, Generator::U(_)), "u-generators also live in the denominator");
        let terms = self.num.terms().iter().filter(|(m, _)| m.exp(g) == power).map(|(m, c)| {
            let mut m2 = *m;
            m2.set(g, 0);
            (m2, c.clone())
        });
        Expression::from_parts(Polynomial::from_terms(terms), self.den)
    }

    pub fn pow(&self, e: u32) -> Expression {
        let mut acc = Expression::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Expression {
        if c.is_zero() {
            return Expression::zero();
        }
        Expression { num: self.num.scale(c), den: self.den }
    }

    /// Sum of the given expressions over their least common denominator.
    pub fn sum<'a, I: IntoIterator<Item = &'a Expression>>(it: I) -> Expression {
        let mut acc = ExprSum::new();
        for e in it {
            acc.add(e);
        }
        acc.finish()
    }
}

/// Cancels every denominator factor that exactly divides the numerator.
fn normalize(mut num: Polynomial, mut den: Denominator) -> Expression {
    if num.is_zero() {
        return Expression::zero();
    }
    for ((i, j), k) in pairs().zip(0..) {
        while den.0[k] > 0 {
            match num.div_delta(i, j) {
                Some(q) => {
                    num = q;
                    den.0[k] -= 1;
                }
                None => break,
            }
        }
    }
    Expression { num, den }
}

/// Accumulates a sum of expressions grouped by denominator, combining
/// over the least common denominator only once at the end.
#[derive(Default)]
pub struct ExprSum {
    groups: FxHashMap<Denominator, PolyAcc>,
}

impl ExprSum {
    pub fn new() -> Self {
        ExprSum::default()
    }

    pub fn add(&mut self, e: &Expression) {
        if e.is_zero() {
            return;
        }
        self.groups.entry(e.den).or_default().add_poly(&e.num);
    }

    pub fn add_scaled(&mut self, e: &Expression, c: &Rat) {
        if e.is_zero() || c.is_zero() {
            return;
        }
        self.groups.entry(e.den).or_default().add_scaled(&e.num, c, &Monomial::ONE);
    }

    pub fn sub(&mut self, e: &Expression) {
        self.add_scaled(e, &Rat::int(-1));
    }

    /// Adds the product `a * b` without normalizing it separately.
    pub fn add_product(&mut self, a: &Expression, b: &Expression, c: &Rat) {
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return;
        }
        let den = a.den.mul(&b.den);
        let acc = self.groups.entry(den).or_default();
        for (ma, ca) in a.num.terms() {
            let cac = ca * c;
            for (mb, cb) in b.num.terms() {
                acc.add_term(ma.mul(mb), &cac * cb);
            }
        }
    }

    pub fn finish(self) -> Expression {
        let groups: Vec<(Denominator, Polynomial)> =
            self.groups.into_iter().map(|(d, acc)| (d, acc.finish())).filter(|(_, p)| !p.is_zero()).collect();
        match groups.len() {
            0 => Expression::zero(),
            1 => {
                let (d, p) = groups.into_iter().next().unwrap();
                normalize(p, d)
            }
            _ => {
                let lcm = groups.iter().fold(Denominator::ONE, |l, (d, _)| l.lcm(d));
                let mut acc = PolyAcc::new();
                for (d, p) in &groups {
                    if *d == lcm {
                        acc.add_poly(p);
                    } else {
                        acc.add_product(p, &lcm.quotient_poly(d));
                    }
                }
                normalize(acc.finish(), lcm)
            }
        }
    }
}

impl Add for &Expression {
    type Output = Expression;
    fn add(self, rhs: &Expression) -> Expression {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return normalize(self.num.add(&rhs.num), self.den);
        }
        let lcm = self.den.lcm(&rhs.den);
        let a = if self.den == lcm { self.num.clone() } else { self.num.mul(&lcm.quotient_poly(&self.den)) };
        let b = if rhs.den == lcm { rhs.num.clone() } else { rhs.num.mul(&lcm.quotient_poly(&rhs.den)) };
        normalize(a.add(&b), lcm)
    }
}

impl Sub for &Expression {
    type Output = Expression;
    fn sub(self, rhs: &Expression) -> Expression {
        self + &(-rhs)
    }
}

impl Mul for &Expression {
    type Output = Expression;
    fn mul(self, rhs: &Expression) -> Expression {
        if self.is_zero() || rhs.is_zero() {
            return Expression::zero();
        }
        let num = self.num.mul(&rhs.num);
        if self.den.is_one() || rhs.den.is_one() {
            // A factor with trivial denominator may still share a Delta with the other side.
            return normalize(num, self.den.mul(&rhs.den));
        }
        normalize(num, self.den.mul(&rhs.den))
    }
}

impl Neg for &Expression {
    type Output = Expression;
    fn neg(self) -> Expression {
        Expression { num: self.num.neg(), den: self.den }
    }
}

impl Mul<&Rat> for &Expression {
    type Output = Expression;
    fn mul(self, rhs: &Rat) -> Expression {
        self.scale(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Expression> for Expression {
            type Output = Expression;
            fn $f(self, rhs: Expression) -> Expression {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Expression> for Expression {
            type Output = Expression;
            fn $f(self, rhs: &Expression) -> Expression {
                (&self).$f(rhs)
            }
        }
        impl $tr<Expression> for &Expression {
            type Output = Expression;
            fn $f(self, rhs: Expression) -> Expression {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Expression {
    type Output = Expression;
    fn neg(self) -> Expression {
        -&self
    }
}

impl Mul<Rat> for Expression {
    type Output = Expression;
    fn mul(self, rhs: Rat) -> Expression {
        self.scale(&rhs)
    }
}

impl From<i64> for Expression {
    fn from(n: i64) -> Expression {
        Expression::int(n)
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        for (k, ((i, j), m)) in self.den.factors().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if m == 1 {
                write!(f, "(u{i}-u{j})")?;
            } else {
                write!(f, "(u{i}-u{j})^{m}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_inverse() {
        let u1 = Expression::u(1);
        assert!((&u1 + &(-&u1)).is_zero());
    }

    #[test]
    fn s_squared_is_g() {
        let s1 = Expression::s(1);
        assert_eq!(&s1 * &s1, Expression::g(1));
        assert_eq!(&Expression::g(1) * &Expression::inv_g(1), Expression::one());
    }

    #[test]
    fn reversed_delta_is_negated() {
        let e = &Expression::inv_delta(1, 2) + &Expression::inv_delta(2, 1);
        assert!(e.is_zero());
        assert_eq!(e.denominator(), &Denominator::ONE);
    }

    #[test]
    fn normalization_cancels_delta() {
        let e = &Expression::delta(1, 3) * &Expression::inv_delta(1, 3);
        assert_eq!(e, Expression::one());
        let e = &(&Expression::u(1) * &Expression::u(1) - &Expression::u(2) * &Expression::u(2))
            * &Expression::inv_delta(2, 1);
        assert_eq!(e, -(&Expression::u(1) + &Expression::u(2)));
    }

    #[test]
    fn partial_fractions_combine() {
        // 1/(u1-u2) - 1/(u1-u3) = (u2-u3)/((u1-u2)(u1-u3))
        let lhs = &Expression::inv_delta(1, 2) - &Expression::inv_delta(1, 3);
        let rhs = &Expression::delta(2, 3) * &(&Expression::inv_delta(1, 2) * &Expression::inv_delta(1, 3));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.delta_multiplicity(1, 2), 1);
        assert_eq!(lhs.delta_multiplicity(2, 3), 0);
    }

    #[test]
    fn degrees() {
        assert_eq!(Expression::r(1, 2).degree(), Degree::Homogeneous(1));
        let e = &Expression::u(1) * &Expression::r(1, 1).pow(2);
        assert_eq!(e.degree(), Degree::Homogeneous(1));
        assert_eq!((&Expression::u(1) + &Expression::r(1, 1)).degree(), Degree::NonHomogeneous);
        assert_eq!(Expression::zero().degree(), Degree::Any);
        assert_eq!(Expression::inv_delta(1, 2).degree(), Degree::Homogeneous(1));
    }

    #[test]
    fn delta_power_expands() {
        let p = delta_power(1, 2, 3);
        let d = Expression::delta(1, 2);
        assert_eq!(Expression::from_poly(p), d.pow(3));
    }
}
