use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rotcalc::expr::evaluate;
use rotcalc::verify::random_point;
use rotcalc::{Context, Engine, Expression as E, Rat};

const N: usize = 3;

fn atom() -> impl Strategy<Value = E> {
    prop_oneof![
        (1..=N).prop_map(E::u),
        (1..=N, -2i32..=2).prop_map(|(i, k)| E::s_pow(i, k)),
        (1..=N, 1..=N).prop_map(|(i, j)| E::r(i, j)),
        (2..=4usize, 1..=N).prop_map(|(k, i)| E::t(k, i)),
        (1..=N, 1..=N).prop_filter("distinct", |(i, j)| i != j).prop_map(|(i, j)| E::inv_delta(i, j)),
        (-5i64..=5, 1i64..=4).prop_map(|(a, b)| E::frac(a, b)),
    ]
}

/// Small random expressions: sums of products of atoms.
fn expr() -> impl Strategy<Value = E> {
    let monomial = prop::collection::vec(atom(), 1..4).prop_map(|xs| xs.iter().fold(E::one(), |acc, x| &acc * x));
    prop::collection::vec(monomial, 1..4).prop_map(|ms| ms.iter().fold(E::zero(), |acc, m| &acc + m))
}

fn point(seed: u64) -> rotcalc::expr::Point {
    random_point(N, 6, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn eval(x: &E, seed: u64) -> BigRational {
    evaluate(x, &point(seed)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in expr(), b in expr(), c in expr()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &E::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_ring_morphism(a in expr(), b in expr(), seed in 0u64..1000) {
        prop_assert_eq!(eval(&(&a + &b), seed), eval(&a, seed) + eval(&b, seed));
        prop_assert_eq!(eval(&(&a * &b), seed), eval(&a, seed) * eval(&b, seed));
        prop_assert_eq!(eval(&a.scale(&Rat::new(-3, 7)), seed), eval(&a, seed) * BigRational::new((-3).into(), 7.into()));
    }

    #[test]
    fn normalization_is_idempotent(a in expr(), i in 1..=N, j in 1..=N) {
        prop_assume!(i != j);
        let renormalized = E::from_parts(a.numerator().clone(), *a.denominator());
        prop_assert_eq!(&renormalized, &a);
        // multiplying by a difference and dividing again is the identity
        prop_assert_eq!(&(&a * &E::delta(i, j)) * &E::inv_delta(i, j), a.clone());
    }

    #[test]
    fn json_round_trip(a in expr()) {
        prop_assert_eq!(E::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn derivations_obey_leibniz(a in expr(), b in expr(), k in 1..=N) {
        let e = Engine::new(Context::with_n(N).unwrap());
        let lhs = e.derive(k, &(&a * &b)).unwrap();
        let rhs = &(&e.derive(k, &a).unwrap() * &b) + &(&a * &e.derive(k, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
        let lhs = e.act_l(1, &(&a * &b)).unwrap();
        let rhs = &(&e.act_l(1, &a).unwrap() * &b) + &(&a * &e.act_l(1, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn idempotent_derivations_commute(a in expr(), i in 1..=N, j in 1..=N) {
        let e = Engine::new(Context::with_n(N).unwrap());
        let ij = e.derive(i, &e.derive(j, &a).unwrap()).unwrap();
        let ji = e.derive(j, &e.derive(i, &a).unwrap()).unwrap();
        prop_assert_eq!(ij, ji);
    }
}
