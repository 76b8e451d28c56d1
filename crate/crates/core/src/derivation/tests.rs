use super::*;
use crate::context::{Context, Engine};
use crate::expr::{Degree, Expression as X};

fn engine(n: usize) -> Engine {
    Engine::new(Context::new(n, 6).unwrap())
}

fn q(a: i64, b: i64) -> X {
    X::frac(a, b)
}

#[test]
fn idempotent_derivations_of_coordinates() {
    let e = engine(2);
    assert_eq!(e.derive(1, &X::u(1)).unwrap(), X::one());
    assert!(e.derive(2, &X::u(1)).unwrap().is_zero());
    assert_eq!(e.derive(2, &X::s(1)).unwrap(), &X::r(1, 2) * &X::s(2));
}

#[test]
fn single_idempotent_r_derivative() {
    let e = engine(1);
    let expect = &(-X::r(1, 1).pow(2)) + &(&X::t(2, 1) * &X::inv_g(1));
    assert_eq!(e.derive(1, &X::r(1, 1)).unwrap(), expect);
}

#[test]
fn tau_cap_is_enforced() {
    let e = Engine::new(Context::new(1, 3).unwrap());
    assert!(e.derive(1, &X::t(2, 1)).is_ok());
    assert_eq!(e.derive(1, &X::t(3, 1)), Err(crate::Error::TauLevelOverflow { level: 4, max: 3 }));
}

#[test]
fn theta_example_and_bad_pairs() {
    let e = engine(2);
    let expect = &(&X::r(1, 2) + &(&X::delta(1, 2) * &(&X::r(1, 1) * &X::r(1, 2)))) * &X::inv_delta(2, 1);
    assert_eq!(e.theta(1, 2).unwrap(), expect);
    assert_eq!(e.theta(1, 1), Err(crate::Error::BadIndexPair(1, 1)));
    assert!(e.special(SpecialKind::V, 2, 2).unwrap().is_zero());
    assert_eq!(e.v(1, 2), -e.v(2, 1));
    assert_eq!(e.theta(1, 2).unwrap().delta_multiplicity(1, 2), 1);
    assert_eq!(e.theta(1, 2).unwrap().degree(), Degree::Homogeneous(2));
}

#[test]
fn t_xbar_on_generators() {
    let e = engine(2);
    assert!(e.act_t_xbar(&X::u(1)).unwrap().is_zero());
    assert_eq!(e.act_t_xbar(&X::s(2)).unwrap(), -(&X::u(2) * &X::s(2)));
    assert_eq!(e.act_t_xbar(&X::t(2, 1)).unwrap(), -(&X::u(1) * &X::t(2, 1)));
    assert_eq!(e.act_t_xbar(&X::g(1)).unwrap(), -(&(&X::u(1) * &X::g(1)) * &X::int(2)));
}

#[test]
fn l1_on_generators() {
    let e = engine(2);
    assert_eq!(e.act_l(1, &X::u(1)).unwrap(), -X::u(1).pow(2));
    assert_eq!(e.act_l(1, &X::r(1, 2)).unwrap(), &(&X::u(1) + &X::u(2)) * &X::r(1, 2));
    assert_eq!(e.act_l(1, &X::g(2)).unwrap(), &(&X::u(2) * &X::g(2)) * &X::int(6));
    assert_eq!(e.act_l(-1, &X::u(2)).unwrap(), X::int(-1));
    assert!(e.act_l(-1, &X::r(1, 1)).unwrap().is_zero());
}

#[test]
fn l1_on_t2_single_idempotent() {
    // 10 u t2 + 35/4 r g
    let e = engine(1);
    let expect = &(&(&X::u(1) * &X::t(2, 1)) * &X::int(10)) + &(&(&X::r(1, 1) * &X::g(1)) * &q(35, 4));
    assert_eq!(e.act_l(1, &X::t(2, 1)).unwrap(), expect);
}

#[test]
fn pairing_examples() {
    let e = engine(1);
    assert_eq!(e.pairing(VectorId::S, 0, 1).unwrap(), X::g(1));
    let expect = -(&(&(&X::u(1) * &X::g(1)) * &X::int(3)) + &(&X::u(1).pow(2) * &(&X::r(1, 1) * &X::g(1))));
    assert_eq!(e.pairing(VectorId::L(3), 0, 1).unwrap(), -(&X::u(1).pow(4) * &X::g(1)));
    assert_eq!(e.pairing(VectorId::L(1), 1, 1).unwrap(), expect);
    assert_eq!(e.pairing(VectorId::XbarPow(2), 0, 1).unwrap(), &X::u(1).pow(2) * &X::g(1));
    assert!(matches!(e.pairing(VectorId::XbarPow(2), 1, 1), Err(crate::Error::UnsupportedPairing { .. })));

    let e = engine(2);
    let p1 = |i: usize| e.s_pairing(1, i).unwrap();
    let mut expect = &(-(&X::u(1) * &X::t(2, 1))) - &(&p1(1) * &q(5, 2));
    expect = &expect - &(&(&e.v(1, 2) * &X::s_ratio(1, 2)) * &p1(2));
    assert_eq!(e.pairing(VectorId::L(0), 2, 1).unwrap(), expect);
}

#[test]
fn gstar_rows() {
    let e = engine(1);
    assert_eq!(e.gstar(1).unwrap(), vec![q(1, 2)]);
    let e = engine(2);
    let row = e.gstar(1).unwrap();
    assert_eq!(row[0], q(1, 2));
    assert_eq!(row[1], &(&X::delta(1, 2) * &X::r(1, 2)) * &X::s_ratio(1, 2));
}

#[test]
fn degree_shifts_on_generators() {
    let e = engine(3);
    let gens = [X::u(1), X::s(2), X::r(1, 2), X::r(3, 3), X::t(2, 1), X::t(3, 2)];
    let shifts_by = |out: X, d: i64, by: i64| matches!(out.degree().shifted(-d), Degree::Any) || out.degree().shifted(-d) == Degree::Homogeneous(by);
    for g in &gens {
        let Degree::Homogeneous(d) = g.degree() else { panic!() };
        for k in 1..=3 {
            assert!(shifts_by(e.derive(k, g).unwrap(), d, 1), "E{k} {g}");
        }
        assert!(shifts_by(e.act_t_xbar(g).unwrap(), d, -1), "{g}");
        for m in 0..=2 {
            assert!(shifts_by(e.act_l(m, g).unwrap(), d, -m as i64), "L{m} {g}");
        }
    }
}

#[test]
fn general_vector_field_matches_special_cases() {
    let e = engine(3);
    let gens: Vec<X> = (1..=3)
        .flat_map(|i| [X::u(i), X::s(i)])
        .chain((1..=3).flat_map(|i| (i..=3).map(move |j| X::r(i, j))))
        .collect();
    for m in -1..=2 {
        let data = VectorFieldData {
            a: (1..=3).map(|i| e.pairing(VectorId::L(m), 0, i).unwrap()).collect(),
            b: (1..=3).map(|i| e.pairing(VectorId::L(m), 1, i).unwrap()).collect(),
            c: (1..=3).map(|i| e.pairing(VectorId::L(m), 2, i).unwrap()).collect(),
        };
        for g in &gens {
            assert_eq!(e.act_vector_field(&data, g).unwrap(), e.act_l(m, g).unwrap(), "L{m} on {g}");
        }
    }
    for k in 1..=3 {
        let data = VectorFieldData {
            a: (1..=3).map(|i| if i == k { X::g(i) } else { X::zero() }).collect(),
            b: vec![X::zero(); 3],
            c: vec![X::zero(); 3],
        };
        for g in &gens {
            assert_eq!(e.act_vector_field(&data, g).unwrap(), e.derive(k, g).unwrap(), "E{k} on {g}");
        }
    }
}
