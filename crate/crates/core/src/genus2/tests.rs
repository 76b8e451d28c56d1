use super::*;
use crate::expr::Generator;
use crate::rational::Rat;
use crate::Context;

fn engine(n: usize) -> Engine {
    Engine::new(Context::with_n(n).unwrap())
}

type E = Expression;

fn c(n: i64, d: i64) -> E {
    E::frac(n, d)
}

#[test]
fn f2_rotation_at_n1() {
    let e = engine(1);
    let (r, t2, t3, ig) = (E::r(1, 1), E::t(2, 1), E::t(3, 1), E::inv_g(1));
    let expect = &(&(&(&t3 * &c(-5, 5760)) + &(&(&r * &t2) * &c(29, 5760))) * &ig.pow(2))
        + &(&(&r.pow(3) * &ig) * &c(-28, 5760));
    assert_eq!(e.f2(F2Route::Rotation).unwrap(), expect);
}

#[test]
fn l1f2_and_prediction_at_n1() {
    let e = engine(1);
    let (r, t2, ig) = (E::r(1, 1), E::t(2, 1), E::inv_g(1));
    let expect = &(&(&t2 * &ig.pow(2)) * &c(6, 1152)) + &(&(&r.pow(2) * &ig) * &c(-49, 4 * 1152));
    assert_eq!(e.l1f2_target().unwrap(), expect);
    assert_eq!(e.prediction(PredictionRoute::Rotation).unwrap(), expect);
    assert_eq!(e.prediction(PredictionRoute::GStar).unwrap(), expect);
}

#[test]
fn b_diag_t4_coefficient() {
    let e = engine(2);
    let b = e.b_diag(1).unwrap();
    let coeff = b.coefficient_of(Generator::t(4, 1), 1);
    assert_eq!(coeff, &E::s_pow(1, -4) * &c(-1, 576));
}

#[test]
fn cd_paths_agree() {
    let e = engine(2);
    for i in 1..=2 {
        for k in 2..=4 {
            assert_eq!(e.appendix_d(i, k, CdPath::Definition).unwrap(), e.appendix_d(i, k, CdPath::Expanded).unwrap());
            for j in 1..=2 {
                assert_eq!(
                    e.appendix_c(i, j, k, CdPath::Definition).unwrap(),
                    e.appendix_c(i, j, k, CdPath::Expanded).unwrap(),
                    "c_{i}{j};{k}"
                );
            }
        }
    }
}

#[test]
fn f2_routes_agree_at_n1_and_n2() {
    for n in 1..=2 {
        let e = engine(n);
        let t = std::time::Instant::now();
        assert_eq!(e.f2(F2Route::Assembled).unwrap(), e.f2(F2Route::Rotation).unwrap(), "N={n}");
        eprintln!("f2 N={n}: {:?}", t.elapsed());
    }
}

#[test]
fn appendix_expansions_match_definitions() {
    for n in 1..=2 {
        let e = engine(n);
        let t = std::time::Instant::now();
        assert_eq!(e.l_a().unwrap(), e.l_a_definition().unwrap(), "L_A N={n}");
        assert_eq!(e.l_b().unwrap(), e.l_b_definition().unwrap(), "L_B N={n}");
        eprintln!("appendix N={n}: {:?}", t.elapsed());
    }
}

#[test]
fn l1_constraint_routes_at_n2() {
    let e = engine(2);
    let target = e.l1f2_target().unwrap();
    assert_eq!(e.prediction(PredictionRoute::Rotation).unwrap(), target);
    assert_eq!(e.prediction(PredictionRoute::GStar).unwrap(), target);
    assert_eq!(e.act_l(1, &e.f2(F2Route::Rotation).unwrap()).unwrap(), target);
    assert_eq!(&e.l_a().unwrap() + &e.l_b().unwrap(), target);
}

#[test]
fn flipping_any_coefficient_breaks_f2() {
    let e = engine(2);
    let f = f2::f2_rotation_formula();
    let good = f.evaluate(&e).unwrap();
    for k in 0..f.terms.len() {
        assert_ne!(f.evaluate_flipped(&e, k).unwrap(), good, "{}", f.terms[k].label);
    }
    let _ = Rat::ONE;
}
