use super::*;

fn engine(n: usize) -> Engine {
    Engine::new(Context::with_n(n).unwrap())
}

#[test]
fn every_identity_passes_at_small_n() {
    for n in 1..=2 {
        let e = engine(n);
        for identity in registry().iter().filter(|i| i.supports(n)) {
            let r = verify_with(&e, identity.id).unwrap();
            assert!(r.passed, "{} N={n}: {:?} witness {}", r.identity, r.failed_check, r.witness);
            eprintln!("{:<22} N={n} checks={:<5} {:?}", r.identity, r.checks, r.elapsed);
        }
    }
}

#[test]
fn unknown_identity_is_an_error() {
    assert_eq!(verify("no-such-thing", 2).unwrap_err(), Error::UnknownIdentity("no-such-thing".into()));
    assert!(matches!(verify("theta-sym", 1), Err(Error::InvalidContext(_))));
}

#[test]
fn mutations_are_caught() {
    let e = engine(2);
    for (k, identity) in registry().iter().enumerate() {
        if let Some(r) = verify_mutated(&e, identity.id, k as u64).unwrap() {
            assert!(!r.passed, "{}", identity.id);
            assert!(!r.witness.is_zero());
        }
    }
}

#[test]
fn spot_checks_agree() {
    let e = engine(2);
    for id in ["theta-sym", "omega-derivative", "l1-derived", "virasoro-main"] {
        let r = spot_check(&e, id, 10, 7).unwrap();
        assert!(r.mismatches.is_empty(), "{id}: {:?}", r.mismatches);
    }
}

#[test]
fn flipped_term_breaks_equality() {
    let x = &crate::Expression::r(1, 2) + &crate::Expression::u(1);
    assert_eq!(flip_term(&flip_term(&x, 1), 1), x);
    assert_ne!(flip_term(&x, 0), x);
}
