//! Building, normalizing, rendering and evaluating expressions.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rotcalc::expr::evaluate;
use rotcalc::verify::random_point;
use rotcalc::Expression as E;

fn main() -> rotcalc::Result<()> {
    // 1/(u1-u2) + 1/(u2-u1) cancels exactly
    let x = &E::inv_delta(1, 2) + &E::inv_delta(2, 1);
    assert!(x.is_zero());

    // partial fractions over different differences combine into one denominator
    let y = &E::inv_delta(1, 2) * &E::inv_delta(2, 3);
    let z = &E::inv_delta(1, 3) * &(&E::inv_delta(1, 2) + &E::inv_delta(2, 3));
    println!("1/((u1-u2)(u2-u3)) = {y}");
    assert_eq!(y, z);
    println!("= 1/(u1-u3) (1/(u1-u2) + 1/(u2-u3))");

    // s = sqrt(g) may carry negative powers; s^2 is g
    let w = &(&E::s_pow(1, -3) * &E::r(1, 2)) * &E::s(1).pow(2);
    println!("s1^-3 r12 g1 = {w}, degree {:?}", w.degree());

    let point = random_point(3, 4, &mut ChaCha8Rng::seed_from_u64(1));
    println!("value at a random point: {}", evaluate(&y, &point)?);
    println!("json: {}", serde_json::to_string(&w.to_json()).unwrap());
    Ok(())
}
