//! E_i, L_m and T(X̄) as derivations; the theta/Omega/Lambda functions.

use rotcalc::{Context, Engine, Expression as E};

fn main() -> rotcalc::Result<()> {
    let e = Engine::new(Context::with_n(2)?);

    for x in [E::u(1), E::s(1), E::r(1, 2), E::r(1, 1), E::t(2, 1)] {
        println!("E1 {x} = {}", e.derive(1, &x)?);
    }
    println!();
    for m in 0..=2 {
        println!("L{m} r11 = {}", e.act_l(m, &E::r(1, 1))?);
    }
    println!("T(Xbar) t2_1 = {}", e.act_t_xbar(&E::t(2, 1))?);

    // the symmetric combination of theta has no pole
    let sym = &e.theta(1, 2)? + &e.theta(2, 1)?;
    println!("\ntheta12 + theta21 = {sym}");
    let omega = e.omega(1, 2)?;
    println!("Omega12: {} terms, pole order {}", omega.num_terms(), omega.max_delta_multiplicity());
    let lambda = e.lambda(1, 2)?;
    println!("Lambda12: {} terms, pole order {}", lambda.num_terms(), lambda.max_delta_multiplicity());
    Ok(())
}
