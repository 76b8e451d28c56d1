//! The genus-2 L₁-constraint: L₁F₂ against the genus-0/1 prediction, and
//! the split L₁F₂ = L_A + L_B.

use rotcalc::genus2::{F2Route, PredictionRoute};
use rotcalc::{Context, Engine};

fn main() -> rotcalc::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(2, |a| a.parse().expect("N"));
    let e = Engine::new(Context::with_n(n)?);
    let lhs = e.act_l(1, &e.f2(F2Route::Rotation)?)?;
    let closed = e.l1f2_target()?;
    let pred = e.prediction(PredictionRoute::Rotation)?;
    let pred_g = e.prediction(PredictionRoute::GStar)?;
    println!("N={n}: L1 F2 has {} terms", lhs.num_terms());
    println!("  = closed form: {}", lhs == closed);
    println!("  = prediction: {}", lhs == pred);
    println!("  = prediction via G*: {}", lhs == pred_g);

    let (la, lb) = e.appendix_decomposition()?;
    println!("  L_A: {} terms, t-levels {:?}", la.num_terms(), la.tau_levels());
    println!("  L_B: {} terms, t-levels {:?}", lb.num_terms(), lb.tau_levels());
    println!("  L_A + L_B = L1 F2: {}", &la + &lb == lhs);
    if n == 1 {
        println!("  L1 F2 = {lhs}");
    }
    Ok(())
}
