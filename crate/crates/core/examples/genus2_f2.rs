//! F₂ in terms of rotation coefficients, and from the genus-2 tensors.

use std::time::Instant;

use rotcalc::genus2::{f2_rotation_formula, F2Route};
use rotcalc::{Context, Engine};

fn main() -> rotcalc::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(2, |a| a.parse().expect("N"));
    let e = Engine::new(Context::with_n(1)?);
    println!("N=1: F2 = {}", e.f2(F2Route::Rotation)?);

    let formula = f2_rotation_formula();
    println!("rotation form: {} terms over {}", formula.terms.len(), formula.norm);

    let e = Engine::new(Context::with_n(n)?);
    let t = Instant::now();
    let rot = e.f2(F2Route::Rotation)?;
    let asm = e.f2(F2Route::Assembled)?;
    println!(
        "N={n}: {} terms, routes agree: {}, t-levels {:?}, pole order {} ({:?})",
        rot.num_terms(),
        rot == asm,
        rot.tau_levels(),
        rot.max_delta_multiplicity(),
        t.elapsed()
    );
    Ok(())
}
