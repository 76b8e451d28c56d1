//! The identity registry: exact checks in parallel, random-point
//! evaluation and sign-flip mutation.

use rotcalc::verify::{registry, spot_check, verify_many, verify_mutated};
use rotcalc::{Context, Engine};

fn main() -> rotcalc::Result<()> {
    let e = Engine::new(Context::with_n(2)?);
    let ids: Vec<&str> = registry().iter().filter(|i| i.supports(2)).map(|i| i.id).collect();
    for r in verify_many(&e, &ids) {
        let r = r?;
        println!("{:<22} {:>4} checks  {}", r.identity, r.checks, if r.passed { "pass" } else { "FAIL" });
    }

    let s = spot_check(&e, "omega-derivative", 20, 3)?;
    println!("\nomega-derivative at {} points: {} mismatches", s.points, s.mismatches.len());

    if let Some(r) = verify_mutated(&e, "virasoro-main", 0)? {
        println!("mutated virasoro-main: passed = {}, witness has {} terms", r.passed, r.witness_terms);
    }
    Ok(())
}
