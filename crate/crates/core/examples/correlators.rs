//! Genus-0 z and genus-1 φ functions of idempotent insertions.

use rotcalc::{Context, Engine};

fn main() -> rotcalc::Result<()> {
    let e = Engine::new(Context::with_n(2)?);
    println!("z_1112 = {}", e.z(&[1, 1, 1, 2])?);
    println!("phi_1 = {}", e.phi(&[1])?);
    println!("phi_12 = {}", e.phi(&[1, 2])?);
    println!("closed phi_12 agrees: {}", e.phi(&[1, 2])? == e.phi_closed(&[1, 2])?);

    // the raising recursion is symmetric although it singles out its last index
    let a = e.correlator_exact(0, &[2, 1, 1, 2, 1])?;
    let b = e.correlator_exact(0, &[1, 1, 1, 2, 2])?;
    println!("z_21121 = z_11122: {} ({} terms)", a == b, a.num_terms());
    for k in 4..=7 {
        let key: Vec<usize> = (0..k).map(|p| 1 + p % 2).collect();
        let x = e.z(&key)?;
        println!("z{key:?}: {} terms, degree {:?}", x.num_terms(), x.degree());
    }
    Ok(())
}
