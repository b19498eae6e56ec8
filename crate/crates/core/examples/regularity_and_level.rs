//! Castelnuovo-Mumford regularity and the level, with the witnesses behind it.
//!
//! cargo run --example regularity_and_level

use sheafcoh::algebra::Ring;
use sheafcoh::constructions::{omega, twist};
use sheafcoh::invariants::{level, sheaf_regularity};
use sheafcoh::resolution::Presentation;

fn main() -> sheafcoh::Result<()> {
    let r = Ring::prime(32003, 3)?;
    let om = omega(&r, 1)?;
    let cases = [
        ("O(2)", Presentation::line_bundles(r.clone(), &[2])),
        ("O(-1)", Presentation::line_bundles(r.clone(), &[-1])),
        ("O(-3)", Presentation::line_bundles(r.clone(), &[-3])),
        ("Omega^1", om.clone()),
        ("Omega^1(2)", twist(&om, 2)),
    ];
    for (label, m) in &cases {
        let l = level(m);
        println!("{label:<11} reg {:>3}  level {}", sheaf_regularity(m), l.value);
        for w in &l.witnesses {
            println!("            h^{}({label}({})) = {}", w.q + w.i, -1 - w.i as i64, w.h);
        }
    }
    println!("{}", serde_json::to_string(&level(&om)).expect("serializes"));
    Ok(())
}
