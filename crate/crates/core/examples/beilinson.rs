//! Beilinson E_1 tables: rows above the level vanish and the Euler sums match.
//!
//! cargo run --example beilinson

use sheafcoh::algebra::Ring;
use sheafcoh::cohomology::CoherentSheaf;
use sheafcoh::constructions::{omega, twist};
use sheafcoh::invariants::{beilinson_e1, euler_characteristic, level};
use sheafcoh::resolution::Presentation;

fn main() -> sheafcoh::Result<()> {
    let r = Ring::prime(32003, 3)?;
    let cases = [
        ("O(-2)", Presentation::line_bundles(r.clone(), &[-2])),
        ("Omega^1(1)", twist(&omega(&r, 1)?, 1)),
        ("O + O(-3)", Presentation::line_bundles(r.clone(), &[0, -3])),
    ];
    for (label, e) in &cases {
        let table = beilinson_e1(e);
        let lambda = level(e).value;
        println!("{label}: level {lambda}, top nonzero row {:?}", table.top_row());
        print!("{}", table.to_ascii());
        let sheaf = CoherentSheaf::new(e.clone());
        for d in -2..=2 {
            assert_eq!(table.euler_sum(d), euler_characteristic(&sheaf, d));
        }
        assert!(table.rows_vanish_above(lambda));
        println!();
    }
    Ok(())
}
