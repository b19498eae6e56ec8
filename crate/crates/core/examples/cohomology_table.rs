//! Cohomology tables of line bundles and twisted differentials on P^2.
//!
//! cargo run --example cohomology_table

use sheafcoh::algebra::Ring;
use sheafcoh::cohomology::{line_bundle_oracle, CoherentSheaf};
use sheafcoh::constructions::omega;
use sheafcoh::resolution::Presentation;

fn main() -> sheafcoh::Result<()> {
    let r = Ring::prime(32003, 3)?;

    let sum = CoherentSheaf::new(Presentation::line_bundles(r.clone(), &[-1, 2]));
    let table = sum.table(-6, 3);
    println!("O(-1) + O(2) on P^2\n{}", table.to_ascii());
    for d in table.twists() {
        assert_eq!(table.get(0, d), line_bundle_oracle(2, &[-1, 2], 0, d));
    }

    let om = CoherentSheaf::new(omega(&r, 1)?);
    println!("Omega^1 on P^2\n{}", om.table(-4, 4).to_ascii());
    println!("{}", om.table(-2, 2).to_json());
    println!("h^1(Omega^1) = {}", om.h(1, 0)?);
    Ok(())
}
