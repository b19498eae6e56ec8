//! Certified upper bounds on the Frobenius amplitude, and the refusal on a
//! sheaf that is not locally free.
//!
//! cargo run --example phi_certificate

use sheafcoh::algebra::Ring;
use sheafcoh::constructions::{omega, twist};
use sheafcoh::invariants::phi_certificate;
use sheafcoh::resolution::Presentation;

fn main() -> sheafcoh::Result<()> {
    let r = Ring::prime(7, 3)?;
    for d in -2..=3 {
        let c = phi_certificate(&Presentation::line_bundles(r.clone(), &[d]))?;
        println!("phi(O({d})) <= {}", c.value);
    }
    let c = phi_certificate(&twist(&omega(&r, 1)?, 2))?;
    println!("phi(Omega^1(2)) <= {} via {:?}", c.value, c.witnesses);

    let hyperplane = Presentation::from_columns(r.clone(), vec![0], vec![vec![r.var(0)]])?;
    match phi_certificate(&hyperplane) {
        Ok(c) => println!("unexpected certificate {}", c.value),
        Err(e) => println!("O_H: {e}"),
    }
    Ok(())
}
