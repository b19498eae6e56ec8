//! Minimal free resolutions, Betti tables and Hilbert data.
//!
//! cargo run --example betti_and_hilbert

use sheafcoh::algebra::Ring;
use sheafcoh::resolution::{hilbert_data, minimal_free_resolution, Presentation};

fn main() -> sheafcoh::Result<()> {
    let r = Ring::rationals(4)?;
    let x = |i| r.var(i);

    // twisted cubic: 2x2 minors of [[x0, x1, x2], [x1, x2, x3]]
    let minors = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"];
    let cols = minors.iter().map(|f| Ok(vec![r.parse_poly(f)?])).collect::<sheafcoh::Result<Vec<_>>>()?;
    let cubic = Presentation::from_columns(r.clone(), vec![0], cols)?;
    let res = minimal_free_resolution(&cubic);
    println!("twisted cubic\n{}", res.betti_table());
    println!("regularity {}", res.betti_table().regularity());

    let data = hilbert_data(&cubic, 0, 6);
    println!("Hilbert polynomial {}", data.polynomial);
    println!("Hilbert function on [0, 6]: {:?}", data.function.values().collect::<Vec<_>>());

    // complete intersection of two quadrics
    let ci = Presentation::from_columns(
        r.clone(),
        vec![0],
        vec![vec![x(0).mul(&x(1), r.field())], vec![x(2).mul(&x(3), r.field())]],
    )?;
    println!("complete intersection (2,2)\n{}", minimal_free_resolution(&ci).betti_table());
    Ok(())
}
