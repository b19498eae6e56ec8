//! The Frobenius vanishing estimate over F_p: after pulling E back along p^N with
//! p^N >= reg(F), h^i(E^(p^N) (x) F) vanishes above the level of E(-n).
//!
//! cargo run --example key_theorem

use sheafcoh::algebra::Ring;
use sheafcoh::cohomology::CoherentSheaf;
use sheafcoh::constructions::{omega, q_power_pullback, tensor, twist};
use sheafcoh::harness::suites::frobenius_exponent;
use sheafcoh::harness::verify_key_theorem;
use sheafcoh::invariants::{level, sheaf_regularity};
use sheafcoh::resolution::Presentation;

fn main() -> sheafcoh::Result<()> {
    let p = 3;
    let r = Ring::prime(p, 3)?;
    let e = twist(&omega(&r, 1)?, 3);
    let f = Presentation::line_bundles(r.clone(), &[-3]);
    let reg_f = sheaf_regularity(&f).finite().expect("nonzero bundle");
    let (big_n, q) = frobenius_exponent(p, reg_f);
    let bound = level(&twist(&e, -2)).value;
    let g = CoherentSheaf::new(tensor(&q_power_pullback(&e, q as u32)?, &f)?);
    println!("E = Omega^1(3), F = O(-3) over F_{p}: reg F = {reg_f}, N = {big_n}, p^N = {q}");
    println!("lambda(E(-2)) = {bound}");
    for i in 0..=2 {
        println!("h^{i}(E^({q}) (x) F) = {}", g.h(i, 0)?);
    }

    for (p, n) in [(2, 1), (3, 2)] {
        let report = verify_key_theorem(p, n, 10, 1)?;
        println!("{} (p = {p}, n = {n})", report.summary());
    }
    Ok(())
}
