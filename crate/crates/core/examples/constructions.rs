//! Building modules: twists, sums, tensor and symmetric powers, q-power pullbacks,
//! Koszul sheaves and differentials.
//!
//! cargo run --example constructions

use sheafcoh::algebra::Ring;
use sheafcoh::cohomology::CoherentSheaf;
use sheafcoh::constructions::{direct_sum, is_locally_free, koszul_r, omega, q_power_pullback, sym_power, tensor, twist};
use sheafcoh::harness::to_module_file;
use sheafcoh::resolution::{minimal_free_resolution, Presentation};

fn show(label: &str, m: &Presentation<sheafcoh::algebra::PrimeField>) {
    let t = CoherentSheaf::new(m.clone()).table(-3, 3);
    println!("{label}\n{}", t.to_ascii());
}

fn main() -> sheafcoh::Result<()> {
    let r = Ring::prime(5, 3)?;
    let om = omega(&r, 1)?;
    println!("Omega^1 on P^2 over F_5:\n{}", to_module_file(&om).to_json());
    println!("{}", minimal_free_resolution(&om).betti_table());

    show("Omega^1(2)", &twist(&om, 2));
    show("R_1 (= Omega^1(1))", &koszul_r(&r, 1)?);
    show("Omega^1 + O(1)", &direct_sum(&om, &Presentation::line_bundles(r.clone(), &[1]))?);
    show("Omega^1 (x) Omega^1(3)", &tensor(&om, &twist(&om, 3))?);
    show("Sym^2 Omega^1(2)", &sym_power(&twist(&om, 2), 2));
    let frob = q_power_pullback(&twist(&om, 1), 5)?;
    show("Frobenius pullback of Omega^1(1)", &frob);

    let point = Presentation::from_columns(r.clone(), vec![0], vec![vec![r.var(0)], vec![r.var(1)]])?;
    println!("locally free: Omega^1 {}, a point {}", is_locally_free(&om, 20, 1), is_locally_free(&point, 20, 1));
    Ok(())
}
