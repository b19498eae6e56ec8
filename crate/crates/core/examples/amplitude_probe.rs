//! Finite-window probes of cohomological amplitude. These are evidence only;
//! every probe reports `certified: false`.
//!
//! cargo run --example amplitude_probe

use sheafcoh::algebra::Ring;
use sheafcoh::constructions::{omega, twist};
use sheafcoh::invariants::{amplitude_probe, ProbeKind};
use sheafcoh::resolution::Presentation;

fn main() -> sheafcoh::Result<()> {
    let r = Ring::prime(3, 3)?;
    let e = twist(&omega(&r, 1)?, 2);
    for kind in [ProbeKind::Symmetric, ProbeKind::Tensor, ProbeKind::QPower { q: 3 }] {
        let probe = amplitude_probe(&e, kind, 1, 2, &[-3, -1, 0])?;
        println!("{}", serde_json::to_string(&probe).expect("serializes"));
    }
    let neg = Presentation::line_bundles(r.clone(), &[-1]);
    let probe = amplitude_probe(&neg, ProbeKind::Symmetric, 1, 3, &[0])?;
    println!("O(-1): {}", serde_json::to_string(&probe).expect("serializes"));
    Ok(())
}
