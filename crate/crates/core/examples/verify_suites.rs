//! Seeded verification suites and their JSON reports.
//!
//! cargo run --example verify_suites

use sheafcoh::algebra::Ring;
use sheafcoh::harness::{
    verify_beilinson, verify_bott, verify_bott_agreement, verify_euler, verify_oracle, verify_regularity_tensor,
    verify_subadditivity,
};

fn main() -> sheafcoh::Result<()> {
    sheafcoh::harness::configure_threads();
    let r = Ring::prime(32003, 3)?;
    let seed = 7;
    let reports = [
        verify_oracle(&r, 20, seed),
        verify_bott(&r),
        verify_bott_agreement(&r),
        verify_euler(&r, seed),
        verify_subadditivity(&r, 20, seed),
        verify_regularity_tensor(&r, 20, seed),
        verify_beilinson(&r, 10, seed),
    ];
    for rep in &reports {
        println!("{}", rep.summary());
    }
    let first = &verify_subadditivity(&r, 1, seed).instances[0];
    println!("{}", serde_json::to_string_pretty(first).expect("serializes"));
    Ok(())
}
