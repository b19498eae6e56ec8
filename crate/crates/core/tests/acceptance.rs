//! Acceptance criteria, each checked exactly. Prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails.
//!
//! Closed forms used as oracles here are written out independently of the
//! library's own oracle helpers.

use std::process::ExitCode;
use std::time::Instant;

use sheafcoh::algebra::{PrimeField, Ring};
use sheafcoh::cohomology::CoherentSheaf;
use sheafcoh::constructions::{omega, twist};
use sheafcoh::harness::corpus::random_line_bundle_sums;
use sheafcoh::harness::{
    verify_beilinson, verify_bott, verify_euler, verify_key_theorem, verify_regularity_tensor, verify_subadditivity,
    VerificationReport,
};
use sheafcoh::invariants::{level, phi_certificate, LevelResult, LevelWitness};
use sheafcoh::resolution::Presentation;

const CHAR: u64 = 32003;
const SEED: u64 = 0;

fn ring(n: usize) -> Ring<PrimeField> {
    Ring::prime(CHAR, n + 1).expect("valid ring")
}

fn choose(m: i64, k: i64) -> u64 {
    if k < 0 || m < k {
        return 0;
    }
    (0..k).fold(1u128, |acc, j| acc * (m - j) as u128 / (j + 1) as u128) as u64
}

/// `h^i(P^n, O(t))`: sections count monomials, top cohomology is dual to them.
fn line(n: usize, i: usize, t: i64) -> u64 {
    let n_ = n as i64;
    match i {
        0 if t >= 0 => choose(t + n_, n_),
        i if i == n && t < -n_ => choose(-t - 1, n_),
        _ => 0,
    }
}

/// `h^q(P^n, Ω^p(k))`, with the top row obtained by Serre duality from sections.
fn bott(n: usize, p: usize, q: usize, k: i64) -> u64 {
    let (n_, p_) = (n as i64, p as i64);
    let sections = |p_: i64, k: i64| if k > p_ { choose(k + n_ - p_, k) * choose(k - 1, p_) } else { 0 };
    let mut h = 0;
    if q == 0 {
        h += sections(p_, k);
    }
    if q == p && k == 0 {
        h += 1;
    }
    if q == n {
        h += sections(n_ - p_, -k);
    }
    h
}

/// Level and witnesses from an arbitrary cohomology function on `P^n`.
fn level_from(n: usize, h: impl Fn(usize, i64) -> u64) -> LevelResult {
    let mut witnesses = Vec::new();
    for i in 0..n {
        for q in 1..=n - i {
            let v = h(q + i, -1 - i as i64);
            if v != 0 {
                witnesses.push(LevelWitness { q, i, h: v });
            }
        }
    }
    LevelResult { value: witnesses.iter().map(|w| w.q).max().unwrap_or(0), witnesses }
}

fn line_sum_level(n: usize, twists: &[i64]) -> LevelResult {
    level_from(n, |i, d| twists.iter().map(|&a| line(n, i, a + d)).sum())
}

fn suite(report: &VerificationReport, failures: &mut Vec<String>) -> String {
    for f in report.failures().take(3) {
        failures.push(format!("{}: {}", report.suite, f.inputs));
    }
    report.summary()
}

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_checks(detail: String, failures: Vec<String>) -> Outcome {
    let pass = failures.is_empty();
    let detail = if pass { detail } else { format!("{detail}; first failures: {}", failures.join(" | ")) };
    Outcome { pass, detail }
}

fn oracle_equivalence() -> Outcome {
    let mut failures = Vec::new();
    let mut cells = 0usize;
    for n in 1..=3 {
        let r = ring(n);
        let (lo, hi) = (-(n as i64) - 4, n as i64 + 4);
        for twists in random_line_bundle_sums(200, 4, SEED) {
            let table = CoherentSheaf::new(Presentation::line_bundles(r.clone(), &twists)).table(lo, hi);
            for i in 0..=n {
                for d in lo..=hi {
                    cells += 1;
                    let want: u64 = twists.iter().map(|&a| line(n, i, a + d)).sum();
                    if table.get(i, d) != want {
                        failures.push(format!("n={n} {twists:?} h^{i}({d}) = {} != {want}", table.get(i, d)));
                    }
                }
            }
        }
    }
    from_checks(format!("600 sums, {cells} cells"), failures)
}

fn bott_agreement() -> Outcome {
    let mut failures = Vec::new();
    let mut cells = 0usize;
    for n in 1..=3 {
        let r = ring(n);
        let b = n as i64 + 4;
        for p in 0..=n {
            let table = CoherentSheaf::new(omega(&r, p as i64).unwrap()).table(-b, b);
            for q in 0..=n {
                for k in -b..=b {
                    cells += 1;
                    let want = bott(n, p, q, k);
                    if table.get(q, k) != want {
                        failures.push(format!("n={n} h^{q}(Omega^{p}({k})) = {} != {want}", table.get(q, k)));
                    }
                }
            }
        }
    }
    from_checks(format!("{cells} cells"), failures)
}

fn euler_identity() -> Outcome {
    let mut failures = Vec::new();
    let parts: Vec<String> = (1..=3).map(|n| suite(&verify_euler(&ring(n), SEED), &mut failures)).collect();
    from_checks(parts.join(", "), failures)
}

fn level_values() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |label: String, got: LevelResult, want_value: usize, oracle: LevelResult| {
        if got.value != want_value || got != oracle {
            failures.push(format!("{label}: engine {got:?}, expected {want_value} with {oracle:?}"));
        }
    };
    for n in 1..=3 {
        let r = ring(n);
        for d in 0..=3 {
            let got = level(&Presentation::line_bundles(r.clone(), &[d]));
            check(format!("P^{n} O({d})"), got, 0, line_sum_level(n, &[d]));
        }
        check(format!("P^{n} O(-1)"), level(&Presentation::line_bundles(r.clone(), &[-1])), 1, line_sum_level(n, &[-1]));
        let top = -(n as i64) - 1;
        check(format!("P^{n} O({top})"), level(&Presentation::line_bundles(r.clone(), &[top])), n, line_sum_level(n, &[top]));
    }
    let om = level(&omega(&ring(2), 1).unwrap());
    check("P^2 Omega^1".into(), om, 1, level_from(2, |i, d| bott(2, 1, i, d)));
    from_checks("O(d) for 0<=d<=3, O(-1), O(-n-1) on P^1..P^3; Omega^1 on P^2".into(), failures)
}

fn subadditivity() -> Outcome {
    let mut failures = Vec::new();
    let s = suite(&verify_subadditivity(&ring(2), 100, SEED), &mut failures);
    from_checks(s, failures)
}

fn regularity_tensor() -> Outcome {
    let mut failures = Vec::new();
    let s = suite(&verify_regularity_tensor(&ring(2), 100, SEED), &mut failures);
    from_checks(s, failures)
}

fn key_theorem() -> Outcome {
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    for p in [2, 3, 5] {
        for n in [1, 2] {
            match verify_key_theorem(p, n, 30, SEED) {
                Ok(report) => parts.push(format!("p={p} n={n} {}", suite(&report, &mut failures))),
                Err(e) => failures.push(format!("p={p} n={n}: {e}")),
            }
        }
    }
    from_checks(parts.join(", "), failures)
}

fn beilinson() -> Outcome {
    let mut failures = Vec::new();
    let s = suite(&verify_beilinson(&ring(2), 30, SEED), &mut failures);
    from_checks(s, failures)
}

fn bott_vanishing() -> Outcome {
    let mut failures = Vec::new();
    let parts: Vec<String> =
        (1..=3).map(|n| format!("n={n} {}", suite(&verify_bott(&ring(n)), &mut failures))).collect();
    from_checks(parts.join(", "), failures)
}

fn phi_certificates() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for n in 1..=3 {
        let r = ring(n);
        for d in -4..=n as i64 + 3 {
            count += 1;
            let got = match phi_certificate(&Presentation::line_bundles(r.clone(), &[d])) {
                Ok(c) => c,
                Err(e) => {
                    failures.push(format!("P^{n} O({d}): {e}"));
                    continue;
                }
            };
            let want = line_sum_level(n, &[d - n as i64]);
            if got != want || (d >= n as i64 && got.value != 0) {
                failures.push(format!("P^{n} O({d}): certificate {}, expected {}", got.value, want.value));
            }
        }
    }
    let r = ring(2);
    match phi_certificate(&twist(&omega(&r, 1).unwrap(), 2)) {
        Ok(c) if c.value == 1 => {}
        Ok(c) => failures.push(format!("P^2 Omega^1(2): certificate {}, expected 1", c.value)),
        Err(e) => failures.push(format!("P^2 Omega^1(2): {e}")),
    }
    from_checks(format!("{count} line bundles; Omega^1(2) on P^2"), failures)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence, line bundles", oracle_equivalence),
        ("Bott agreement", bott_agreement),
        ("Euler characteristic identity", euler_identity),
        ("level values", level_values),
        ("level subadditivity", subadditivity),
        ("tensor regularity and reg-twist vanishing", regularity_tensor),
        ("Frobenius key estimate", key_theorem),
        ("Beilinson rows and Euler identity", beilinson),
        ("Bott vanishing", bott_vanishing),
        ("phi certificates", phi_certificates),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        all &= out.pass;
        println!(
            "{} {:>2} {name}: {} [{:.1}s]",
            if out.pass { "PASS" } else { "FAIL" },
            k + 1,
            out.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
