//! Sheaf regularity, the level `λ`, Frobenius-amplitude certificates, Beilinson
//! `E_1` tables and finite-window amplitude probes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Field;
use crate::cohomology::CoherentSheaf;
use crate::constructions::{is_locally_free, koszul_r, q_power_pullback, sym_power, tensor, twist};
use crate::error::{Error, Result};
use crate::resolution::{Presentation, Regularity};

/// Seed of the local-freeness gate used by [`phi_certificate`].
pub const GATE_SEED: u64 = 0x5eed;
/// Number of random points evaluated by the local-freeness gate.
pub const GATE_POINTS: usize = 20;

/// Mumford's criterion at `m`: `h^i(F(m - i)) = 0` for `1 <= i <= n`.
pub fn is_m_regular<K: Field>(sheaf: &CoherentSheaf<K>, m: i64) -> bool {
    (1..=sheaf.dim()).all(|i| sheaf.h(i, m - i as i64).unwrap() == 0)
}

/// Castelnuovo–Mumford regularity of `M~`, searching down from the regularity of
/// the module. Minus infinity when the support has dimension at most 0.
pub fn sheaf_regularity_of<K: Field>(sheaf: &CoherentSheaf<K>) -> Regularity {
    let hp = sheaf.hilbert_polynomial();
    if hp.degree().unwrap_or(0) == 0 {
        return Regularity::MinusInfinity;
    }
    let Regularity::Finite(mut m) = sheaf.resolution().betti_table().regularity() else {
        return Regularity::MinusInfinity;
    };
    assert!(is_m_regular(sheaf, m), "module regularity bounds sheaf regularity");
    // positive-dimensional support forces top cohomology in very negative twists
    while is_m_regular(sheaf, m - 1) {
        m -= 1;
    }
    Regularity::Finite(m)
}

pub fn sheaf_regularity<K: Field>(m: &Presentation<K>) -> Regularity {
    sheaf_regularity_of(&CoherentSheaf::new(m.clone()))
}

/// One nonzero cell `h^{q+i}(F(-1-i))` of the level grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LevelWitness {
    pub q: usize,
    pub i: usize,
    pub h: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelResult {
    pub value: usize,
    pub witnesses: Vec<LevelWitness>,
}

/// `λ(F) = max({q | ∃ i >= 0, h^{q+i}(F(-1-i)) != 0} ∪ {0})`, evaluated on the
/// grid `q >= 1`, `q + i <= n`. Witnesses are ordered by `i`, then `q`.
pub fn level_of<K: Field>(sheaf: &CoherentSheaf<K>) -> LevelResult {
    let n = sheaf.dim();
    // cells with q + i > n lie above the top cohomological degree
    debug_assert!(sheaf.h(n + 1, 0).is_err());
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (1..=n - i).map(move |q| (q, i))).collect();
    let values: Vec<u64> =
        cells.par_iter().map(|&(q, i)| sheaf.h(q + i, -1 - i as i64).unwrap()).collect();
    let witnesses: Vec<LevelWitness> = cells
        .into_iter()
        .zip(values)
        .filter(|&(_, h)| h != 0)
        .map(|((q, i), h)| LevelWitness { q, i, h })
        .collect();
    LevelResult { value: witnesses.iter().map(|w| w.q).max().unwrap_or(0), witnesses }
}

pub fn level<K: Field>(m: &Presentation<K>) -> LevelResult {
    level_of(&CoherentSheaf::new(m.clone()))
}

/// Certified upper bound `φ(E) <= λ(E(-n))` on the Frobenius amplitude of a
/// locally free `E`. Refuses inputs that fail the local-freeness gate.
pub fn phi_certificate<K: Field>(e: &Presentation<K>) -> Result<LevelResult> {
    if !is_locally_free(e, GATE_POINTS, GATE_SEED) {
        return Err(Error::NotLocallyFree(
            "relation matrix drops rank at a sampled point".into(),
        ));
    }
    Ok(level(&twist(e, -(e.ring().dim() as i64))))
}

/// `χ(O(t)) = (t+1)(t+2)...(t+n) / n!` on `P^n`, valid for every `t`.
pub fn chi_line_bundle(n: usize, t: i64) -> i64 {
    let mut acc = BigRational::from_integer(BigInt::from(1));
    for k in 1..=n as i64 {
        acc *= BigRational::new(BigInt::from(t + k), BigInt::from(k));
    }
    acc.to_integer().to_i64().expect("fits")
}

/// `e[a + n][b] = h^b(R_{-a} ⊗ E)` for `a` in `-n..=0`, `b` in `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BeilinsonTable {
    pub n: usize,
    pub e: Vec<Vec<u64>>,
}

impl BeilinsonTable {
    pub fn get(&self, a: i64, b: usize) -> u64 {
        self.e[(a + self.n as i64) as usize][b]
    }

    /// `Σ (-1)^{a+b} e_{ab} χ(O(a + d))`.
    pub fn euler_sum(&self, d: i64) -> i64 {
        let n = self.n as i64;
        let mut s = 0;
        for a in -n..=0 {
            for b in 0..=self.n {
                let v = self.get(a, b) as i64 * chi_line_bundle(self.n, a + d);
                s += if (a + b as i64).rem_euclid(2) == 0 { v } else { -v };
            }
        }
        s
    }

    /// Highest row `b` holding a nonzero entry.
    pub fn top_row(&self) -> Option<usize> {
        (0..=self.n).rev().find(|&b| self.e.iter().any(|col| col[b] != 0))
    }

    pub fn rows_vanish_above(&self, bound: usize) -> bool {
        self.top_row().is_none_or(|b| b <= bound)
    }

    /// Rows `b = n` down to `0`, columns `a = -n..0`.
    pub fn to_ascii(&self) -> String {
        let n = self.n as i64;
        let mut s = format!("{:>5}", "b\\a");
        for a in -n..=0 {
            s.push_str(&format!("{a:>5}"));
        }
        s.push('\n');
        for b in (0..=self.n).rev() {
            s.push_str(&format!("{:>5}", format!("{b}:")));
            for a in -n..=0 {
                s.push_str(&format!("{:>5}", self.get(a, b)));
            }
            s.push('\n');
        }
        s
    }
}

pub fn beilinson_e1_of<K: Field>(e: &Presentation<K>) -> Result<BeilinsonTable> {
    let ring = e.ring();
    let n = ring.dim();
    let columns: Vec<Vec<u64>> = (0..=n as i64)
        .rev()
        .map(|m| -> Result<Vec<u64>> {
            let sheaf = CoherentSheaf::new(tensor(&koszul_r(ring, m)?, e)?);
            (0..=n).map(|b| sheaf.h(b, 0)).collect()
        })
        .collect::<Result<_>>()?;
    Ok(BeilinsonTable { n, e: columns })
}

/// Beilinson `E_1` table of `E`.
pub fn beilinson_e1<K: Field>(e: &Presentation<K>) -> BeilinsonTable {
    beilinson_e1_of(e).expect("R_m is defined for 0 <= m <= n and rings agree")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum ProbeKind {
    Symmetric,
    Tensor,
    /// The `N`-th probe object is the pullback along the `q^N`-power map.
    QPower { q: u32 },
}

/// Finite-window evidence about an amplitude. Never a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmplitudeProbe {
    #[serde(flatten)]
    pub kind: ProbeKind,
    pub window: [u32; 2],
    pub probe_twists: Vec<i64>,
    pub observed_bound: usize,
    pub certified: bool,
}

fn power<K: Field>(e: &Presentation<K>, kind: ProbeKind, big_n: u32) -> Result<Presentation<K>> {
    match kind {
        ProbeKind::Symmetric => Ok(sym_power(e, big_n as usize)),
        ProbeKind::Tensor => {
            let mut acc = Presentation::free(e.ring().clone(), vec![0]);
            for _ in 0..big_n {
                acc = tensor(&acc, e)?;
            }
            Ok(acc)
        }
        ProbeKind::QPower { q } => {
            let qn = q.checked_pow(big_n).ok_or_else(|| Error::InvalidArgument("q^N overflows".into()))?;
            q_power_pullback(e, qn)
        }
    }
}

/// Smallest `i0` with `h^i(P^N(E)(b)) = 0` for every `i > i0`, `N` in the window
/// and `b` in `probe_twists`.
pub fn amplitude_probe<K: Field>(
    e: &Presentation<K>,
    kind: ProbeKind,
    n_min: u32,
    n_max: u32,
    probe_twists: &[i64],
) -> Result<AmplitudeProbe> {
    if probe_twists.is_empty() {
        return Err(Error::InvalidArgument("amplitude probe needs at least one twist".into()));
    }
    if n_min > n_max {
        return Err(Error::InvalidArgument(format!("empty power window [{n_min}, {n_max}]")));
    }
    let n = e.ring().dim();
    let mut bound = 0;
    for big_n in n_min..=n_max {
        let sheaf = CoherentSheaf::new(power(e, kind, big_n)?);
        for &b in probe_twists {
            for i in (bound + 1..=n).rev() {
                if sheaf.h(i, b)? != 0 {
                    bound = i;
                    break;
                }
            }
        }
    }
    Ok(AmplitudeProbe {
        kind,
        window: [n_min, n_max],
        probe_twists: probe_twists.to_vec(),
        observed_bound: bound,
        certified: false,
    })
}

/// `χ(E(d))` read from the Hilbert polynomial.
pub fn euler_characteristic<K: Field>(sheaf: &CoherentSheaf<K>, d: i64) -> i64 {
    let hp = sheaf.hilbert_polynomial();
    if hp.is_zero() {
        return 0;
    }
    debug_assert!(!hp.leading_coefficient().is_zero());
    hp.eval(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, Ring};
    use crate::constructions::{direct_sum, omega};

    fn ring(nv: usize) -> Ring<PrimeField> {
        Ring::prime(32003, nv).unwrap()
    }

    fn o(r: &Ring<PrimeField>, d: i64) -> Presentation<PrimeField> {
        Presentation::line_bundles(r.clone(), &[d])
    }

    #[test]
    fn regularity_values() {
        for nv in 2..=4 {
            let r = ring(nv);
            for d in -4..=4 {
                assert_eq!(sheaf_regularity(&o(&r, d)), Regularity::Finite(-d));
            }
        }
        let r = ring(3);
        let ideal = Presentation::from_columns(r.clone(), vec![1, 1], vec![vec![r.var(1), r.var(0).neg(r.field())]]).unwrap();
        assert_eq!(sheaf_regularity(&ideal), Regularity::Finite(1));
        assert_eq!(sheaf_regularity(&omega(&r, 1).unwrap()), Regularity::Finite(2));
        let point = Presentation::from_columns(r.clone(), vec![0], vec![vec![r.var(0)], vec![r.var(1)]]).unwrap();
        assert_eq!(sheaf_regularity(&point), Regularity::MinusInfinity);
        assert_eq!(sheaf_regularity(&Presentation::zero(r)), Regularity::MinusInfinity);
    }

    #[test]
    fn level_values() {
        for nv in 2..=4 {
            let r = ring(nv);
            let n = nv - 1;
            for d in 0..=3 {
                assert_eq!(level(&o(&r, d)).value, 0);
            }
            let l = level(&o(&r, -1));
            assert_eq!(l.value, 1);
            assert!(l.witnesses.contains(&LevelWitness { q: 1, i: n - 1, h: 1 }));
            let l = level(&o(&r, -(n as i64) - 1));
            assert_eq!(l.value, n);
            assert_eq!(l.witnesses.iter().find(|w| w.q == n).map(|w| w.i), Some(0));
        }
        let r = ring(3);
        assert_eq!(level(&omega(&r, 1).unwrap()).value, 1);
        assert_eq!(level(&direct_sum(&o(&r, 0), &o(&r, -1)).unwrap()).value, 1);
        assert_eq!(
            serde_json::to_string(&level(&o(&r, -1))).unwrap(),
            r#"{"value":1,"witnesses":[{"q":1,"i":1,"h":1}]}"#
        );
    }

    #[test]
    fn phi_certificates() {
        let r = ring(3);
        assert_eq!(phi_certificate(&o(&r, 2)).unwrap().value, 0);
        assert_eq!(phi_certificate(&o(&r, 1)).unwrap().value, 1);
        let cert = phi_certificate(&twist(&omega(&r, 1).unwrap(), 2)).unwrap();
        assert_eq!(cert.value, 1);
        assert!(cert.witnesses.contains(&LevelWitness { q: 1, i: 1, h: 3 }));
        let r3 = Ring::prime(3, 3).unwrap();
        let line = Presentation::from_columns(r3.clone(), vec![0], vec![vec![r3.var(0)]]).unwrap();
        assert!(matches!(phi_certificate(&line), Err(Error::NotLocallyFree(_))));
    }

    #[test]
    fn beilinson_tables() {
        let r = ring(3);
        let t = beilinson_e1(&o(&r, 0));
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.e.iter().flatten().sum::<u64>(), 1);
        let t = beilinson_e1(&o(&r, -1));
        assert_eq!(t.get(-1, 1), 1);
        assert_eq!(t.e.iter().flatten().sum::<u64>(), 1);
        let t = beilinson_e1(&o(&r, 1));
        assert_eq!(t.get(0, 0), 3);
        assert_eq!(t.top_row(), Some(0));
        for e in [o(&r, 0), o(&r, -1), o(&r, 1), o(&r, -3)] {
            let t = beilinson_e1(&e);
            let sheaf = CoherentSheaf::new(e.clone());
            for d in -2..=2 {
                assert_eq!(t.euler_sum(d), euler_characteristic(&sheaf, d));
            }
            assert!(t.rows_vanish_above(level(&e).value));
        }
    }

    #[test]
    fn chi_of_line_bundles() {
        assert_eq!(chi_line_bundle(2, -3), 1);
        assert_eq!(chi_line_bundle(2, -1), 0);
        assert_eq!(chi_line_bundle(3, 1), 4);
        assert_eq!(chi_line_bundle(1, -5), -4);
    }

    #[test]
    fn probes() {
        let r = ring(3);
        let twists: Vec<i64> = (-3..=0).collect();
        let p = amplitude_probe(&o(&r, 1), ProbeKind::Symmetric, 1, 5, &twists).unwrap();
        assert_eq!((p.observed_bound, p.certified), (0, false));
        let p = amplitude_probe(&o(&r, -1), ProbeKind::Symmetric, 1, 5, &twists).unwrap();
        assert_eq!(p.observed_bound, 2);
        let p = amplitude_probe(&o(&r, 0), ProbeKind::QPower { q: 2 }, 1, 3, &[0]).unwrap();
        assert_eq!(p.observed_bound, 0);
        let p = amplitude_probe(&o(&r, 1), ProbeKind::Tensor, 1, 3, &twists).unwrap();
        assert_eq!(p.observed_bound, 0);
        assert!(amplitude_probe(&o(&r, 1), ProbeKind::Tensor, 1, 3, &[]).is_err());
        let json = serde_json::to_string(&amplitude_probe(&o(&r, 0), ProbeKind::QPower { q: 2 }, 1, 1, &[0]).unwrap()).unwrap();
        assert_eq!(json, r#"{"kind":"q-power","q":2,"window":[1,1],"probe_twists":[0],"observed_bound":0,"certified":false}"#);
    }
}
