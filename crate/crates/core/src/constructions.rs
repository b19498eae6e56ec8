//! New presentations from old: twists, sums, tensor and symmetric powers,
//! q-power pullback, the Koszul sheaves `R_m = Ω^m(m)` and `Ω^p`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Field, GradedFreeModule, GradedMap, Matrix, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::resolution::{minimal_presentation, syzygies, Presentation};

fn same_ring<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<()> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch(format!(
            "modules over {} and {} variables, characteristics {} and {}",
            m.ring().num_vars(),
            n.ring().num_vars(),
            m.ring().characteristic(),
            n.ring().characteristic()
        )));
    }
    Ok(())
}

fn assemble<K: Field>(ring: &Ring<K>, gens: Vec<i64>, rel_degrees: Vec<i64>, columns: Vec<Vec<Polynomial<K>>>) -> Presentation<K> {
    let target = GradedFreeModule::new(ring.clone(), gens);
    let source = GradedFreeModule::new(ring.clone(), rel_degrees);
    Presentation::new(GradedMap::new_unchecked(source, target, columns))
}

/// `M(e)`: every generator and relation degree shifted by `-e`.
pub fn twist<K: Field>(m: &Presentation<K>, e: i64) -> Presentation<K> {
    let rels = m.rels();
    assemble(
        m.ring(),
        rels.target().shifted(-e).degrees().to_vec(),
        rels.source().shifted(-e).degrees().to_vec(),
        rels.columns().to_vec(),
    )
}

/// Block-diagonal presentation of `M ⊕ N`.
pub fn direct_sum<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<Presentation<K>> {
    same_ring(m, n)?;
    let (a, b) = (m.rels(), n.rels());
    let (rm, rn) = (m.num_gens(), n.num_gens());
    let mut columns = Vec::with_capacity(a.source().rank() + b.source().rank());
    for col in a.columns() {
        let mut c = col.clone();
        c.resize(rm + rn, Polynomial::zero());
        columns.push(c);
    }
    for col in b.columns() {
        let mut c = vec![Polynomial::zero(); rm];
        c.extend_from_slice(col);
        columns.push(c);
    }
    Ok(assemble(
        m.ring(),
        a.target().direct_sum(b.target()).degrees().to_vec(),
        a.source().direct_sum(b.source()).degrees().to_vec(),
        columns,
    ))
}

/// `M ⊗ N = coker(A ⊗ 1 | 1 ⊗ B)` on generators `e_i ⊗ f_k`, indexed `i * rank(N) + k`.
pub fn tensor<K: Field>(m: &Presentation<K>, n: &Presentation<K>) -> Result<Presentation<K>> {
    same_ring(m, n)?;
    let (a, b) = (m.rels(), n.rels());
    let (g, h) = (a.target().degrees(), b.target().degrees());
    let gens: Vec<i64> = g.iter().flat_map(|x| h.iter().map(move |y| x + y)).collect();
    let mut rel_degrees = Vec::new();
    let mut columns = Vec::new();
    for (j, col) in a.columns().iter().enumerate() {
        for (k, hk) in h.iter().enumerate() {
            let mut c = vec![Polynomial::zero(); gens.len()];
            for (i, f) in col.iter().enumerate() {
                c[i * h.len() + k] = f.clone();
            }
            rel_degrees.push(a.source().degrees()[j] + hk);
            columns.push(c);
        }
    }
    for (i, gi) in g.iter().enumerate() {
        for (j, col) in b.columns().iter().enumerate() {
            let mut c = vec![Polynomial::zero(); gens.len()];
            for (k, f) in col.iter().enumerate() {
                c[i * h.len() + k] = f.clone();
            }
            rel_degrees.push(gi + b.source().degrees()[j]);
            columns.push(c);
        }
    }
    Ok(assemble(m.ring(), gens, rel_degrees, columns))
}

/// Nondecreasing index tuples of length `r` over `0..g`, lexicographic.
fn multisets(g: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(g: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..g {
            cur.push(i);
            rec(g, r, i, cur, out);
            cur.pop();
        }
    }
    rec(g, r, 0, &mut cur, &mut out);
    out
}

/// `Sym^r M = coker(F ⊗ Sym^{r-1} G -> Sym^r G)` for `M = coker(F -> G)`.
///
/// Right exact, so this is the sheaf symmetric power only when `M~` is locally free.
pub fn sym_power<K: Field>(m: &Presentation<K>, r: usize) -> Presentation<K> {
    let ring = m.ring();
    let field = ring.field();
    let g = m.gens().degrees();
    let basis = multisets(g.len(), r);
    let index: HashMap<&[usize], usize> = basis.iter().enumerate().map(|(k, s)| (s.as_slice(), k)).collect();
    let gens: Vec<i64> = basis.iter().map(|s| s.iter().map(|&i| g[i]).sum()).collect();
    let mut rel_degrees = Vec::new();
    let mut columns = Vec::new();
    if r >= 1 {
        for (j, col) in m.rels().columns().iter().enumerate() {
            for mu in multisets(g.len(), r - 1) {
                let mut c = vec![Polynomial::zero(); basis.len()];
                for (i, f) in col.iter().enumerate() {
                    if f.is_zero() {
                        continue;
                    }
                    let mut s = mu.clone();
                    s.push(i);
                    s.sort_unstable();
                    let k = index[s.as_slice()];
                    c[k] = c[k].add(f, field);
                }
                if c.iter().any(|f| !f.is_zero()) {
                    rel_degrees.push(m.rels().source().degrees()[j] + mu.iter().map(|&i| g[i]).sum::<i64>());
                    columns.push(c);
                }
            }
        }
    }
    assemble(ring, gens, rel_degrees, columns)
}

/// Pullback along `[x_0 : ... : x_n] -> [x_0^q : ... : x_n^q]`: entries inflated,
/// degrees multiplied by `q`. Over `F_p` with `q = p^N` this is the Frobenius power.
pub fn q_power_pullback<K: Field>(m: &Presentation<K>, q: u32) -> Result<Presentation<K>> {
    if q == 0 {
        return Err(Error::InvalidArgument("q-power needs q >= 1".into()));
    }
    let rels = m.rels();
    let scale = |f: &GradedFreeModule<K>| f.degrees().iter().map(|a| a * q as i64).collect::<Vec<_>>();
    let columns = rels.columns().iter().map(|c| c.iter().map(|f| f.inflate(q)).collect()).collect();
    Ok(assemble(m.ring(), scale(rels.target()), scale(rels.source()), columns))
}

/// `m`-element subsets of `0..v`, lexicographic.
fn subsets(v: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(v: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..v {
            cur.push(i);
            rec(v, m, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(v, m, 0, &mut Vec::new(), &mut out);
    out
}

/// The Koszul differential `Λ^m V ⊗ S(-t) -> Λ^{m-1} V ⊗ S(-t+1)` with
/// `e_I -> Σ_k (-1)^k x_{i_k} e_{I \ i_k}`; source generators sit in degree `t`.
pub fn koszul_differential<K: Field>(ring: &Ring<K>, m: usize, t: i64) -> GradedMap<K> {
    let v = ring.num_vars();
    let field = ring.field();
    let src = if m <= v { subsets(v, m) } else { Vec::new() };
    let tgt = if m >= 1 && m - 1 <= v { subsets(v, m - 1) } else { Vec::new() };
    let index: HashMap<&[usize], usize> = tgt.iter().enumerate().map(|(k, s)| (s.as_slice(), k)).collect();
    let columns = src
        .iter()
        .map(|set| {
            let mut c = vec![Polynomial::zero(); tgt.len()];
            for (k, &i) in set.iter().enumerate() {
                let mut rest = set.clone();
                rest.remove(k);
                let x = ring.var(i);
                c[index[rest.as_slice()]] = if k % 2 == 0 { x } else { x.neg(field) };
            }
            c
        })
        .collect();
    GradedMap::new_unchecked(
        GradedFreeModule::new(ring.clone(), vec![t; src.len()]),
        GradedFreeModule::new(ring.clone(), vec![t - 1; tgt.len()]),
        columns,
    )
}

/// `R_m = ker(Λ^m V ⊗ O -> Λ^{m-1} V ⊗ O(1))`, which is `Ω^m(m)` on `P^n`.
///
/// The kernel module is presented by the syzygies of the Koszul differential
/// (generators) and their syzygies (relations), then minimized.
pub fn koszul_r<K: Field>(ring: &Ring<K>, m: i64) -> Result<Presentation<K>> {
    let n = ring.dim() as i64;
    if !(0..=n).contains(&m) {
        return Err(Error::IndexOutOfRange { index: m, max: n });
    }
    if m == 0 {
        return Ok(Presentation::free(ring.clone(), vec![0]));
    }
    let delta = koszul_differential(ring, m as usize, 0);
    let gens = syzygies(&delta);
    let rels = syzygies(&gens);
    Ok(minimal_presentation(&Presentation::new(rels)))
}

/// `Ω^p = R_p(-p)`.
pub fn omega<K: Field>(ring: &Ring<K>, p: i64) -> Result<Presentation<K>> {
    Ok(twist(&koszul_r(ring, p)?, -p))
}

fn random_elem<K: Field>(field: &K, rng: &mut ChaCha8Rng) -> K::Elem {
    match field.characteristic() {
        0 => field.from_i64(rng.gen_range(-50..=50)),
        p => field.from_i64(rng.gen_range(0..p as i64)),
    }
}

/// Probabilistic local-freeness gate: the relation matrix evaluated at `points`
/// random nonzero points must have the same rank everywhere.
///
/// Not a certificate. Over a small prime field the sample may miss the
/// degeneracy locus.
pub fn is_locally_free<K: Field>(m: &Presentation<K>, points: usize, seed: u64) -> bool {
    let ring = m.ring();
    let field = ring.field();
    let rels = m.rels();
    if rels.is_zero() {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = None;
    for _ in 0..points {
        let point = loop {
            let p: Vec<K::Elem> = (0..ring.num_vars()).map(|_| random_elem(field, &mut rng)).collect();
            if p.iter().any(|x| !field.is_zero(x)) {
                break p;
            }
        };
        let rows = (0..rels.target().rank())
            .map(|i| rels.columns().iter().map(|c| c[i].eval(&point, field)).collect())
            .collect();
        let rank = Matrix::from_rows(field, rows).rank(field);
        match seen {
            None => seen = Some(rank),
            Some(r) if r != rank => return false,
            _ => {}
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    use crate::algebra::{binomial, strand_rank, PrimeField};
    use crate::cohomology::{cohomology_table, CoherentSheaf};

    fn ring(nv: usize) -> Ring<PrimeField> {
        Ring::prime(32003, nv).unwrap()
    }

    #[test]
    fn twist_round_trip() {
        let r = ring(3);
        let m = Presentation::from_columns(r.clone(), vec![0], vec![vec![r.var(0)]]).unwrap();
        assert_eq!(twist(&twist(&m, 4), -4), m);
        assert_eq!(twist(&Presentation::free(r.clone(), vec![0]), 3), Presentation::line_bundles(r.clone(), &[3]));
        let t = CoherentSheaf::new(twist(&Presentation::free(r, vec![0]), -3));
        assert_eq!(t.h(2, 0).unwrap(), 1);
    }

    #[test]
    fn sums() {
        let r = ring(2);
        let s = direct_sum(&Presentation::line_bundles(r.clone(), &[0]), &Presentation::line_bundles(r.clone(), &[-1])).unwrap();
        assert_eq!(CoherentSheaf::new(s).h(0, 0).unwrap(), 1);
        let m = Presentation::from_columns(r.clone(), vec![0], vec![vec![r.var(1)]]).unwrap();
        assert_eq!(direct_sum(&m, &Presentation::zero(r.clone())).unwrap(), m);
        assert!(direct_sum(&m, &Presentation::zero(ring(3))).is_err());
    }

    #[test]
    fn tensor_of_line_bundles() {
        let r = ring(3);
        let o = |d| Presentation::line_bundles(r.clone(), &[d]);
        let t = tensor(&o(1), &o(2)).unwrap();
        assert_eq!(cohomology_table(&t, -6, 2), cohomology_table(&o(3), -6, 2));
        let m = koszul_r(&r, 1).unwrap();
        assert_eq!(cohomology_table(&tensor(&m, &o(0)).unwrap(), -4, 2), cohomology_table(&m, -4, 2));
    }

    #[test]
    fn symmetric_powers() {
        let r = ring(3);
        let s = sym_power(&Presentation::line_bundles(r.clone(), &[1, 2]), 2);
        assert_eq!(s.gens().degrees(), &[-2, -3, -4]);
        let m = Presentation::from_columns(r.clone(), vec![0, 0], vec![vec![r.var(0), r.var(1)]]).unwrap();
        assert_eq!(sym_power(&m, 1), m);
    }

    #[test]
    fn q_power_of_line_bundle() {
        let r = ring(3);
        let q = q_power_pullback(&Presentation::line_bundles(r.clone(), &[2]), 3).unwrap();
        assert_eq!(q, Presentation::line_bundles(r.clone(), &[6]));
        let m = koszul_r(&r, 1).unwrap();
        assert_eq!(q_power_pullback(&m, 1).unwrap(), m);
    }

    #[test]
    fn koszul_sheaves() {
        for nv in 2..=4 {
            let r = ring(nv);
            let n = nv as i64 - 1;
            assert_eq!(koszul_r(&r, 0).unwrap(), Presentation::free(r.clone(), vec![0]));
            assert!(koszul_r(&r, n + 1).is_err());
            let top = koszul_r(&r, n).unwrap();
            assert_eq!(
                cohomology_table(&top, -n - 3, 3),
                cohomology_table(&Presentation::line_bundles(r.clone(), &[-1]), -n - 3, 3)
            );
        }
        let r1 = koszul_r(&ring(3), 1).unwrap();
        assert_eq!(CoherentSheaf::new(r1).h(1, -1).unwrap(), 1);
    }

    #[test]
    fn omega_values() {
        let r = ring(3);
        let o1 = CoherentSheaf::new(omega(&r, 1).unwrap());
        assert_eq!(o1.h(1, 0).unwrap(), 1);
        assert_eq!(o1.h(0, 2).unwrap(), 3);
        assert_eq!(omega(&r, 0).unwrap(), Presentation::free(r.clone(), vec![0]));
    }

    #[test]
    fn koszul_complex_is_exact() {
        let r = ring(3);
        for d in -3..=5 {
            // ranks along 0 -> Λ^3 -> Λ^2 -> Λ^1 -> Λ^0 -> 0 in the strand of degree d
            let ranks: Vec<usize> = (1..=3).map(|m| strand_rank(&koszul_differential(&r, m, m as i64), d)).collect();
            let dims: Vec<usize> = (0..=3)
                .map(|m| koszul_differential(&r, m, m as i64).source().hilbert_function(d))
                .collect();
            // exact at Λ^1, Λ^2, Λ^3 (Λ^0 has cokernel k in degree 0)
            assert_eq!(ranks[0] + ranks[1], dims[1]);
            assert_eq!(ranks[1] + ranks[2], dims[2]);
            assert_eq!(ranks[2], dims[3]);
        }
    }

    #[test]
    fn koszul_rank() {
        for nv in 2..=4 {
            let r = ring(nv);
            let n = nv - 1;
            for m in 0..=n {
                let sheaf = CoherentSheaf::new(koszul_r(&r, m as i64).unwrap());
                let n_factorial: i64 = (1..=n as i64).product();
                let rank = sheaf.hilbert_polynomial().leading_coefficient() * BigRational::from_integer(n_factorial.into());
                assert_eq!(rank, BigRational::from_integer((binomial(n as i64, m as i64) as i64).into()));
            }
        }
    }

    #[test]
    fn local_freeness_gate() {
        let r = ring(3);
        assert!(is_locally_free(&koszul_r(&r, 1).unwrap(), 20, 7));
        // torsion on the line x0 = 0, which random points over F_3 hit often
        let r3 = Ring::prime(3, 3).unwrap();
        let line = Presentation::from_columns(r3.clone(), vec![0], vec![vec![r3.var(0)]]).unwrap();
        assert!(!is_locally_free(&line, 20, 7));
    }
}
