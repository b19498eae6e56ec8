use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Field, Ring};
use crate::constructions::{direct_sum, koszul_r, omega, q_power_pullback, twist};
use crate::resolution::Presentation;

/// A labelled corpus module.
#[derive(Clone, Debug)]
pub struct CorpusEntry<K: Field> {
    pub label: String,
    pub module: Presentation<K>,
    /// `q` when the entry is a q-power pullback of a base entry, 1 otherwise.
    pub q: u32,
}

/// The generator behind every corpus and suite: ChaCha8 seeded through
/// `seed_from_u64`, so draws reproduce across platforms.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn line_bundle_label(twists: &[i64]) -> String {
    twists.iter().map(|t| format!("O({t})")).collect::<Vec<_>>().join("+")
}

/// Base entries of the locally free corpus on `P^n`, in a fixed order:
/// `O(a)` for `|a| <= 3`, four seeded sums of two or three such line bundles,
/// `Ω^p(k)` for `1 <= p <= n`, `|k| <= 3`, and `R_m` for `1 <= m <= n`.
pub fn base_corpus<K: Field>(ring: &Ring<K>, seed: u64) -> Vec<CorpusEntry<K>> {
    let n = ring.dim() as i64;
    let mut out = Vec::new();
    let entry = |label: String, module| CorpusEntry { label, module, q: 1 };
    for a in -3..=3 {
        out.push(entry(line_bundle_label(&[a]), Presentation::line_bundles(ring.clone(), &[a])));
    }
    let mut g = rng(seed);
    for _ in 0..4 {
        let len = g.gen_range(2..=3);
        let twists: Vec<i64> = (0..len).map(|_| g.gen_range(-3..=3)).collect();
        out.push(entry(line_bundle_label(&twists), Presentation::line_bundles(ring.clone(), &twists)));
    }
    for p in 1..=n {
        let om = omega(ring, p).expect("p in range");
        for k in -3..=3 {
            out.push(entry(format!("Omega^{p}({k})"), twist(&om, k)));
        }
    }
    for m in 1..=n {
        out.push(entry(format!("R_{m}"), koszul_r(ring, m).expect("m in range")));
    }
    out
}

/// The base corpus followed by its q-power pullbacks for `q` in `qs`.
pub fn with_q_powers<K: Field>(base: &[CorpusEntry<K>], qs: &[u32]) -> Vec<CorpusEntry<K>> {
    let mut out = base.to_vec();
    for &q in qs {
        for e in base {
            let module = q_power_pullback(&e.module, q).expect("q >= 1");
            out.push(CorpusEntry { label: format!("({})^({q})", e.label), module, q });
        }
    }
    out
}

/// Locally free corpus: base entries and their pullbacks along the 2- and
/// 3-power maps.
pub fn locally_free_corpus<K: Field>(ring: &Ring<K>, seed: u64) -> Vec<CorpusEntry<K>> {
    with_q_powers(&base_corpus(ring, seed), &[2, 3])
}

/// Seeded sample of `count` entries without replacement (all of them if fewer).
pub fn sample<K: Field>(corpus: &[CorpusEntry<K>], count: usize, seed: u64) -> Vec<CorpusEntry<K>> {
    let mut idx: Vec<usize> = (0..corpus.len()).collect();
    idx.shuffle(&mut rng(seed));
    idx.truncate(count);
    idx.sort_unstable();
    idx.into_iter().map(|i| corpus[i].clone()).collect()
}

/// `count` seeded pairs drawn with replacement.
pub fn pairs<K: Field>(corpus: &[CorpusEntry<K>], count: usize, seed: u64) -> Vec<(CorpusEntry<K>, CorpusEntry<K>)> {
    let mut g = rng(seed);
    (0..count)
        .map(|_| {
            let a = g.gen_range(0..corpus.len());
            let b = g.gen_range(0..corpus.len());
            (corpus[a].clone(), corpus[b].clone())
        })
        .collect()
}

/// `count` seeded sums of one to three line bundles with twists in `[-bound, bound]`.
pub fn random_line_bundle_sums(count: usize, bound: i64, seed: u64) -> Vec<Vec<i64>> {
    let mut g = rng(seed);
    (0..count)
        .map(|_| {
            let len = g.gen_range(1..=3);
            (0..len).map(|_| g.gen_range(-bound..=bound)).collect()
        })
        .collect()
}

/// Direct sum of a list of corpus modules (the zero module for an empty list).
pub fn sum_all<K: Field>(ring: &Ring<K>, parts: &[Presentation<K>]) -> Presentation<K> {
    parts
        .iter()
        .fold(Presentation::zero(ring.clone()), |acc, m| direct_sum(&acc, m).expect("same ring"))
}
