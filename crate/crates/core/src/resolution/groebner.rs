//! Buchberger's algorithm for homogeneous submodules of graded free modules,
//! with grevlex on monomials extended position-over-term, and syzygies by
//! elimination.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, HashSet};

use crate::algebra::{Field, GradedFreeModule, GradedMap, Monomial, Polynomial};

/// A module monomial `mono · e_pos`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModTerm {
    pub pos: usize,
    pub mono: Monomial,
}

impl Ord for ModTerm {
    /// Position over term: a smaller position index is larger; ties broken by grevlex.
    fn cmp(&self, other: &Self) -> Ordering {
        other.pos.cmp(&self.pos).then_with(|| self.mono.cmp(&other.mono))
    }
}

impl PartialOrd for ModTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A module element with terms sorted by strictly decreasing [`ModTerm`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModVec<K: Field> {
    terms: Vec<(ModTerm, K::Elem)>,
}

impl<K: Field> ModVec<K> {
    pub fn from_column(column: &[Polynomial<K>]) -> Self {
        let mut terms = Vec::new();
        for (pos, f) in column.iter().enumerate() {
            terms.extend(f.terms().iter().map(|(m, c)| (ModTerm { pos, mono: *m }, c.clone())));
        }
        ModVec { terms }
    }

    pub fn to_column(&self, field: &K, rank: usize) -> Vec<Polynomial<K>> {
        let mut buckets: Vec<Vec<(Monomial, K::Elem)>> = vec![Vec::new(); rank];
        for (t, c) in &self.terms {
            buckets[t.pos].push((t.mono, c.clone()));
        }
        buckets.into_iter().map(|terms| Polynomial::from_terms(field, terms)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(ModTerm, K::Elem)> {
        self.terms.first()
    }

    pub fn terms(&self) -> &[(ModTerm, K::Elem)] {
        &self.terms
    }

    fn scale(&mut self, c: &K::Elem, field: &K) {
        for (_, a) in self.terms.iter_mut() {
            *a = field.mul(a, c);
        }
    }
}

/// Accumulator used during reduction: largest term first.
struct Accumulator<K: Field> {
    terms: BTreeMap<Reverse<ModTerm>, K::Elem>,
}

impl<K: Field> Accumulator<K> {
    fn new(v: ModVec<K>) -> Self {
        Accumulator { terms: v.terms.into_iter().map(|(t, c)| (Reverse(t), c)).collect() }
    }

    /// `self -= c · m · g`, where the leading term is known to cancel.
    fn sub_multiple(&mut self, g: &ModVec<K>, m: &Monomial, c: &K::Elem, field: &K) {
        for (t, a) in g.terms.iter().skip(1) {
            let key = Reverse(ModTerm { pos: t.pos, mono: t.mono.mul(m) });
            let delta = field.mul(a, c);
            match self.terms.get_mut(&key) {
                Some(v) => {
                    *v = field.sub(v, &delta);
                    if field.is_zero(v) {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, field.neg(&delta));
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Item {
    Input(usize),
    Pair(usize, usize),
}

/// Incremental Buchberger engine over a free module whose generator `pos` has
/// degree `pos_degrees[pos]`.
pub(crate) struct Buchberger<'a, K: Field> {
    field: &'a K,
    pos_degrees: &'a [i64],
    basis: Vec<ModVec<K>>,
    by_pos: Vec<Vec<usize>>,
    /// pairs whose lead positions are both at least this are never formed
    skip_pairs_from: usize,
}

impl<'a, K: Field> Buchberger<'a, K> {
    pub(crate) fn new(field: &'a K, pos_degrees: &'a [i64]) -> Self {
        Buchberger {
            field,
            pos_degrees,
            basis: Vec::new(),
            by_pos: vec![Vec::new(); pos_degrees.len()],
            skip_pairs_from: usize::MAX,
        }
    }

    fn degree_of(&self, t: &ModTerm) -> i64 {
        self.pos_degrees[t.pos] + t.mono.degree()
    }

    fn find_reducer(&self, t: &ModTerm) -> Option<usize> {
        self.by_pos[t.pos]
            .iter()
            .copied()
            .find(|&k| self.basis[k].terms[0].0.mono.divides(&t.mono))
    }

    /// Full reduction of `v` by the current basis.
    fn reduce(&self, v: ModVec<K>) -> ModVec<K> {
        let field = self.field;
        let mut acc = Accumulator::new(v);
        let mut out = Vec::new();
        while let Some((Reverse(t), c)) = acc.terms.pop_first() {
            match self.find_reducer(&t) {
                Some(k) => {
                    let g = &self.basis[k];
                    let m = g.terms[0].0.mono.quotient_of(&t.mono);
                    // basis elements are monic
                    acc.sub_multiple(g, &m, &c, field);
                }
                None => out.push((t, c)),
            }
        }
        ModVec { terms: out }
    }

    fn spoly(&self, i: usize, j: usize) -> ModVec<K> {
        let (ti, _) = self.basis[i].terms[0];
        let (tj, _) = self.basis[j].terms[0];
        let l = ti.mono.lcm(&tj.mono);
        let mi = ti.mono.quotient_of(&l);
        let mj = tj.mono.quotient_of(&l);
        let mut acc = Accumulator { terms: BTreeMap::new() };
        let one = self.field.one();
        for (t, c) in self.basis[i].terms.iter().skip(1) {
            acc.terms.insert(Reverse(ModTerm { pos: t.pos, mono: t.mono.mul(&mi) }), c.clone());
        }
        acc.sub_multiple(&self.basis[j], &mj, &one, self.field);
        ModVec { terms: acc.terms.into_iter().map(|(Reverse(t), c)| (t, c)).collect() }
    }

    fn chain_criterion(&self, i: usize, j: usize, pending: &HashSet<(usize, usize)>) -> bool {
        let ti = self.basis[i].terms[0].0;
        let l = ti.mono.lcm(&self.basis[j].terms[0].0.mono);
        self.by_pos[ti.pos].iter().any(|&k| {
            k != i
                && k != j
                && self.basis[k].terms[0].0.mono.divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        })
    }

    fn insert(&mut self, mut v: ModVec<K>) -> usize {
        let inv = self.field.inv(&v.terms[0].1);
        v.scale(&inv, self.field);
        let idx = self.basis.len();
        self.by_pos[v.terms[0].0.pos].push(idx);
        self.basis.push(v);
        idx
    }

    /// Run Buchberger on homogeneous `inputs`, processing everything in order of
    /// increasing degree.
    pub(crate) fn run(&mut self, inputs: Vec<ModVec<K>>) {
        let mut queue: BTreeMap<i64, Vec<Item>> = BTreeMap::new();
        for (k, v) in inputs.iter().enumerate() {
            if let Some((t, _)) = v.lead() {
                queue.entry(self.degree_of(t)).or_default().push(Item::Input(k));
            }
        }
        let mut inputs: Vec<Option<ModVec<K>>> = inputs.into_iter().map(Some).collect();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        while let Some((_, mut items)) = queue.pop_first() {
            items.sort();
            for item in items {
                let v = match item {
                    Item::Input(k) => inputs[k].take().unwrap(),
                    Item::Pair(i, j) => {
                        pending.remove(&(i, j));
                        if self.chain_criterion(i, j, &pending) {
                            continue;
                        }
                        self.spoly(i, j)
                    }
                };
                let r = self.reduce(v);
                if r.is_zero() {
                    continue;
                }
                let t = self.insert(r);
                let lt = self.basis[t].terms[0].0;
                if lt.pos >= self.skip_pairs_from {
                    continue;
                }
                for &s in &self.by_pos[lt.pos] {
                    if s == t {
                        continue;
                    }
                    let l = self.basis[s].terms[0].0.mono.lcm(&lt.mono);
                    let deg = self.pos_degrees[lt.pos] + l.degree();
                    queue.entry(deg).or_default().push(Item::Pair(s, t));
                    pending.insert((s, t));
                }
            }
        }
    }

    /// Tail-reduce every element against the others.
    pub(crate) fn interreduce(&mut self) {
        for k in 0..self.basis.len() {
            let v = &self.basis[k];
            let lead = v.terms[0].clone();
            // an element never reduces its own tail: tail terms share its degree
            let mut reduced = self.reduce(ModVec { terms: v.terms[1..].to_vec() });
            reduced.terms.insert(0, lead);
            self.basis[k] = reduced;
        }
    }

    pub(crate) fn into_basis(self) -> Vec<ModVec<K>> {
        self.basis
    }
}

/// Reduced Gröbner basis of the submodule generated by the columns of `map`,
/// returned as a map from a new free module onto the same target whose columns
/// are the basis elements.
pub fn groebner_basis<K: Field>(map: &GradedMap<K>) -> GradedMap<K> {
    let field = map.ring().field();
    let target = map.target();
    let inputs = map.columns().iter().map(|c| ModVec::from_column(c)).collect();
    let mut engine = Buchberger::new(field, target.degrees());
    engine.run(inputs);
    engine.interreduce();
    let basis = engine.into_basis();
    let degrees = basis
        .iter()
        .map(|v| {
            let t = v.terms[0].0;
            target.degrees()[t.pos] + t.mono.degree()
        })
        .collect();
    let columns = basis.iter().map(|v| v.to_column(field, target.rank())).collect();
    GradedMap::new_unchecked(GradedFreeModule::new(map.ring().clone(), degrees), target.clone(), columns)
}

/// A map `ψ` into `φ.source()` whose image is `ker φ`.
///
/// Computed as the part of a Gröbner basis of `{(φ(e_j), e_j)}` in
/// `target ⊕ source` that lies in `0 ⊕ source`; position-over-term with the
/// target block first makes this an elimination order.
pub fn syzygies<K: Field>(phi: &GradedMap<K>) -> GradedMap<K> {
    let field = phi.ring().field();
    let r = phi.target().rank();
    let m = phi.source().rank();
    let mut pos_degrees = phi.target().degrees().to_vec();
    pos_degrees.extend_from_slice(phi.source().degrees());
    let inputs: Vec<ModVec<K>> = phi
        .columns()
        .iter()
        .enumerate()
        .map(|(j, col)| {
            let mut v = ModVec::from_column(col);
            v.terms.push((ModTerm { pos: r + j, mono: Monomial::one() }, field.one()));
            v
        })
        .collect();
    let mut engine = Buchberger::new(field, &pos_degrees);
    // pairs of elements already in the kernel only matter for a Gröbner basis of
    // the kernel, not for generating it
    engine.skip_pairs_from = r;
    engine.run(inputs);
    let basis = engine.into_basis();
    let mut degrees = Vec::new();
    let mut columns = Vec::new();
    for v in basis.iter().filter(|v| v.terms[0].0.pos >= r) {
        let t = v.terms[0].0;
        degrees.push(pos_degrees[t.pos] + t.mono.degree());
        let shifted = ModVec::<K> {
            terms: v.terms.iter().map(|(t, c)| (ModTerm { pos: t.pos - r, mono: t.mono }, c.clone())).collect(),
        };
        columns.push(shifted.to_column(field, m));
    }
    GradedMap::new_unchecked(GradedFreeModule::new(phi.ring().clone(), degrees), phi.source().clone(), columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{strand_rank, Ring};

    fn ideal_map<K: Field>(r: &Ring<K>, gens: &[&str]) -> GradedMap<K> {
        let polys: Vec<_> = gens.iter().map(|s| r.parse_poly(s).unwrap()).collect();
        let degrees = polys.iter().map(|p| p.degree().unwrap()).collect();
        GradedMap::new(
            GradedFreeModule::new(r.clone(), degrees),
            GradedFreeModule::new(r.clone(), vec![0]),
            polys.into_iter().map(|p| vec![p]).collect(),
        )
        .unwrap()
    }

    fn gb_strings<K: Field>(r: &Ring<K>, gb: &GradedMap<K>) -> Vec<String> {
        gb.columns().iter().map(|c| r.render(&c[0])).collect()
    }

    #[test]
    fn linear_ideal_is_its_own_basis() {
        let r = Ring::rationals(2).unwrap();
        let gb = groebner_basis(&ideal_map(&r, &["x0", "x1"]));
        assert_eq!(gb_strings(&r, &gb), vec!["x0", "x1"]);
    }

    #[test]
    fn single_generator() {
        let r = Ring::rationals(2).unwrap();
        let gb = groebner_basis(&ideal_map(&r, &["x0"]));
        assert_eq!(gb_strings(&r, &gb), vec!["x0"]);
    }

    #[test]
    fn s_polynomial_cascade_produces_cubic() {
        // (x0^2, x0*x1 + x1^2): S-pair gives x0*x1^2, reducing to -x1^3
        let r = Ring::rationals(2).unwrap();
        let gb = groebner_basis(&ideal_map(&r, &["x0^2", "x0*x1 + x1^2"]));
        let s = gb_strings(&r, &gb);
        assert!(s.contains(&"x1^3".to_string()), "{s:?}");
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn koszul_syzygy_on_p1() {
        let r = Ring::rationals(2).unwrap();
        let phi = ideal_map(&r, &["x0", "x1"]);
        let psi = syzygies(&phi);
        assert_eq!(psi.source().degrees(), &[2]);
        let col = psi.column(0);
        let f = r.field();
        // proportional to (-x1, x0)
        let c = f.inv(&col[1].leading().unwrap().1);
        assert_eq!(col[0].scale(&c, f), r.var(1).neg(f));
        assert_eq!(col[1].scale(&c, f), r.var(0));
        assert!(phi.compose(&psi).unwrap().is_zero());
    }

    #[test]
    fn identity_has_no_syzygies() {
        let r = Ring::rationals(2).unwrap();
        let phi = GradedMap::identity(GradedFreeModule::new(r, vec![0]));
        assert_eq!(syzygies(&phi).source().rank(), 0);
    }

    #[test]
    fn three_koszul_syzygies_on_p2() {
        let r = Ring::rationals(3).unwrap();
        let phi = ideal_map(&r, &["x0", "x1", "x2"]);
        let psi = syzygies(&phi);
        assert_eq!(psi.source().degrees(), &[2, 2, 2]);
        assert!(phi.compose(&psi).unwrap().is_zero());
        // image of psi equals ker phi strand-wise
        for d in 0..6 {
            let ker = phi.source().hilbert_function(d) - strand_rank(&phi, d);
            assert_eq!(strand_rank(&psi, d), ker, "degree {d}");
        }
    }
}
