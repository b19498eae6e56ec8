use crate::algebra::{strand_rank, Field, GradedFreeModule, GradedMap, Polynomial};

use super::betti::BettiTable;
use super::groebner::syzygies;
use super::presentation::Presentation;

/// A graded free resolution `F_L -> ... -> F_1 -> F_0`.
///
/// `maps()[i]` is the differential `F_{i+1} -> F_i`. The zero module has an empty
/// resolution (no modules at all).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution<K: Field> {
    modules: Vec<GradedFreeModule<K>>,
    maps: Vec<GradedMap<K>>,
    minimal: bool,
}

impl<K: Field> FreeResolution<K> {
    pub fn modules(&self) -> &[GradedFreeModule<K>] {
        &self.modules
    }

    pub fn maps(&self) -> &[GradedMap<K>] {
        &self.maps
    }

    /// Index of the last nonzero module, i.e. the projective dimension. `None` for the zero module.
    pub fn length(&self) -> Option<usize> {
        self.modules.len().checked_sub(1)
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn is_zero(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn betti_table(&self) -> BettiTable {
        BettiTable::from_modules(&self.modules)
    }

    /// `dim M_d` as the alternating sum of strand dimensions.
    pub fn hilbert_function(&self, d: i64) -> i64 {
        self.modules
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let v = f.hilbert_function(d) as i64;
                if i % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }

    /// Eliminate every unit entry, lowest homological index first. A no-op on a
    /// minimal resolution.
    pub fn minimize(&mut self) {
        let mut k = 0;
        while k < self.maps.len() {
            if let Some((r, c)) = self.maps[k].find_unit() {
                eliminate_unit(&mut self.maps, k, r, c);
                continue;
            }
            k += 1;
        }
        self.rebuild_modules();
        self.minimal = true;
    }

    fn rebuild_modules(&mut self) {
        let mut modules: Vec<GradedFreeModule<K>> = Vec::new();
        match self.maps.first() {
            Some(first) => modules.push(first.target().clone()),
            // a free module: F_0 is only recorded in `modules`
            None => modules.extend(self.modules.first().cloned()),
        }
        for m in &self.maps {
            modules.push(m.source().clone());
        }
        while modules.last().is_some_and(|m| m.is_zero()) {
            modules.pop();
        }
        self.maps.truncate(modules.len().saturating_sub(1));
        self.modules = modules;
    }

    /// Strand-wise check over `[d_min, d_max]`: consecutive maps compose to zero,
    /// the complex is exact at every `F_i` with `i > 0`, and `H_0` has the same
    /// dimension as the cokernel of `pres`.
    pub fn resolves(&self, pres: &Presentation<K>, d_min: i64, d_max: i64) -> bool {
        for w in self.maps.windows(2) {
            match w[0].compose(&w[1]) {
                Ok(c) if c.is_zero() => {}
                _ => return false,
            }
        }
        for d in d_min..=d_max {
            let expected = pres.gens().hilbert_function(d) as i64 - strand_rank(pres.rels(), d) as i64;
            if self.hilbert_function(d) != expected {
                return false;
            }
            let ranks: Vec<usize> = self.maps.iter().map(|m| strand_rank(m, d)).collect();
            // H_0 = F_0 / im d_1
            let h0 = self.modules.first().map_or(0, |f| f.hilbert_function(d)) as i64
                - ranks.first().copied().unwrap_or(0) as i64;
            if h0 != expected {
                return false;
            }
            for i in 1..self.modules.len() {
                let dim = self.modules[i].hilbert_function(d);
                let out = ranks[i - 1];
                let inc = ranks.get(i).copied().unwrap_or(0);
                if out + inc != dim {
                    return false;
                }
            }
        }
        true
    }
}

/// Remove the trivial summand `S(-a) --u--> S(-a)` sitting at entry `(r, c)` of
/// `maps[k]`, where `u` is a nonzero constant.
///
/// With `d = maps[k]` the new map is `d'[r'][c'] = d[r'][c'] - d[r'][c] d[r][c'] / u`
/// on the remaining rows and columns; `maps[k-1]` loses column `r` and
/// `maps[k+1]` loses row `c`.
fn eliminate_unit<K: Field>(maps: &mut [GradedMap<K>], k: usize, r: usize, c: usize) {
    let field = maps[k].ring().field().clone();
    let ring = maps[k].ring().clone();
    let d = &maps[k];
    let u_inv = field.inv(d.entry(r, c).constant_coeff().expect("unit entry"));
    let rows: Vec<usize> = (0..d.target().rank()).filter(|&i| i != r).collect();
    let cols: Vec<usize> = (0..d.source().rank()).filter(|&j| j != c).collect();
    let pivot_col = d.column(c);
    let columns: Vec<Vec<Polynomial<K>>> = cols
        .iter()
        .map(|&j| {
            let top = d.entry(r, j);
            let factor = top.scale(&u_inv, &field);
            rows.iter()
                .map(|&i| {
                    let e = d.entry(i, j);
                    if factor.is_zero() || pivot_col[i].is_zero() {
                        e.clone()
                    } else {
                        e.sub(&pivot_col[i].mul(&factor, &field), &field)
                    }
                })
                .collect()
        })
        .collect();
    let source = GradedFreeModule::new(ring.clone(), cols.iter().map(|&j| d.source().degrees()[j]).collect());
    let target = GradedFreeModule::new(ring.clone(), rows.iter().map(|&i| d.target().degrees()[i]).collect());
    maps[k] = GradedMap::new_unchecked(source, target.clone(), columns);

    if k > 0 {
        let prev = &maps[k - 1];
        let columns = rows.iter().map(|&i| prev.column(i).to_vec()).collect();
        maps[k - 1] = GradedMap::new_unchecked(target, prev.target().clone(), columns);
    }
    if k + 1 < maps.len() {
        let next = &maps[k + 1];
        let new_target = maps[k].source().clone();
        let columns = next
            .columns()
            .iter()
            .map(|col| cols.iter().map(|&j| col[j].clone()).collect())
            .collect();
        maps[k + 1] = GradedMap::new_unchecked(next.source().clone(), new_target, columns);
    }
}

/// Eliminate units in `maps[k]` (which is the last map) and drop its zero columns.
fn prune_last<K: Field>(maps: &mut [GradedMap<K>]) {
    let k = maps.len() - 1;
    while let Some((r, c)) = maps[k].find_unit() {
        eliminate_unit(maps, k, r, c);
    }
    let d = &maps[k];
    let keep: Vec<usize> = (0..d.source().rank()).filter(|&j| d.column(j).iter().any(|f| !f.is_zero())).collect();
    if keep.len() < d.source().rank() {
        let source = GradedFreeModule::new(d.ring().clone(), keep.iter().map(|&j| d.source().degrees()[j]).collect());
        let columns = keep.iter().map(|&j| d.column(j).to_vec()).collect();
        maps[k] = GradedMap::new_unchecked(source, d.target().clone(), columns);
    }
}

fn build<K: Field>(pres: &Presentation<K>, max_maps: usize) -> FreeResolution<K> {
    let num_vars = pres.ring().num_vars();
    let mut maps = vec![pres.rels().clone()];
    prune_last(&mut maps);
    while maps.len() < max_maps {
        let last = maps.last().unwrap();
        if last.source().is_zero() {
            break;
        }
        let next = syzygies(last);
        maps.push(next);
        prune_last(&mut maps);
        assert!(
            maps.len() <= num_vars + 1,
            "resolution longer than the number of variables"
        );
    }
    let mut res = FreeResolution { modules: Vec::new(), maps, minimal: true };
    res.rebuild_modules();
    res
}

/// The minimal graded free resolution of `coker(pres.rels)`.
///
/// Built by repeated syzygies; after each step every unit entry of the new map is
/// eliminated, which both minimizes the new generators and prunes redundant
/// generators from the previous map.
pub fn minimal_free_resolution<K: Field>(pres: &Presentation<K>) -> FreeResolution<K> {
    let res = build(pres, usize::MAX);
    assert!(res.maps.len() <= pres.ring().num_vars(), "Hilbert syzygy bound violated");
    res
}

/// A minimal presentation of the same module: minimal generators and minimal relations.
pub fn minimal_presentation<K: Field>(pres: &Presentation<K>) -> Presentation<K> {
    let res = build(pres, 2);
    match res.maps.first() {
        Some(m) => Presentation::new(m.clone()),
        None => match res.modules.first() {
            Some(f) => Presentation::free(pres.ring().clone(), f.degrees().to_vec()),
            None => Presentation::zero(pres.ring().clone()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    fn quotient<K: Field>(r: &Ring<K>, gens: &[&str]) -> Presentation<K> {
        let cols = gens.iter().map(|s| vec![r.parse_poly(s).unwrap()]).collect();
        Presentation::from_columns(r.clone(), vec![0], cols).unwrap()
    }

    #[test]
    fn koszul_on_p1() {
        let r = Ring::rationals(2).unwrap();
        let m = quotient(&r, &["x0", "x1"]);
        let res = minimal_free_resolution(&m);
        let b = res.betti_table();
        assert_eq!(b.get(0, 0), 1);
        assert_eq!(b.get(1, 1), 2);
        assert_eq!(b.get(2, 2), 1);
        assert_eq!(b.total(), 4);
        assert!(res.resolves(&m, -2, 5));
    }

    #[test]
    fn free_module_resolves_itself() {
        let r = Ring::rationals(3).unwrap();
        let m = Presentation::free(r, vec![2]);
        let res = minimal_free_resolution(&m);
        assert_eq!(res.length(), Some(0));
        assert_eq!(res.betti_table().get(0, 2), 1);
    }

    #[test]
    fn two_coordinates_on_p2() {
        let r = Ring::prime(32003, 3).unwrap();
        let m = quotient(&r, &["x0", "x1"]);
        let res = minimal_free_resolution(&m);
        let b = res.betti_table();
        assert_eq!((b.get(0, 0), b.get(1, 1), b.get(2, 2), b.total()), (1, 2, 1, 4));
        assert!(res.resolves(&m, -2, 6));
    }

    #[test]
    fn redundant_presentation_is_minimized() {
        // generators e0 (deg 0), e1 (deg 1) with relation e1 = x0 e0, plus x1 e0
        let r = Ring::rationals(2).unwrap();
        let f = r.field();
        let cols = vec![
            vec![r.var(0).neg(f), r.constant(1)],
            vec![r.var(1), Polynomial::zero()],
            vec![r.var(1), Polynomial::zero()],
        ];
        let m = Presentation::from_columns(r.clone(), vec![0, 1], cols).unwrap();
        let res = minimal_free_resolution(&m);
        let b = res.betti_table();
        assert_eq!((b.get(0, 0), b.get(1, 1), b.total()), (1, 1, 2));
        assert!(res.resolves(&m, -2, 5));
    }

    #[test]
    fn zero_module_has_empty_resolution() {
        let r = Ring::rationals(2).unwrap();
        let m = Presentation::from_columns(r.clone(), vec![0], vec![vec![r.constant(1)]]).unwrap();
        let res = minimal_free_resolution(&m);
        assert!(res.is_zero());
        assert_eq!(res.betti_table().total(), 0);
    }

    #[test]
    fn reminimizing_is_identity() {
        let r = Ring::prime(101, 3).unwrap();
        let m = quotient(&r, &["x0^2", "x0*x1", "x1^2", "x2^3"]);
        let res = minimal_free_resolution(&m);
        let mut again = res.clone();
        again.minimize();
        assert_eq!(again, res);
        assert!(res.resolves(&m, -2, 8));
    }
}
