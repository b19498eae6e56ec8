use super::field::Field;
use super::monomial::monomial_count;
use super::poly::{Polynomial, Ring};
use crate::error::{Error, Result};

/// `⊕_j S(-a_j)`: generator `j` lives in degree `a_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule<K: Field> {
    ring: Ring<K>,
    degrees: Vec<i64>,
}

impl<K: Field> GradedFreeModule<K> {
    pub fn new(ring: Ring<K>, degrees: Vec<i64>) -> Self {
        GradedFreeModule { ring, degrees }
    }

    pub fn zero(ring: Ring<K>) -> Self {
        GradedFreeModule { ring, degrees: Vec::new() }
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `dim F_d = Σ_j C(n + d - a_j, n)`.
    pub fn hilbert_function(&self, d: i64) -> usize {
        self.degrees.iter().map(|a| monomial_count(self.ring.num_vars(), d - a)).sum()
    }

    /// The dual `Hom(F, S)`, i.e. the free module with negated degrees.
    pub fn dual(&self) -> Self {
        GradedFreeModule { ring: self.ring.clone(), degrees: self.degrees.iter().map(|a| -a).collect() }
    }

    pub fn shifted(&self, by: i64) -> Self {
        GradedFreeModule { ring: self.ring.clone(), degrees: self.degrees.iter().map(|a| a + by).collect() }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        GradedFreeModule { ring: self.ring.clone(), degrees }
    }
}

/// A degree-0 homomorphism of graded free modules, stored column by column:
/// `column(j)[i]` is the matrix entry in row `i`, column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap<K: Field> {
    source: GradedFreeModule<K>,
    target: GradedFreeModule<K>,
    columns: Vec<Vec<Polynomial<K>>>,
}

impl<K: Field> GradedMap<K> {
    /// Checks shapes and that entry `(i, j)` is zero or homogeneous of degree
    /// `source.degrees[j] - target.degrees[i]`.
    pub fn new(
        source: GradedFreeModule<K>,
        target: GradedFreeModule<K>,
        columns: Vec<Vec<Polynomial<K>>>,
    ) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch("source and target rings differ".into()));
        }
        if columns.len() != source.rank() {
            return Err(Error::Shape(format!(
                "{} columns for a source of rank {}",
                columns.len(),
                source.rank()
            )));
        }
        for (j, col) in columns.iter().enumerate() {
            if col.len() != target.rank() {
                return Err(Error::Shape(format!(
                    "column {j} has {} entries, target rank is {}",
                    col.len(),
                    target.rank()
                )));
            }
            for (i, f) in col.iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                let want = source.degrees[j] - target.degrees[i];
                if !f.is_homogeneous() || f.degree() != Some(want) {
                    return Err(Error::Inhomogeneous { column: j });
                }
            }
        }
        Ok(GradedMap { source, target, columns })
    }

    pub(crate) fn new_unchecked(
        source: GradedFreeModule<K>,
        target: GradedFreeModule<K>,
        columns: Vec<Vec<Polynomial<K>>>,
    ) -> Self {
        debug_assert_eq!(columns.len(), source.rank());
        debug_assert!(columns.iter().all(|c| c.len() == target.rank()));
        GradedMap { source, target, columns }
    }

    pub fn zero(source: GradedFreeModule<K>, target: GradedFreeModule<K>) -> Self {
        let columns = vec![vec![Polynomial::zero(); target.rank()]; source.rank()];
        GradedMap { source, target, columns }
    }

    pub fn identity(module: GradedFreeModule<K>) -> Self {
        let field = module.ring().field().clone();
        let columns = (0..module.rank())
            .map(|j| {
                (0..module.rank())
                    .map(|i| if i == j { Polynomial::constant(&field, field.one()) } else { Polynomial::zero() })
                    .collect()
            })
            .collect();
        GradedMap { source: module.clone(), target: module, columns }
    }

    pub fn ring(&self) -> &Ring<K> {
        self.source.ring()
    }

    pub fn source(&self) -> &GradedFreeModule<K> {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule<K> {
        &self.target
    }

    pub fn columns(&self) -> &[Vec<Polynomial<K>>] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &[Polynomial<K>] {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<K> {
        &self.columns[j][i]
    }

    pub fn into_parts(self) -> (GradedFreeModule<K>, GradedFreeModule<K>, Vec<Vec<Polynomial<K>>>) {
        (self.source, self.target, self.columns)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(Polynomial::is_zero))
    }

    /// `self ∘ other`, where `other.target == self.source`.
    pub fn compose(&self, other: &GradedMap<K>) -> Result<GradedMap<K>> {
        if other.target != self.source {
            return Err(Error::Shape("composition of incompatible maps".into()));
        }
        let field = self.ring().field();
        let columns = other
            .columns
            .iter()
            .map(|col| {
                (0..self.target.rank())
                    .map(|i| {
                        let mut acc = Polynomial::zero();
                        for (k, g) in col.iter().enumerate() {
                            if !g.is_zero() && !self.columns[k][i].is_zero() {
                                acc = acc.add(&self.columns[k][i].mul(g, field), field);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(GradedMap { source: other.source.clone(), target: self.target.clone(), columns })
    }

    /// `Hom(-, S)` applied to this map: the transpose between the dual modules.
    pub fn dual(&self) -> GradedMap<K> {
        let columns = (0..self.target.rank())
            .map(|i| (0..self.source.rank()).map(|j| self.columns[j][i].clone()).collect())
            .collect();
        GradedMap { source: self.target.dual(), target: self.source.dual(), columns }
    }

    /// Reorder generators: `source_perm[k]` is the old index of new source generator `k`,
    /// likewise for the target.
    pub fn permuted(&self, source_perm: &[usize], target_perm: &[usize]) -> GradedMap<K> {
        let source = GradedFreeModule::new(
            self.ring().clone(),
            source_perm.iter().map(|&k| self.source.degrees[k]).collect(),
        );
        let target = GradedFreeModule::new(
            self.ring().clone(),
            target_perm.iter().map(|&k| self.target.degrees[k]).collect(),
        );
        let columns = source_perm
            .iter()
            .map(|&j| target_perm.iter().map(|&i| self.columns[j][i].clone()).collect())
            .collect();
        GradedMap { source, target, columns }
    }

    /// Position of the first nonzero constant entry, scanning columns then rows.
    pub fn find_unit(&self) -> Option<(usize, usize)> {
        for (j, col) in self.columns.iter().enumerate() {
            for (i, f) in col.iter().enumerate() {
                if self.source.degrees[j] == self.target.degrees[i] && f.constant_coeff().is_some() {
                    return Some((i, j));
                }
            }
        }
        None
    }
}
