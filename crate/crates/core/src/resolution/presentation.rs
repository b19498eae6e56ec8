use crate::algebra::{Field, GradedFreeModule, GradedMap, Polynomial, Ring};
use crate::error::{Error, Result};

/// A finitely generated graded module given as `coker(rels: F_1 -> gens)`.
///
/// Any graded module with the right sheafification represents the sheaf; the
/// module itself is what the resolution machinery works with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation<K: Field> {
    rels: GradedMap<K>,
}

impl<K: Field> Presentation<K> {
    pub fn new(rels: GradedMap<K>) -> Self {
        Presentation { rels }
    }

    /// Build from generator degrees and relation columns (one polynomial per
    /// generator); each column's degree is inferred from its nonzero entries.
    /// Zero columns are dropped.
    pub fn from_columns(ring: Ring<K>, gen_degrees: Vec<i64>, columns: Vec<Vec<Polynomial<K>>>) -> Result<Self> {
        let gens = GradedFreeModule::new(ring.clone(), gen_degrees);
        let mut degrees = Vec::new();
        let mut kept = Vec::new();
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != gens.rank() {
                return Err(Error::Shape(format!(
                    "relation column {j} has {} entries for {} generators",
                    col.len(),
                    gens.rank()
                )));
            }
            let mut deg = None;
            for (i, f) in col.iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                if !f.is_homogeneous() {
                    return Err(Error::Inhomogeneous { column: j });
                }
                let d = f.degree().unwrap() + gens.degrees()[i];
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return Err(Error::Inhomogeneous { column: j }),
                    _ => {}
                }
            }
            if let Some(d) = deg {
                degrees.push(d);
                kept.push(col);
            }
        }
        let source = GradedFreeModule::new(ring, degrees);
        Ok(Presentation { rels: GradedMap::new(source, gens, kept)? })
    }

    /// The free module `⊕ S(-a)^{…}` with the given generator degrees.
    pub fn free(ring: Ring<K>, gen_degrees: Vec<i64>) -> Self {
        let gens = GradedFreeModule::new(ring.clone(), gen_degrees);
        Presentation { rels: GradedMap::zero(GradedFreeModule::zero(ring), gens) }
    }

    /// `⊕ O(d_j)`, i.e. generators in degrees `-d_j`.
    pub fn line_bundles(ring: Ring<K>, twists: &[i64]) -> Self {
        Presentation::free(ring, twists.iter().map(|d| -d).collect())
    }

    pub fn zero(ring: Ring<K>) -> Self {
        Presentation::free(ring, Vec::new())
    }

    pub fn ring(&self) -> &Ring<K> {
        self.rels.ring()
    }

    pub fn gens(&self) -> &GradedFreeModule<K> {
        self.rels.target()
    }

    pub fn rels(&self) -> &GradedMap<K> {
        &self.rels
    }

    pub fn num_gens(&self) -> usize {
        self.gens().rank()
    }

    pub fn num_rels(&self) -> usize {
        self.rels.source().rank()
    }

    pub fn is_free(&self) -> bool {
        self.rels.is_zero()
    }
}
