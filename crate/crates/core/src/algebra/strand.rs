//! Degree-`d` pieces ("strands") of graded free modules and maps, realized as
//! finite-dimensional vector spaces and matrices.

use std::collections::HashMap;

use super::field::Field;
use super::free::{GradedFreeModule, GradedMap};
use super::linalg::Matrix;
use super::monomial::{monomials_of_degree, Monomial};

/// A basis element `m · e_i` of a strand.
pub type StrandBasisElement = (usize, Monomial);

/// Basis of `F_d`: all `m · e_j` with `deg m + a_j = d`, ordered by generator index,
/// then lexicographically by monomial.
pub fn strand_basis<K: Field>(module: &GradedFreeModule<K>, d: i64) -> Vec<StrandBasisElement> {
    let n = module.ring().num_vars();
    let mut out = Vec::with_capacity(module.hilbert_function(d));
    for (j, a) in module.degrees().iter().enumerate() {
        out.extend(monomials_of_degree(n, d - a).into_iter().map(|m| (j, m)));
    }
    out
}

/// The degree-`d` piece of a graded map, with the bases it is written in.
#[derive(Clone, Debug)]
pub struct StrandMatrix<K: Field> {
    pub degree: i64,
    pub row_basis: Vec<StrandBasisElement>,
    pub col_basis: Vec<StrandBasisElement>,
    pub entries: Matrix<K>,
}

impl<K: Field> StrandMatrix<K> {
    pub fn rank(&self, field: &K) -> usize {
        self.entries.rank(field)
    }
}

/// Entry at (row `m·e_i`, column `m'·e_j`) is the coefficient of `m` in `φ_ij · m'`.
pub fn strand_matrix<K: Field>(map: &GradedMap<K>, d: i64) -> StrandMatrix<K> {
    let field = map.ring().field();
    let row_basis = strand_basis(map.target(), d);
    let col_basis = strand_basis(map.source(), d);
    let index: HashMap<StrandBasisElement, usize> =
        row_basis.iter().enumerate().map(|(k, b)| (*b, k)).collect();
    let mut entries = Matrix::zeros(field, row_basis.len(), col_basis.len());
    for (c, (j, m)) in col_basis.iter().enumerate() {
        for (i, f) in map.column(*j).iter().enumerate() {
            for (t, coeff) in f.terms() {
                let r = index[&(i, t.mul(m))];
                let v = field.add(entries.get(r, c), coeff);
                entries.set(r, c, v);
            }
        }
    }
    StrandMatrix { degree: d, row_basis, col_basis, entries }
}

/// Rank of the degree-`d` strand of `map`.
pub fn strand_rank<K: Field>(map: &GradedMap<K>, d: i64) -> usize {
    if map.source().hilbert_function(d) == 0 || map.target().hilbert_function(d) == 0 {
        return 0;
    }
    strand_matrix(map, d).rank(map.ring().field())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{Polynomial, Ring};

    #[test]
    fn p2_degree_one_basis() {
        let r = Ring::rationals(3).unwrap();
        let f = GradedFreeModule::new(r, vec![0]);
        let b = strand_basis(&f, 1);
        assert_eq!(b.len(), 3);
        assert_eq!(b[0].1, Monomial::var(0));
        assert_eq!(b[2].1, Monomial::var(2));
    }

    #[test]
    fn shifted_generators_on_p1() {
        let r = Ring::rationals(2).unwrap();
        let f = GradedFreeModule::new(r, vec![1, 1]);
        let b = strand_basis(&f, 1);
        assert_eq!(b, vec![(0, Monomial::one()), (1, Monomial::one())]);
        assert!(strand_basis(&GradedFreeModule::new(Ring::rationals(2).unwrap(), vec![0]), -1).is_empty());
    }

    #[test]
    fn linear_forms_on_p1() {
        let r = Ring::rationals(2).unwrap();
        let phi = GradedMap::new(
            GradedFreeModule::new(r.clone(), vec![1, 1]),
            GradedFreeModule::new(r.clone(), vec![0]),
            vec![vec![r.var(0)], vec![r.var(1)]],
        )
        .unwrap();
        let s1 = strand_matrix(&phi, 1);
        assert_eq!((s1.entries.rows(), s1.entries.cols()), (2, 2));
        assert_eq!(s1.rank(r.field()), 2);
        // no degree-0 elements in S(-1)^2: no columns, one row for the constant 1 of S
        let s0 = strand_matrix(&phi, 0);
        assert_eq!((s0.entries.rows(), s0.entries.cols()), (1, 0));
        assert_eq!(s0.rank(r.field()), 0);
    }

    #[test]
    fn koszul_middle_map_on_p2() {
        // S(-2)^3 -> S(-1)^3, columns e_{01}, e_{02}, e_{12} mapped to x_i e_j - x_j e_i
        let r = Ring::rationals(3).unwrap();
        let f = r.field();
        let x = |i| r.var(i);
        let col = |i: usize, j: usize| {
            let mut c = vec![Polynomial::zero(); 3];
            c[i] = x(j).neg(f);
            c[j] = x(i);
            c
        };
        let phi = GradedMap::new(
            GradedFreeModule::new(r.clone(), vec![2, 2, 2]),
            GradedFreeModule::new(r.clone(), vec![1, 1, 1]),
            vec![col(0, 1), col(0, 2), col(1, 2)],
        )
        .unwrap();
        let s = strand_matrix(&phi, 2);
        assert_eq!((s.entries.rows(), s.entries.cols()), (9, 3));
        assert_eq!(s.rank(f), 3);
    }
}
