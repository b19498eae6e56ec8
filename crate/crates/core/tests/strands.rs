mod common;

use common::{map, map_inputs, pool, ring, Coeffs};
use proptest::prelude::*;
use sheafcoh::algebra::{binomial, strand_basis, strand_matrix, strand_rank, GradedFreeModule};

fn rotation(len: usize, by: usize) -> Vec<usize> {
    (0..len).map(|k| (k + by) % len).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strand_rank_ignores_generator_order(
        (nv, src, tgt, coeffs) in map_inputs(),
        d in -1i64..=5,
        rs in 0usize..3,
        rt in 0usize..3,
    ) {
        let r = ring(nv);
        let phi = map(&r, &src, &tgt, &mut Coeffs::new(&coeffs));
        let mut sp = rotation(src.len(), rs);
        let mut tp = rotation(tgt.len(), rt);
        sp.reverse();
        tp.reverse();
        let psi = phi.permuted(&sp, &tp);
        prop_assert_eq!(strand_rank(&phi, d), strand_rank(&psi, d));
    }

    #[test]
    fn strand_basis_counts_monomials(nv in 2usize..=4, degs in prop::collection::vec(-3i64..=3, 0..4), d in -6i64..=6) {
        let f = GradedFreeModule::new(ring(nv), degs.clone());
        let n = nv as i64 - 1;
        let expected: u128 = degs.iter().map(|a| binomial(n + d - a, n)).sum();
        prop_assert_eq!(strand_basis(&f, d).len() as u128, expected);
        prop_assert_eq!(f.hilbert_function(d) as u128, expected);
    }

    #[test]
    fn strands_are_multiplicative(
        nv in 2usize..=3,
        a in common::degrees(2, -1, 1),
        b in common::degrees(2, 0, 2),
        c in common::degrees(2, 1, 3),
        coeffs in pool(),
        d in -6i64..=6,
    ) {
        let r = ring(nv);
        let mut k = Coeffs::new(&coeffs);
        let phi = map(&r, &b, &a, &mut k);
        let psi = map(&r, &c, &b, &mut k);
        let composite = phi.compose(&psi).unwrap();
        let field = r.field();
        let lhs = strand_matrix(&composite, d).entries;
        let rhs = strand_matrix(&phi, d).entries.mul(&strand_matrix(&psi, d).entries, field);
        prop_assert_eq!(lhs, rhs);
    }
}
