//! Strategies and builders shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use sheafcoh::algebra::{monomials_of_degree, Field, GradedFreeModule, GradedMap, Polynomial, PrimeField, Ring};
use sheafcoh::resolution::Presentation;

pub const P: u64 = 101;

pub fn ring(num_vars: usize) -> Ring<PrimeField> {
    Ring::prime(P, num_vars).unwrap()
}

/// Cycles through a pool of coefficients; zeros make entries sparse.
pub struct Coeffs<'a> {
    pool: &'a [u32],
    pos: usize,
}

impl<'a> Coeffs<'a> {
    pub fn new(pool: &'a [u32]) -> Self {
        assert!(!pool.is_empty());
        Coeffs { pool, pos: 0 }
    }

    fn next(&mut self) -> u32 {
        let c = self.pool[self.pos % self.pool.len()];
        self.pos += 1;
        c
    }
}

/// Random homogeneous polynomial of degree `deg` (zero when `deg < 0`).
pub fn poly(ring: &Ring<PrimeField>, deg: i64, coeffs: &mut Coeffs) -> Polynomial<PrimeField> {
    let field = ring.field();
    let terms = monomials_of_degree(ring.num_vars(), deg)
        .into_iter()
        .map(|m| (m, field.from_i64(coeffs.next() as i64)))
        .collect();
    Polynomial::from_terms(field, terms)
}

pub fn map(
    ring: &Ring<PrimeField>,
    source: &[i64],
    target: &[i64],
    coeffs: &mut Coeffs,
) -> GradedMap<PrimeField> {
    let columns = source
        .iter()
        .map(|&s| target.iter().map(|&t| poly(ring, s - t, coeffs)).collect())
        .collect();
    GradedMap::new(
        GradedFreeModule::new(ring.clone(), source.to_vec()),
        GradedFreeModule::new(ring.clone(), target.to_vec()),
        columns,
    )
    .unwrap()
}

/// Coefficient pools: about half the draws are zero.
pub fn pool() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(prop_oneof![Just(0u32), 1u32..P as u32], 1..48)
}

pub fn degrees(max_len: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(lo..=hi, 1..=max_len)
}

/// A random homogeneous map `(num_vars, source degrees, target degrees, pool)`.
pub fn map_inputs() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<u32>)> {
    (2usize..=3, degrees(3, 0, 3), degrees(3, -1, 1), pool())
}

/// A small random presentation over `F_101`: one or two generators in degrees
/// 0 or 1, up to three relations of degree one or two above the top generator.
pub fn presentation_inputs() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<u32>)> {
    (2usize..=3, degrees(2, 0, 1), prop::collection::vec(1i64..=2, 0..=3), pool())
}

pub fn presentation(num_vars: usize, gens: &[i64], rel_steps: &[i64], pool: &[u32]) -> Presentation<PrimeField> {
    let r = ring(num_vars);
    let top = *gens.iter().max().unwrap();
    let sources: Vec<i64> = rel_steps.iter().map(|s| top + s).collect();
    let phi = map(&r, &sources, gens, &mut Coeffs::new(pool));
    Presentation::from_columns(r, gens.to_vec(), phi.columns().to_vec()).unwrap()
}
