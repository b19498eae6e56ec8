//! Exact arithmetic: coefficient fields, graded polynomials, graded free modules
//! and maps, and strand-wise linear algebra.

pub mod field;
pub mod free;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod strand;

pub use field::{Field, PrimeField, Rationals};
pub use free::{GradedFreeModule, GradedMap};
pub use linalg::{rank, Matrix};
pub use monomial::{binomial, monomials_of_degree, Monomial, MAX_VARS};
pub use poly::{PolyOp, Polynomial, Ring};
pub use strand::{strand_basis, strand_matrix, strand_rank, StrandMatrix};
