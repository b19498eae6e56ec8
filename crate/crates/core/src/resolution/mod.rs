//! Gröbner bases of graded submodules, syzygies, minimal free resolutions, Betti
//! tables and Hilbert data.

pub mod betti;
pub mod groebner;
pub mod hilbert;
pub mod minimal;
pub mod presentation;

pub use betti::{module_regularity, BettiTable, Regularity};
pub use groebner::{groebner_basis, syzygies};
pub use hilbert::{hilbert_data, HilbertData, HilbertPolynomial};
pub use minimal::{minimal_free_resolution, minimal_presentation, FreeResolution};
pub use presentation::Presentation;
