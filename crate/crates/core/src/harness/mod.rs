//! Module files, seeded corpora and the verification suites.

pub mod corpus;
pub mod module_file;
pub mod report;
pub mod suites;

pub use corpus::{base_corpus, locally_free_corpus, CorpusEntry};
pub use module_file::{parse_module, to_module_file, AnyPresentation, ModuleFile, RingSpec};
pub use report::{InstanceReport, VerificationReport};
pub use suites::{
    bott_formula, default_window, verify_beilinson, verify_bott, verify_bott_agreement, verify_euler,
    verify_key_theorem, verify_oracle, verify_regularity_tensor, verify_subadditivity,
};

/// Cap rayon's worker count from `SHFC_THREADS` when it holds a positive integer.
/// Must run before the first parallel call; later calls are no-ops.
pub fn configure_threads() {
    if let Some(n) = std::env::var("SHFC_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}
