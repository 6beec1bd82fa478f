//! Exact-arithmetic toolkit for permutation codes under the Hamming metric.
//!
//! A permutation code is a subset of the symmetric group S_n in which every
//! pair of codewords disagrees in at least `d` positions. This crate computes
//! the classical size bounds for such codes (Gilbert-Varshamov, sphere
//! packing, the folklore degree bound) together with the locally-sparse
//! independence bounds that sharpen them, builds the underlying distance
//! graph explicitly for small `n`, and constructs explicit codes by greedy
//! sphere exclusion.
//!
//! All counting is done in arbitrary-precision integers; floating point is
//! confined to logarithms and entropy, where `f64` carries far more accuracy
//! than the reported quantities need.
//!
//! The hot kernels (the quadruple edge sum, profile scans, graph row
//! construction, pairwise verification) run data-parallel under the
//! `parallel` feature (enabled by default) and fall back to plain loops
//! without it. Each kernel also exposes a `*_sequential` twin so the two
//! paths can be compared; their outputs are bit-identical by construction.

pub mod bounds;
pub mod codes;
pub mod combinatorics;
pub mod exactgraph;

pub use bounds::CodeParameters;
pub use exactgraph::Permutation;

/// Caps the global worker pool at `threads`. Returns `false` when the pool
/// was already initialized (first call wins) or when the crate was built
/// without the `parallel` feature, in which case the setting is moot.
#[cfg(feature = "parallel")]
pub fn configure_threads(threads: usize) -> bool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .is_ok()
}

#[cfg(not(feature = "parallel"))]
pub fn configure_threads(_threads: usize) -> bool {
    false
}
