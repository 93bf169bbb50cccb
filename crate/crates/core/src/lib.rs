//! Laplacian spectra of trees, with a focus on the eigenvalues at or above 4.
//!
//! * [`tree`]: trees, uniform trees `H_{m,k}`, paths, starlike trees, and the
//!   junction/trunk/branch decomposition.
//! * [`spectra`]: exact inertia of `L - τI`, the exact spike count, a
//!   bisection eigensolver and closed-form spectral quantities.
//! * [`limits`]: limiting spike counts of `H_{0,k}` and `H_{1,k}` as `k → ∞`.
//! * [`estimator`]: spike estimate for arbitrary dendrite trees.
//! * [`io`]: SWC and edge-list readers, spectrum documents.
//! * [`sweep`]: parallel `(k, t)` grids of spike counts.

pub mod error;
pub mod estimator;
pub mod io;
pub mod limits;
pub mod spectra;
pub mod sweep;
pub mod tree;

pub use error::{Error, Result, TreeError};
pub use estimator::{
    classify_junctions, estimate_spikes, summarize, EstimateReport, JunctionClass, JunctionProfile,
    MorphologySummary,
};
pub use limits::{limit_det, limit_spike_count, LimitRoots};
pub use spectra::{
    count_n4plus, eigenvalues, inertia_at, inertia_at_int, Inertia, SpectralSummary,
};
pub use tree::{
    build_path, build_starlike, build_uniform_tree, decompose, Decomposition, Tree, UniformTreeSpec,
};
