//! Laplacian spectra of trees.
//!
//! Counting is done by congruence: eliminating a tree-shaped matrix leaf by
//! leaf gives a diagonal matrix with the same inertia, so the number of
//! eigenvalues of `L` on either side of `τ` falls out of the signs of the
//! pivots. Over the rationals this is exact, including at `τ = 4` for trees
//! such as the claw `K_{1,3}` that have 4 as an eigenvalue.

mod closed_form;
mod eigen;
mod inertia;
mod laplacian;

pub use closed_form::{
    alpha_at_four, alpha_closed, alpha_limit, alpha_recursive, alpha_recursive_exact,
    branch_eigs_closed, path_eigs_closed,
};
pub use eigen::{eigenvalues, SpectralSummary, DEFAULT_TOLERANCE};
pub use inertia::{count_below, count_n4plus, inertia_at, inertia_at_int, Inertia};
pub use laplacian::{laplacian_entries, LaplacianView};
