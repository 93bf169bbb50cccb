use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::inertia::{count_below, count_n4plus};
use crate::error::{Error, Result};
use crate::tree::Tree;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

// Top-level dyadic chunks searched in parallel.
const CHUNKS: usize = 64;

/// Full Laplacian spectrum of a tree, ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
    pub eigenvalues: Vec<f64>,
    pub tolerance: f64,
    /// Exact number of eigenvalues `≥ 4`.
    pub spike_count: usize,
    pub bulk_count: usize,
}

/// Locates all eigenvalues by bisection on `τ ↦ #{λ < τ}`.
///
/// Each eigenvalue is reported as the midpoint of a bracket narrower than
/// `tol`; repeated eigenvalues show up as a count jump across one bracket.
/// The search window is dyadic (`[-2^p, 2^p)` with `2^p > 2·max_degree`) so
/// integer eigenvalues such as 4 land on bracket endpoints.
pub fn eigenvalues(tree: &Tree, tol: f64) -> Result<SpectralSummary> {
    if !tol.gt(&0.0) || !tol.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = tree.vertex_count();
    let hi = ((2 * tree.max_degree() + 1) as u64).next_power_of_two() as f64;
    let lo = -hi;
    let width = (hi - lo) / CHUNKS as f64;
    let bounds: Vec<f64> = (0..=CHUNKS).map(|i| lo + width * i as f64).collect();
    let mut counts: Vec<usize> = bounds.par_iter().map(|&x| count_below(tree, x)).collect();
    counts[0] = 0;
    counts[CHUNKS] = n;
    for i in 1..CHUNKS {
        counts[i] = counts[i].clamp(counts[i - 1], n);
    }

    let chunks: Vec<Vec<f64>> = (0..CHUNKS)
        .into_par_iter()
        .map(|i| {
            let mut out = Vec::new();
            locate(
                tree,
                bounds[i],
                bounds[i + 1],
                counts[i],
                counts[i + 1],
                tol,
                &mut out,
            );
            out
        })
        .collect();
    let eigenvalues: Vec<f64> = chunks.into_iter().flatten().collect();
    debug_assert_eq!(eigenvalues.len(), n);

    let spike_count = count_n4plus(tree);
    Ok(SpectralSummary {
        eigenvalues,
        tolerance: tol,
        spike_count,
        bulk_count: n - spike_count,
    })
}

fn locate(tree: &Tree, lo: f64, hi: f64, c_lo: usize, c_hi: usize, tol: f64, out: &mut Vec<f64>) {
    if c_lo == c_hi {
        return;
    }
    let mid = 0.5 * (lo + hi);
    if hi - lo < tol || mid <= lo || mid >= hi {
        out.extend(std::iter::repeat_n(mid, c_hi - c_lo));
        return;
    }
    let c_mid = count_below(tree, mid).clamp(c_lo, c_hi);
    locate(tree, lo, mid, c_lo, c_mid, tol, out);
    locate(tree, mid, hi, c_mid, c_hi, tol, out);
}
