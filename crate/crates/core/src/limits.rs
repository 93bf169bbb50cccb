//! Spike counts of `H_{m,k}` as `k → ∞` for trunk lengths 0 and 1.
//!
//! Eliminating the branch blocks of `λI - L` replaces every branch by its
//! resolvent `α_k(λ)`, which tends to `α(λ) = alpha_limit(λ)`. What is left
//! is a `t×t` symmetric tridiagonal matrix whose determinant vanishes exactly
//! at the limiting spike eigenvalues; counting its roots above 4 gives the
//! limiting spike count.
//!
//! * trunk length 1: diagonal `(b-Δ, b, …, b, b-Δ)`, off-diagonal `-1`, with
//!   `b = (λ-2)(λ-3-α) - 2` and `Δ = α(λ-2) - 1`;
//! * trunk length 0: diagonal `(λ-3-2α, λ-3-α, …, λ-3-α, λ-3-2α)`,
//!   off-diagonal `1`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectra::alpha_limit;

/// Grid points used by [`limit_spike_count`].
pub const DEFAULT_GRID_POINTS: usize = 100_000;
/// Left end of the scan, just right of the branch point of `√(λ(λ-4))`.
pub const SCAN_START: f64 = 4.0 + 1e-9;
/// Right end of the scan; degree-3 trees have all Laplacian eigenvalues ≤ 6.
pub const SCAN_END: f64 = 6.0;

const ROOT_TOL: f64 = 1e-13;

/// The limiting `t×t` tridiagonal matrix at a fixed `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitMatrix {
    pub diagonal: Vec<f64>,
    pub off_diagonal: f64,
}

impl LimitMatrix {
    pub fn new(m: usize, t: usize, lambda: f64) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidSpec("t must be ≥ 2".into()));
        }
        if !lambda.gt(&4.0) {
            return Err(Error::OutOfDomain(format!("λ must be > 4, got {lambda}")));
        }
        let alpha = alpha_limit(lambda)?;
        let (end, inner, off) = match m {
            1 => {
                let b = (lambda - 2.0) * (lambda - 3.0 - alpha) - 2.0;
                let delta = alpha * (lambda - 2.0) - 1.0;
                (b - delta, b, -1.0)
            }
            0 => (lambda - 3.0 - 2.0 * alpha, lambda - 3.0 - alpha, 1.0),
            _ => {
                return Err(Error::InvalidSpec(format!(
                    "limiting matrices exist for trunk length 0 or 1, got {m}"
                )))
            }
        };
        let mut diagonal = vec![inner; t];
        diagonal[0] = end;
        diagonal[t - 1] = end;
        Ok(LimitMatrix {
            diagonal,
            off_diagonal: off,
        })
    }

    /// Determinant via the continuant `D_j = a_j D_{j-1} - c² D_{j-2}`.
    pub fn determinant(&self) -> f64 {
        let c2 = self.off_diagonal * self.off_diagonal;
        let (mut prev, mut cur) = (1.0, self.diagonal[0]);
        for &a in &self.diagonal[1..] {
            (prev, cur) = (cur, a * cur - c2 * prev);
        }
        cur
    }
}

/// Determinant of the limiting matrix for trunk length `m ∈ {0, 1}`.
pub fn limit_det(m: usize, t: usize, lambda: f64) -> Result<f64> {
    Ok(LimitMatrix::new(m, t, lambda)?.determinant())
}

/// Roots of the limiting determinant on `(4, 6]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitRoots {
    pub m: usize,
    pub t: usize,
    pub roots: Vec<f64>,
}

impl LimitRoots {
    pub fn count(&self) -> usize {
        self.roots.len()
    }
}

/// Limiting spike count with the default scan grid.
pub fn limit_spike_count(m: usize, t: usize) -> Result<LimitRoots> {
    limit_roots(m, t, DEFAULT_GRID_POINTS)
}

/// Scans a uniform grid of `points` values on `[SCAN_START, SCAN_END]` for
/// sign changes of [`limit_det`] and refines each bracket by bisection.
pub fn limit_roots(m: usize, t: usize, points: usize) -> Result<LimitRoots> {
    if points < 2 {
        return Err(Error::InvalidArgument(
            "scan needs at least 2 grid points".into(),
        ));
    }
    // validates m and t
    LimitMatrix::new(m, t, SCAN_END)?;
    let step = (SCAN_END - SCAN_START) / (points - 1) as f64;
    let grid: Vec<f64> = (0..points).map(|i| SCAN_START + step * i as f64).collect();
    let values: Vec<f64> = grid
        .par_iter()
        .map(|&x| limit_det(m, t, x).expect("grid inside domain"))
        .collect();

    let mut roots = Vec::new();
    for i in 0..points - 1 {
        let (a, b) = (values[i], values[i + 1]);
        if a == 0.0 {
            roots.push(grid[i]);
        } else if a.signum() != b.signum() && b != 0.0 {
            roots.push(refine(m, t, grid[i], grid[i + 1], a));
        }
    }
    if values[points - 1] == 0.0 {
        roots.push(grid[points - 1]);
    }
    Ok(LimitRoots { m, t, roots })
}

fn refine(m: usize, t: usize, mut lo: f64, mut hi: f64, f_lo: f64) -> f64 {
    let sign_lo = f_lo.signum();
    while hi - lo > ROOT_TOL {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f = limit_det(m, t, mid).expect("bracket inside domain");
        if f == 0.0 {
            return mid;
        }
        if f.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
