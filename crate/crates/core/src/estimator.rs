//! Spike-count estimate for arbitrary dendrite trees.
//!
//! A dendrite is read as a mixture of uniform trees. Every junction
//! (degree ≥ 3) is classified by the shortest trunk touching it: junctions
//! on a trunk of length 0 behave like `H_{0,k}` and contribute one spike per
//! pair, the rest contribute one spike each:
//!
//! ```text
//! n̂ = ⌊(n0 + 1)/2⌋ + n1 + n2+
//! ```

use serde::{Deserialize, Serialize};

use crate::spectra::count_n4plus;
use crate::tree::{decompose, Decomposition, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JunctionClass {
    J0,
    J1,
    J2Plus,
}

impl JunctionClass {
    /// Class for a minimal incident trunk length; `None` (no trunk) is `J2Plus`.
    pub fn from_min_trunk(min_trunk: Option<usize>) -> Self {
        match min_trunk {
            Some(0) => JunctionClass::J0,
            Some(1) => JunctionClass::J1,
            _ => JunctionClass::J2Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JunctionProfile {
    pub junction_id: usize,
    pub degree: usize,
    pub min_trunk_length: Option<usize>,
    pub class: JunctionClass,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub n0: usize,
    pub n1: usize,
    pub n2plus: usize,
    pub estimate: usize,
    /// Junctions of degree ≥ 4; the estimate is built for T-junctions.
    pub high_degree_count: usize,
}

pub fn classify_junctions(tree: &Tree) -> Vec<JunctionProfile> {
    profiles(tree, &decompose(tree))
}

fn profiles(tree: &Tree, dec: &Decomposition) -> Vec<JunctionProfile> {
    dec.junctions
        .iter()
        .map(|&v| {
            let min_trunk_length = dec.trunks_at(v).map(|tr| tr.length).min();
            JunctionProfile {
                junction_id: v,
                degree: tree.degree(v),
                min_trunk_length,
                class: JunctionClass::from_min_trunk(min_trunk_length),
            }
        })
        .collect()
}

pub fn estimate_from_profiles(profiles: &[JunctionProfile]) -> EstimateReport {
    let mut r = EstimateReport::default();
    for p in profiles {
        match p.class {
            JunctionClass::J0 => r.n0 += 1,
            JunctionClass::J1 => r.n1 += 1,
            JunctionClass::J2Plus => r.n2plus += 1,
        }
        if p.degree >= 4 {
            r.high_degree_count += 1;
        }
    }
    r.estimate = r.n0.div_ceil(2) + r.n1 + r.n2plus;
    r
}

pub fn estimate_spikes(tree: &Tree) -> EstimateReport {
    estimate_from_profiles(&classify_junctions(tree))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BranchStats {
    pub min: usize,
    pub max: usize,
    pub mean: f64,
    pub median: f64,
}

/// Structural and spectral summary of a dendrite tree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorphologySummary {
    pub vertex_count: usize,
    /// Exact count of Laplacian eigenvalues ≥ 4.
    pub n4plus: usize,
    /// Vertices of degree exactly 3.
    pub n_t: usize,
    pub high_degree_count: usize,
    pub trunk_count: usize,
    /// Percentages of trunks with length 0, 1 and ≥ 2.
    pub trunk_percent: [f64; 3],
    pub branch_stats: Option<BranchStats>,
    pub estimate: EstimateReport,
}

pub fn summarize(tree: &Tree) -> MorphologySummary {
    let dec = decompose(tree);
    let estimate = estimate_from_profiles(&profiles(tree, &dec));

    let mut by_len = [0usize; 3];
    for tr in &dec.trunks {
        by_len[tr.length.min(2)] += 1;
    }
    let trunk_count = dec.trunks.len();
    let trunk_percent = by_len.map(|c| {
        if trunk_count == 0 {
            0.0
        } else {
            100.0 * c as f64 / trunk_count as f64
        }
    });

    let mut lengths: Vec<usize> = dec.branches.iter().map(|b| b.length).collect();
    lengths.sort_unstable();
    let branch_stats = (!lengths.is_empty()).then(|| {
        let n = lengths.len();
        let median = if n % 2 == 1 {
            lengths[n / 2] as f64
        } else {
            (lengths[n / 2 - 1] + lengths[n / 2]) as f64 / 2.0
        };
        BranchStats {
            min: lengths[0],
            max: lengths[n - 1],
            mean: lengths.iter().sum::<usize>() as f64 / n as f64,
            median,
        }
    });

    MorphologySummary {
        vertex_count: tree.vertex_count(),
        n4plus: count_n4plus(tree),
        n_t: tree.t_junction_count(),
        high_degree_count: estimate.high_degree_count,
        trunk_count,
        trunk_percent,
        branch_stats,
        estimate,
    }
}
