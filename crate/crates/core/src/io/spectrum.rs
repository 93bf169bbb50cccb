use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimator::{estimate_spikes, EstimateReport};
use crate::spectra::eigenvalues;
use crate::tree::Tree;

pub const DEFAULT_BINS: usize = 120;
/// Histogram window: the bulk `[0, 4]` plus the spike region.
pub const HISTOGRAM_RANGE: (f64, f64) = (0.0, 6.0);

/// Fixed-width histogram on `[lo, hi]`. Bin `i` is `[edges[i], edges[i+1])`,
/// the last bin is closed. Values above `hi` (possible only with junctions
/// of degree ≥ 4) are counted in `overflow`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
    pub overflow: usize,
}

impl Histogram {
    pub fn new(values: &[f64], lo: f64, hi: f64, bins: usize) -> Result<Self> {
        if bins == 0 || !hi.gt(&lo) {
            return Err(Error::InvalidArgument(format!(
                "histogram needs bins > 0 and hi > lo (bins={bins}, range=[{lo}, {hi}])"
            )));
        }
        let width = (hi - lo) / bins as f64;
        let edges: Vec<f64> = (0..=bins).map(|i| lo + width * i as f64).collect();
        let mut counts = vec![0; bins];
        let mut overflow = 0;
        for &x in values {
            if x > hi {
                overflow += 1;
            } else if x >= lo {
                // bisect on edges so boundary values land in the bin they open
                let i = edges
                    .partition_point(|&e| e <= x)
                    .saturating_sub(1)
                    .min(bins - 1);
                counts[i] += 1;
            }
        }
        Ok(Histogram {
            edges,
            counts,
            overflow,
        })
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum::<usize>() + self.overflow
    }

    /// Count of the bin containing `x`, if `x` is inside the window.
    pub fn count_at(&self, x: f64) -> Option<usize> {
        let bins = self.counts.len();
        if x < self.edges[0] || x > self.edges[bins] {
            return None;
        }
        let i = self
            .edges
            .partition_point(|&e| e <= x)
            .saturating_sub(1)
            .min(bins - 1);
        Some(self.counts[i])
    }
}

/// Everything known about one tree's spectrum, in serializable form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDocument {
    pub source: String,
    pub n: usize,
    pub n_edges: usize,
    pub n4plus: usize,
    pub n_t: usize,
    pub estimate: EstimateReport,
    pub tolerance: f64,
    /// Ascending, rounded to the resolution implied by `tolerance`.
    pub eigenvalues: Vec<f64>,
    pub histogram: Histogram,
}

/// Rounds `x` to the decimal resolution one digit coarser than `tol`, so a
/// bisection midpoint prints as the value it brackets. Negative zero is
/// normalized.
pub fn round_to_tolerance(x: f64, tol: f64) -> f64 {
    let decimals = ((-tol.log10()).floor() as i32 - 1).clamp(0, 15);
    let scale = 10f64.powi(decimals);
    (x * scale).round() / scale + 0.0
}

impl SpectrumDocument {
    pub fn build(source: impl Into<String>, tree: &Tree, tol: f64, bins: usize) -> Result<Self> {
        let summary = eigenvalues(tree, tol)?;
        let values: Vec<f64> = summary
            .eigenvalues
            .iter()
            .map(|&x| round_to_tolerance(x, tol))
            .collect();
        let histogram = Histogram::new(&values, HISTOGRAM_RANGE.0, HISTOGRAM_RANGE.1, bins)?;
        Ok(SpectrumDocument {
            source: source.into(),
            n: tree.vertex_count(),
            n_edges: tree.edge_count(),
            n4plus: summary.spike_count,
            n_t: tree.t_junction_count(),
            estimate: estimate_spikes(tree),
            tolerance: tol,
            eigenvalues: values,
            histogram,
        })
    }

    /// Checks that the counts agree with the payloads.
    pub fn validate(&self) -> Result<()> {
        let fail = |what: &str| {
            Err(Error::InvalidArgument(format!(
                "inconsistent document: {what}"
            )))
        };
        if self.eigenvalues.len() != self.n {
            return fail("eigenvalue count differs from n");
        }
        if self.n_edges + 1 != self.n {
            return fail("edge count is not n - 1");
        }
        if self.histogram.total() != self.n {
            return fail("histogram total differs from n");
        }
        if self.histogram.edges.len() != self.histogram.counts.len() + 1 {
            return fail("histogram edges do not bound its bins");
        }
        if self.n4plus > self.n {
            return fail("more spikes than eigenvalues");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

/// Serializes a document. CSV carries the eigenvalues only (header
/// `eigenvalue`); JSON carries the whole document, histogram included.
pub fn write_spectrum(doc: &SpectrumDocument, format: OutputFormat) -> Vec<u8> {
    match format {
        OutputFormat::Csv => {
            let mut out = String::from("eigenvalue\n");
            for x in &doc.eigenvalues {
                writeln!(out, "{x}").expect("writing to a String");
            }
            out.into_bytes()
        }
        OutputFormat::Json => {
            let mut out = serde_json::to_vec_pretty(doc).expect("document is always serializable");
            out.push(b'\n');
            out
        }
    }
}

pub fn read_spectrum_json(bytes: &[u8]) -> Result<SpectrumDocument> {
    let doc: SpectrumDocument = serde_json::from_slice(bytes)?;
    doc.validate()?;
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{build_path, build_starlike, build_uniform_tree, UniformTreeSpec};

    #[test]
    fn p2_csv() {
        let doc =
            SpectrumDocument::build("P2", &build_path(2).unwrap(), 1e-10, DEFAULT_BINS).unwrap();
        assert_eq!(
            String::from_utf8(write_spectrum(&doc, OutputFormat::Csv)).unwrap(),
            "eigenvalue\n0\n2\n"
        );
    }

    #[test]
    fn json_round_trip() {
        let tree = build_uniform_tree(UniformTreeSpec { m: 1, k: 2, t: 3 }).unwrap();
        let doc = SpectrumDocument::build("H_{1,2}", &tree, 1e-10, DEFAULT_BINS).unwrap();
        doc.validate().unwrap();
        let bytes = write_spectrum(&doc, OutputFormat::Json);
        assert_eq!(read_spectrum_json(&bytes).unwrap(), doc);
        let v: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        for key in [
            "source",
            "n",
            "n4plus",
            "n_t",
            "estimate",
            "eigenvalues",
            "histogram",
        ] {
            assert!(v.get(key).is_some(), "missing key {key}");
        }
    }

    #[test]
    fn claw_histogram_has_spike_at_four() {
        let doc = SpectrumDocument::build("claw", &build_starlike(&[1, 1, 1]).unwrap(), 1e-10, 12)
            .unwrap();
        assert_eq!(doc.eigenvalues, vec![0.0, 1.0, 1.0, 4.0]);
        assert_eq!(doc.histogram.count_at(4.0), Some(1));
        assert_eq!(doc.histogram.count_at(1.0), Some(2));
        assert_eq!(doc.histogram.total(), 4);
    }

    #[test]
    fn high_degree_overflow() {
        let star = build_starlike(&[1; 7]).unwrap(); // largest eigenvalue 8
        let doc = SpectrumDocument::build("star", &star, 1e-10, DEFAULT_BINS).unwrap();
        assert_eq!(doc.histogram.overflow, 1);
        doc.validate().unwrap();
    }

    #[test]
    fn rejects_inconsistent_json() {
        let doc = SpectrumDocument::build("P3", &build_path(3).unwrap(), 1e-10, 10).unwrap();
        let mut bad = doc.clone();
        bad.eigenvalues.pop();
        let bytes = serde_json::to_vec(&bad).unwrap();
        assert!(read_spectrum_json(&bytes).is_err());
    }

    #[test]
    fn rounding() {
        assert_eq!(round_to_tolerance(2.000_000_000_029, 1e-10), 2.0);
        assert_eq!(round_to_tolerance(-2.9e-11, 1e-10).to_string(), "0");
        assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert!("xml".parse::<OutputFormat>().is_err());
    }
}
