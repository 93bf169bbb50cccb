//! Parallel sweeps of the exact spike count over `(k, t)` grids.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectra::count_n4plus;
use crate::tree::{build_uniform_tree, UniformTreeSpec};

/// `n4+(H_{m,k})` for every `k` in `ks` (rows) and `t` in `ts` (columns).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountGrid {
    pub m: usize,
    pub ks: Vec<usize>,
    pub ts: Vec<usize>,
    /// Row-major, `cells[row * ts.len() + col]`.
    pub cells: Vec<usize>,
}

impl CountGrid {
    pub fn get(&self, k: usize, t: usize) -> Option<usize> {
        let row = self.ks.iter().position(|&x| x == k)?;
        let col = self.ts.iter().position(|&x| x == t)?;
        Some(self.cells[row * self.ts.len() + col])
    }

    pub fn row(&self, row: usize) -> &[usize] {
        let w = self.ts.len();
        &self.cells[row * w..(row + 1) * w]
    }

    /// Header `k,<t values…>`, then one row per `k`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k");
        for t in &self.ts {
            out.push_str(&format!(",{t}"));
        }
        out.push('\n');
        for (row, k) in self.ks.iter().enumerate() {
            out.push_str(&k.to_string());
            for c in self.row(row) {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Fills the grid with each cell computed independently. `jobs = None` uses
/// the global rayon pool. Cell order never depends on scheduling.
pub fn n4plus_grid(m: usize, ks: &[usize], ts: &[usize], jobs: Option<usize>) -> Result<CountGrid> {
    if ks.is_empty() || ts.is_empty() {
        return Err(Error::InvalidSpec("k and t ranges must be nonempty".into()));
    }
    let specs: Vec<UniformTreeSpec> = ks
        .iter()
        .flat_map(|&k| ts.iter().map(move |&t| UniformTreeSpec { m, k, t }))
        .collect();
    for spec in &specs {
        spec.validate()?;
    }
    let fill = || -> Vec<usize> {
        specs
            .par_iter()
            .map(|&spec| count_n4plus(&build_uniform_tree(spec).expect("validated spec")))
            .collect()
    };
    let cells = match jobs {
        Some(0) => return Err(Error::InvalidArgument("jobs must be ≥ 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(fill),
        None => fill(),
    };
    Ok(CountGrid {
        m,
        ks: ks.to_vec(),
        ts: ts.to_vec(),
        cells,
    })
}
