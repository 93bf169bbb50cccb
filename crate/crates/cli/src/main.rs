//! `dendrite`: build trees, count Laplacian eigenvalues ≥ 4, compute
//! spectra, limits and spike estimates.
//!
//! Exit codes: 0 success, 1 I/O or parse failure, 2 invalid configuration.

mod range;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dendrite_core::io::{
    parse_edge_list, parse_swc, write_edge_list, write_spectrum, OutputFormat, SpectrumDocument,
    DEFAULT_BINS,
};
use dendrite_core::limits::limit_spike_count;
use dendrite_core::spectra::DEFAULT_TOLERANCE;
use dendrite_core::sweep::n4plus_grid;
use dendrite_core::{
    build_uniform_tree, count_n4plus, estimate_spikes, summarize, Error, Tree, UniformTreeSpec,
};

use range::IntList;

#[derive(Parser)]
#[command(name = "dendrite", version, about = "Laplacian spikes of trees")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "DENDRITE_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of a uniform tree H_{m,k}.
    Generate {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact number of eigenvalues ≥ 4, with junction counts.
    Count {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// CSV grid of exact counts over k (rows) and t (columns).
    Table {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: IntList,
        #[arg(long)]
        t: IntList,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full spectrum document (eigenvalues, histogram, counts).
    Spectrum {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_BINS)]
        bins: usize,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Junction classes, spike estimate and exact count.
    Estimate {
        #[command(flatten)]
        source: SourceArgs,
        /// `text` or `json`.
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spike count of H_{m,k} as k grows without bound (m = 0 or 1).
    Limit {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    t: usize,
}

/// Either `--input FILE` (`.swc`, otherwise an edge list) or `--m --k --t`.
#[derive(Args)]
struct SourceArgs {
    #[arg(long, conflicts_with_all = ["m", "k", "t"])]
    input: Option<PathBuf>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Config(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Config(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(msg) | Error::InvalidArgument(msg) | Error::OutOfDomain(msg) => {
                Failure::Config(msg)
            }
            other => Failure::Io(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

/// Shortest decimal form of `x` rounded to 12 significant digits.
fn sig12(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    format!("{}", rounded + 0.0)
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Outcome {
    match out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

fn uniform(m: usize, k: usize, t: usize) -> Result<Tree, Failure> {
    Ok(build_uniform_tree(UniformTreeSpec::new(m, k, t)?)?)
}

fn load(path: &Path) -> Result<Tree, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    let is_swc = path
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("swc"));
    let parsed = if is_swc {
        parse_swc(&text).map(|m| m.tree)
    } else {
        parse_edge_list(&text)
    };
    parsed.map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

impl SourceArgs {
    /// The tree and a label for it.
    fn resolve(&self) -> Result<(Tree, String), Failure> {
        match (&self.input, self.m, self.k, self.t) {
            (Some(path), ..) => Ok((load(path)?, path.display().to_string())),
            (None, Some(m), Some(k), Some(t)) => {
                Ok((uniform(m, k, t)?, format!("H_{{{m},{k}}} t={t}")))
            }
            _ => Err(Failure::Config(
                "give --input FILE or all of --m, --k, --t".into(),
            )),
        }
    }
}

fn parse_format(s: &str) -> Result<OutputFormat, Failure> {
    Ok(s.parse::<OutputFormat>()?)
}

fn run(cli: Cli) -> Outcome {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Config("jobs must be ≥ 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Config(format!("thread pool: {e}")))?;
    }

    match cli.command {
        Command::Generate { spec, out } => {
            let tree = uniform(spec.m, spec.k, spec.t)?;
            emit(out.as_deref(), write_edge_list(&tree).as_bytes())
        }
        Command::Count { source } => {
            let (tree, _) = source.resolve()?;
            let e = estimate_spikes(&tree);
            let text = format!(
                "n = {}\nn_t = {}\nn4plus = {}\nn0 = {}\nn1 = {}\nn2plus = {}\n",
                tree.vertex_count(),
                tree.t_junction_count(),
                count_n4plus(&tree),
                e.n0,
                e.n1,
                e.n2plus
            );
            emit(None, text.as_bytes())
        }
        Command::Table { m, k, t, out } => {
            let grid = n4plus_grid(m, &k.0, &t.0, None)?;
            emit(out.as_deref(), grid.to_csv().as_bytes())
        }
        Command::Spectrum {
            source,
            tol,
            bins,
            format,
            out,
        } => {
            let format = parse_format(&format)?;
            if !tol.gt(&0.0) {
                return Err(Failure::Config("tolerance must be > 0".into()));
            }
            let (tree, label) = source.resolve()?;
            let doc = SpectrumDocument::build(label, &tree, tol, bins)?;
            emit(out.as_deref(), &write_spectrum(&doc, format))
        }
        Command::Estimate {
            source,
            format,
            out,
        } => {
            let (tree, label) = source.resolve()?;
            let s = summarize(&tree);
            let bytes = match format.as_str() {
                "json" => {
                    let mut v = serde_json::to_vec_pretty(&s).expect("summary serializes");
                    v.push(b'\n');
                    v
                }
                "text" => estimate_text(&label, &s).into_bytes(),
                other => return Err(Failure::Config(format!("unknown format {other:?}"))),
            };
            emit(out.as_deref(), &bytes)
        }
        Command::Limit { m, t, out } => {
            let roots = limit_spike_count(m, t)?;
            let mut text = format!("limit count = {}\n", roots.count());
            for r in &roots.roots {
                writeln!(text, "root = {}", sig12(*r)).expect("writing to a String");
            }
            emit(out.as_deref(), text.as_bytes())
        }
    }
}

fn estimate_text(label: &str, s: &dendrite_core::MorphologySummary) -> String {
    let mut t = String::new();
    let e = &s.estimate;
    let _ = writeln!(t, "source = {label}");
    let _ = writeln!(t, "n = {}", s.vertex_count);
    let _ = writeln!(t, "n_t = {}", s.n_t);
    let _ = writeln!(t, "high_degree = {}", s.high_degree_count);
    let _ = writeln!(t, "trunks = {}", s.trunk_count);
    for (name, p) in ["trunk_len_0_pct", "trunk_len_1_pct", "trunk_len_2plus_pct"]
        .iter()
        .zip(s.trunk_percent)
    {
        let _ = writeln!(t, "{name} = {}", sig12(p));
    }
    if let Some(b) = &s.branch_stats {
        let _ = writeln!(t, "branch_len_min = {}", b.min);
        let _ = writeln!(t, "branch_len_max = {}", b.max);
        let _ = writeln!(t, "branch_len_mean = {}", sig12(b.mean));
        let _ = writeln!(t, "branch_len_median = {}", sig12(b.median));
    }
    let _ = writeln!(t, "n0 = {}", e.n0);
    let _ = writeln!(t, "n1 = {}", e.n1);
    let _ = writeln!(t, "n2plus = {}", e.n2plus);
    let _ = writeln!(t, "estimate = {}", e.estimate);
    let _ = writeln!(t, "n4plus = {}", s.n4plus);
    if e.high_degree_count > 0 {
        let _ = writeln!(
            t,
            "note: {} junction(s) of degree ≥ 4 classified like T-junctions",
            e.high_degree_count
        );
    }
    t
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Io(msg) | Failure::Config(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
