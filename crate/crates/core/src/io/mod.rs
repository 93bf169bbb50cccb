//! Reading trees from SWC morphologies and edge lists; writing spectra.

mod edge_list;
mod spectrum;
mod swc;

use thiserror::Error;

use crate::error::TreeError;

pub use edge_list::{parse_edge_list, write_edge_list};
pub use spectrum::{
    read_spectrum_json, round_to_tolerance, write_spectrum, Histogram, OutputFormat,
    SpectrumDocument, DEFAULT_BINS, HISTOGRAM_RANGE,
};
pub use swc::{parse_swc, SwcMorphology, SwcRecord};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("expected {expected} fields, found {found}")]
    FieldCount { expected: usize, found: usize },
    #[error("field `{field}` is not a valid number: {value:?}")]
    NonNumeric { field: &'static str, value: String },
    #[error("duplicate sample id {0}")]
    DuplicateId(i64),
    #[error("parent {0} is not defined")]
    DanglingParent(i64),
    #[error("no root record (parent -1)")]
    NoRoot,
    #[error("second root record; first root on line {first_line}")]
    MultipleRoots { first_line: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("no data lines")]
    Empty,
    #[error(transparent)]
    Tree(TreeError),
}

/// A parse failure, with the 1-based line number when one applies.
#[derive(Debug, Clone, PartialEq, Error)]
pub struct ParseError {
    pub line: Option<usize>,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn at(line: usize, kind: ParseErrorKind) -> Self {
        ParseError {
            line: Some(line),
            kind,
        }
    }

    pub(crate) fn whole(kind: ParseErrorKind) -> Self {
        ParseError { line: None, kind }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

/// Data lines of a text file: `(1-based line number, trimmed content)`,
/// skipping blanks and `#` comments.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}
