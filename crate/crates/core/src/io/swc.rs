use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{data_lines, ParseError, ParseErrorKind};
use crate::error::TreeError;
use crate::tree::Tree;

/// One SWC sample: `id type x y z radius parent`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwcRecord {
    pub sample_id: i64,
    pub structure_type: i64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub radius: f64,
    /// `-1` for the root.
    pub parent_id: i64,
}

/// A parsed morphology. Vertex `i` of `tree` is `samples[i]`, in file order.
#[derive(Debug, Clone, PartialEq)]
pub struct SwcMorphology {
    pub tree: Tree,
    pub samples: Vec<SwcRecord>,
}

const FIELDS: [&str; 7] = [
    "sample_id",
    "structure_type",
    "x",
    "y",
    "z",
    "radius",
    "parent_id",
];

fn parse_record(line: usize, content: &str) -> Result<SwcRecord, ParseError> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != FIELDS.len() {
        return Err(ParseError::at(
            line,
            ParseErrorKind::FieldCount {
                expected: FIELDS.len(),
                found: fields.len(),
            },
        ));
    }
    let bad = |i: usize| {
        ParseError::at(
            line,
            ParseErrorKind::NonNumeric {
                field: FIELDS[i],
                value: fields[i].into(),
            },
        )
    };
    let int = |i: usize| fields[i].parse::<i64>().map_err(|_| bad(i));
    let real = |i: usize| {
        fields[i]
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| bad(i))
    };
    Ok(SwcRecord {
        sample_id: int(0)?,
        structure_type: int(1)?,
        x: real(2)?,
        y: real(3)?,
        z: real(4)?,
        radius: real(5)?,
        parent_id: int(6)?,
    })
}

/// Parses SWC text. Sample ids are remapped to `0..n` in file order; each
/// non-root sample contributes the edge to its parent. Parents may be
/// declared after their children.
pub fn parse_swc(text: &str) -> Result<SwcMorphology, ParseError> {
    let mut samples = Vec::new();
    let mut lines = Vec::new();
    let mut index: HashMap<i64, usize> = HashMap::new();
    let mut root_line: Option<usize> = None;

    for (line, content) in data_lines(text) {
        let rec = parse_record(line, content)?;
        if index.insert(rec.sample_id, samples.len()).is_some() {
            return Err(ParseError::at(
                line,
                ParseErrorKind::DuplicateId(rec.sample_id),
            ));
        }
        if rec.parent_id == -1 {
            if let Some(first_line) = root_line {
                return Err(ParseError::at(
                    line,
                    ParseErrorKind::MultipleRoots { first_line },
                ));
            }
            root_line = Some(line);
        }
        samples.push(rec);
        lines.push(line);
    }
    if samples.is_empty() {
        return Err(ParseError::whole(ParseErrorKind::Empty));
    }
    if root_line.is_none() {
        return Err(ParseError::whole(ParseErrorKind::NoRoot));
    }

    let mut edges = Vec::with_capacity(samples.len() - 1);
    let mut edge_lines = Vec::with_capacity(samples.len() - 1);
    for (i, rec) in samples.iter().enumerate() {
        if rec.parent_id == -1 {
            continue;
        }
        let &p = index.get(&rec.parent_id).ok_or_else(|| {
            ParseError::at(lines[i], ParseErrorKind::DanglingParent(rec.parent_id))
        })?;
        if p == i {
            return Err(ParseError::at(lines[i], ParseErrorKind::SelfLoop(i)));
        }
        edges.push((i, p));
        edge_lines.push(lines[i]);
    }
    let tree = Tree::from_edges(samples.len(), &edges).map_err(|e| {
        let line = match e {
            TreeError::Cycle { u, v } => edges
                .iter()
                .position(|&edge| edge == (u, v))
                .map(|i| edge_lines[i]),
            _ => None,
        };
        ParseError {
            line,
            kind: ParseErrorKind::Tree(e),
        }
    })?;
    Ok(SwcMorphology { tree, samples })
}
