use super::{data_lines, ParseError, ParseErrorKind};
use crate::error::TreeError;
use crate::tree::Tree;

/// Parses `u v` lines (0-based vertex ids) into a validated tree.
pub fn parse_edge_list(text: &str) -> Result<Tree, ParseError> {
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (line, content) in data_lines(text) {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(ParseError::at(
                line,
                ParseErrorKind::FieldCount {
                    expected: 2,
                    found: fields.len(),
                },
            ));
        }
        let parse = |field: &'static str, s: &str| {
            s.parse::<usize>().map_err(|_| {
                ParseError::at(
                    line,
                    ParseErrorKind::NonNumeric {
                        field,
                        value: s.to_string(),
                    },
                )
            })
        };
        let u = parse("u", fields[0])?;
        let v = parse("v", fields[1])?;
        if u == v {
            return Err(ParseError::at(line, ParseErrorKind::SelfLoop(u)));
        }
        edges.push((u, v));
        lines.push(line);
    }
    if edges.is_empty() {
        return Err(ParseError::whole(ParseErrorKind::Empty));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0) + 1;
    Tree::from_edges(n, &edges).map_err(|e| {
        let line = match e {
            TreeError::Cycle { u, v } => edges
                .iter()
                .rposition(|&edge| edge == (u, v))
                .map(|i| lines[i]),
            _ => None,
        };
        ParseError {
            line,
            kind: ParseErrorKind::Tree(e),
        }
    })
}

/// One `u v` line per edge with `u < v`.
pub fn write_edge_list(tree: &Tree) -> String {
    let mut out = String::new();
    for (u, v) in tree.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::build_path;

    #[test]
    fn path_of_three() {
        assert_eq!(parse_edge_list("0 1\n1 2").unwrap(), build_path(3).unwrap());
        assert_eq!(
            parse_edge_list("# comment\n\n1 0\n  2 1 \n").unwrap(),
            build_path(3).unwrap()
        );
    }

    #[test]
    fn structural_errors() {
        let e = parse_edge_list("0 1\n1 2\n2 0").unwrap_err();
        assert_eq!(e.line, Some(3));
        assert!(matches!(
            e.kind,
            ParseErrorKind::Tree(TreeError::Cycle { .. })
        ));

        let e = parse_edge_list("0 1\n2 3").unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::Tree(TreeError::Disconnected { .. })
        ));

        let e = parse_edge_list("0 1\n1 1").unwrap_err();
        assert_eq!((e.line, e.kind), (Some(2), ParseErrorKind::SelfLoop(1)));
    }

    #[test]
    fn lexical_errors() {
        let e = parse_edge_list("0 1\n1 x").unwrap_err();
        assert_eq!(e.line, Some(2));
        assert!(matches!(
            e.kind,
            ParseErrorKind::NonNumeric { field: "v", .. }
        ));
        assert!(matches!(
            parse_edge_list("0 1 2").unwrap_err().kind,
            ParseErrorKind::FieldCount { found: 3, .. }
        ));
        assert_eq!(
            parse_edge_list("# nothing\n").unwrap_err().kind,
            ParseErrorKind::Empty
        );
    }

    #[test]
    fn write_then_parse() {
        let p = build_path(5).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&p)).unwrap(), p);
    }
}
