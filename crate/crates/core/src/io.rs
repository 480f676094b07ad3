//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`.
//! Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::ParseError;
use crate::graph::{Graph, VertexId};

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(ParseError::Syntax {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let [n, m] = two_numbers(line, header)?;

    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(m);
    for (line, text) in lines {
        edges.push(two_numbers(line, text)?.into());
    }
    if edges.len() != m {
        return Err(ParseError::Syntax {
            line: 1,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn two_numbers(line: usize, text: &str) -> Result<[usize; 2], ParseError> {
    let err = |msg: String| ParseError::Syntax { line, msg };
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let f = fields
            .next()
            .ok_or_else(|| err(format!("expected two integers, got {text:?}")))?;
        f.parse()
            .map_err(|_| err(format!("not a non-negative integer: {f:?}")))
    };
    let pair = [next()?, next()?];
    if fields.next().is_some() {
        return Err(err(format!("trailing fields in {text:?}")));
    }
    Ok(pair)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph, ParseError> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

/// Canonical rendering: edges ascending with `u < v`. Removed vertices keep
/// their ids and appear isolated.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_capacity(), g.edge_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.low(), e.high()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GraphError;

    #[test]
    fn parses_with_comments_and_either_order() {
        let g = parse_edge_list("# triangle\n3 3\n1 0\n1 2\n\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(write_edge_list(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(
            parse_edge_list("2 1\n0 0\n"),
            Err(ParseError::Graph(GraphError::SelfLoop(0)))
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list(""),
            Err(ParseError::Syntax { .. })
        ));
    }
}
