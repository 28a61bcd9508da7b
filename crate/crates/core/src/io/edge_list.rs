//! Edge-list text: a header line `n m` followed by `m` lines `i j` with
//! 1-based vertices. Blank lines are ignored.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {token:?} is not a nonnegative integer")]
    NonIntegerToken { line: usize, token: String },
    #[error("line {line}: expected exactly two fields")]
    MalformedLine { line: usize },
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} edge lines follow")]
    CountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_line(line_no: usize, line: &str) -> Result<(usize, usize), EdgeListError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [a, b] = fields[..] else {
        return Err(EdgeListError::MalformedLine { line: line_no });
    };
    let num = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| EdgeListError::NonIntegerToken { line: line_no, token: t.to_string() })
    };
    Ok((num(a)?, num(b)?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_no, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, declared) = parse_line(header_no, header)?;
    let edges = lines.map(|(no, l)| parse_line(no, l)).collect::<Result<Vec<_>, _>>()?;
    if edges.len() != declared {
        return Err(EdgeListError::CountMismatch { declared, found: edges.len() });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Header plus one line per edge, sorted, 1-based, newline-terminated.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (i, j) in g.edges() {
        writeln!(out, "{} {}", i + 1, j + 1).unwrap();
    }
    out
}
