//! Edge-list text format.
//!
//! The format is line oriented: the first data line is `n m`, followed by
//! `m` lines `u v`, one arc per line, 1-indexed. Lines starting with `#`
//! are comments; blank lines are ignored.

use thiserror::Error;

use crate::digraph::{Digraph, DigraphError};

/// Edge-list parse failures, reported with 1-based line numbers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// The input had no data lines at all.
    #[error("missing `n m` header line")]
    MissingHeader,
    /// The header line was not two integers.
    #[error("line {line}: expected header `n m`, found {text:?}")]
    BadHeader { line: usize, text: String },
    /// An arc line was not two integers.
    #[error("line {line}: expected arc `u v`, found {text:?}")]
    BadArcLine { line: usize, text: String },
    /// A vertex index was 0 or exceeded `n` (arcs are 1-indexed on disk).
    #[error("line {line}: vertex index {value} out of range 1..={n}")]
    IndexOutOfRange { line: usize, value: usize, n: usize },
    /// The number of arc lines did not match the header.
    #[error("header announced {expected} arcs but {found} arc lines were given")]
    ArcCountMismatch { expected: usize, found: usize },
    /// The arc set violated a digraph invariant.
    #[error("line {line}: {source}")]
    InvalidArcSet {
        line: usize,
        #[source]
        source: DigraphError,
    },
}

impl ParseError {
    /// Stable machine-readable error name.
    pub fn name(&self) -> &'static str {
        match self {
            ParseError::MissingHeader => "MissingHeader",
            ParseError::BadHeader { .. } => "BadHeader",
            ParseError::BadArcLine { .. } => "BadArcLine",
            ParseError::IndexOutOfRange { .. } => "IndexOutOfRange",
            ParseError::ArcCountMismatch { .. } => "ArcCountMismatch",
            ParseError::InvalidArcSet { source, .. } => source.name(),
        }
    }
}

fn parse_pair(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Parses the edge-list format into a validated [`Digraph`].
pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    let mut data_lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = data_lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(header).ok_or_else(|| ParseError::BadHeader {
        line: header_line,
        text: header.to_string(),
    })?;

    let mut arcs = Vec::with_capacity(m);
    let mut lines_of_arcs = Vec::with_capacity(m);
    for (line, body) in data_lines {
        let (u, v) = parse_pair(body).ok_or_else(|| ParseError::BadArcLine {
            line,
            text: body.to_string(),
        })?;
        for value in [u, v] {
            if value == 0 || value > n {
                return Err(ParseError::IndexOutOfRange { line, value, n });
            }
        }
        arcs.push((u - 1, v - 1));
        lines_of_arcs.push(line);
    }
    if arcs.len() != m {
        return Err(ParseError::ArcCountMismatch {
            expected: m,
            found: arcs.len(),
        });
    }

    Digraph::new(n, arcs.iter().copied()).map_err(|source| {
        let line = offending_line(&arcs, &lines_of_arcs, &source);
        ParseError::InvalidArcSet { line, source }
    })
}

/// Locates the line of the arc a [`DigraphError`] complains about. Duplicate
/// and digon errors point at the later of the two conflicting lines.
fn offending_line(arcs: &[(usize, usize)], lines: &[usize], err: &DigraphError) -> usize {
    let position = match *err {
        DigraphError::LoopArc(u) => arcs.iter().position(|&a| a == (u, u)),
        DigraphError::VertexOutOfRange { u, v, .. } => arcs.iter().position(|&a| a == (u, v)),
        DigraphError::DigonArc { u, v } => arcs.iter().position(|&a| a == (u, v)),
        DigraphError::DuplicateArc { u, v } => arcs
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a == (u, v))
            .map(|(i, _)| i)
            .nth(1),
    };
    position.and_then(|i| lines.get(i).copied()).unwrap_or(0)
}

/// Serializes a digraph in the edge-list format (1-indexed, sorted arcs).
pub fn format_edge_list(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.arc_count());
    for &(u, v) in g.arcs() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
