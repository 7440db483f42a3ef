//! The `.rot` text format: one vertex per line, `<id>: <n1> <n2> ... <nk>`,
//! neighbours in counterclockwise order. `#` starts a comment and blank
//! lines are skipped.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use toroid_core::{GraphError, RotationGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Graph { line, .. } => *line,
        }
    }
}

/// One non-empty line split into its head id and the tokens after the colon.
pub(crate) struct Record<'a> {
    pub line: usize,
    pub id: &'a str,
    pub items: Vec<&'a str>,
}

/// Shared line syntax of the graph and list formats.
pub(crate) fn records(text: &str) -> Result<Vec<Record<'_>>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let syntax = |message: &str| ParseError::Syntax {
            line,
            message: message.to_string(),
        };
        let (head, tail) = body.split_once(':').ok_or_else(|| syntax("expected `<id>: ...`"))?;
        let id = head.trim();
        if id.is_empty() {
            return Err(syntax("missing vertex id before `:`"));
        }
        if id.split_whitespace().count() > 1 {
            return Err(syntax("vertex id contains whitespace"));
        }
        if tail.contains(':') {
            return Err(syntax("unexpected second `:`"));
        }
        out.push(Record {
            line,
            id,
            items: tail.split_whitespace().collect(),
        });
    }
    Ok(out)
}

/// Parses and validates a rotation system. Errors carry the 1-based line
/// of the offending record.
pub fn parse_rotation_graph(text: &str) -> Result<RotationGraph, ParseError> {
    let recs = records(text)?;
    let mut line_of: BTreeMap<&str, usize> = BTreeMap::new();
    for r in &recs {
        if line_of.insert(r.id, r.line).is_some() {
            return Err(ParseError::Graph {
                line: r.line,
                source: GraphError::DuplicateVertex(r.id.to_string()),
            });
        }
    }
    RotationGraph::from_rotations(recs.iter().map(|r| (r.id, r.items.clone()))).map_err(|source| {
        let culprit = match &source {
            GraphError::DuplicateVertex(v) | GraphError::SelfLoop(v) | GraphError::NotAPermutation(v) => v.as_str(),
            GraphError::UnknownVertex { vertex, .. } | GraphError::DuplicateNeighbor { vertex, .. } => vertex.as_str(),
            GraphError::Asymmetric { from, .. } => from.as_str(),
            GraphError::IndexOutOfRange(_) => "",
        };
        ParseError::Graph {
            line: line_of.get(culprit).copied().unwrap_or(0),
            source,
        }
    })
}

/// Writes vertices in id order, each rotation starting at its smallest
/// neighbour id. Vertex indices already follow id order, so parsing the
/// output gives back `g.with_canonical_starts()`.
pub fn serialize_rotation_graph(g: &RotationGraph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        let rot = g.rotation(v);
        out.push_str(g.id(v));
        out.push(':');
        let start = (0..rot.len()).min_by_key(|&i| rot[i]).unwrap_or(0);
        for k in 0..rot.len() {
            let _ = write!(out, " {}", g.id(rot[(start + k) % rot.len()]));
        }
        out.push('\n');
    }
    out
}
