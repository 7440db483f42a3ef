//! List-assignment files: one line per vertex, `<id>: c1 c2 c3`, colors
//! being nonnegative integers. Same comment and blank-line rules as `.rot`.

use std::fmt::Write as _;

use toroid_core::color::{Color, ListAssignment};
use toroid_core::RotationGraph;

use crate::rot::{records, ParseError};

fn syntax(line: usize, message: String) -> ParseError {
    ParseError::Syntax { line, message }
}

/// Reads lists for every vertex of `g`. A missing vertex is reported
/// against the line after the last record.
pub fn parse_list_assignment(text: &str, g: &RotationGraph) -> Result<ListAssignment, ParseError> {
    let recs = records(text)?;
    let mut lists: Vec<Option<Vec<Color>>> = vec![None; g.vertex_count()];
    for r in &recs {
        let v = g
            .index_of(r.id)
            .ok_or_else(|| syntax(r.line, format!("unknown vertex id `{}`", r.id)))?;
        if lists[v].is_some() {
            return Err(syntax(r.line, format!("second list for vertex `{}`", r.id)));
        }
        if r.items.is_empty() {
            return Err(syntax(r.line, format!("empty list for vertex `{}`", r.id)));
        }
        let mut colors = Vec::with_capacity(r.items.len());
        for tok in &r.items {
            let c: Color = tok
                .parse()
                .map_err(|_| syntax(r.line, format!("`{tok}` is not a color number")))?;
            if colors.contains(&c) {
                return Err(syntax(r.line, format!("color {c} repeated")));
            }
            colors.push(c);
        }
        lists[v] = Some(colors);
    }
    let end = text.lines().count() + 1;
    let lists = lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| syntax(end, format!("no list for vertex `{}`", g.id(v)))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ListAssignment::new(lists).expect("lists checked nonempty"))
}

pub fn serialize_list_assignment(g: &RotationGraph, lists: &ListAssignment) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        out.push_str(g.id(v));
        out.push(':');
        for c in lists.list(v) {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rot::parse_rotation_graph;

    fn c4() -> RotationGraph {
        parse_rotation_graph("a: b d\nb: c a\nc: d b\nd: a c\n").unwrap()
    }

    #[test]
    fn round_trip() {
        let g = c4();
        let l = parse_list_assignment("d: 2 1\na: 1 2\n# x\nb: 1 3\nc: 2 3\n", &g).unwrap();
        assert_eq!(l.list(0), &[1, 2]);
        assert_eq!(l.list(3), &[1, 2]);
        let text = serialize_list_assignment(&g, &l);
        assert_eq!(parse_list_assignment(&text, &g).unwrap(), l);
    }

    #[test]
    fn rejects_bad_files() {
        let g = c4();
        let cases = [
            ("a: 1\nb: 1\nc: 1\nd: 1\ne: 1\n", 5),
            ("a: 1\na: 2\n", 2),
            ("a: x\n", 1),
            ("a:\n", 1),
            ("a: 1 1\n", 1),
            ("a: 1\nb: 1\nc: 1\n", 4),
        ];
        for (text, line) in cases {
            assert_eq!(parse_list_assignment(text, &g).unwrap_err().line(), line, "{text:?}");
        }
    }
}
