//! Text formats for arrangement graphs.
//!
//! The edge-list format is line oriented: a `m=<planes>` header, then one
//! `i-j` edge per line. `#` starts a comment, blank lines are ignored:
//!
//! ```text
//! m=5          # planes in general position
//! 1-2
//! 2-3
//! ```
//!
//! The JSON form is `{"m":5,"edges":[[1,2],[2,3]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{ParseError, Result};
use crate::graph::ArrangementGraph;

/// Parses the line-oriented edge-list format.
pub fn parse_edge_list(input: &str) -> Result<ArrangementGraph> {
    let mut m: Option<u32> = None;
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut line_no = 0;
    for raw in input.lines() {
        line_no += 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor { bytes: content.as_bytes(), line: line_no, pos: 0 };
        cur.skip_ws();
        if m.is_none() {
            if cur.peek() != Some(b'm') {
                return Err(cur.error("expected header m=<planes>").into());
            }
            cur.pos += 1;
            cur.skip_ws();
            cur.expect(b'=')?;
            cur.skip_ws();
            m = Some(cur.number("plane count")?);
        } else {
            let i = cur.number("plane index")?;
            cur.skip_ws();
            cur.expect(b'-')?;
            cur.skip_ws();
            let j = cur.number("plane index")?;
            pairs.push((i, j));
        }
        cur.skip_ws();
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing characters").into());
        }
    }
    match m {
        Some(m) => ArrangementGraph::new(m, pairs),
        None => Err(ParseError::new(line_no.max(1), 1, "missing header m=<planes>").into()),
    }
}

/// Serializes a graph in the edge-list format, edges sorted.
pub fn edge_list_string(g: &ArrangementGraph) -> String {
    let mut out = format!("m={}\n", g.m());
    for e in g.edges() {
        out.push_str(&format!("{}-{}\n", e.i(), e.j()));
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    m: u32,
    edges: Vec<(u32, u32)>,
}

/// Parses `{"m":…,"edges":[[i,j],…]}`.
pub fn parse_graph_json(input: &str) -> Result<ArrangementGraph> {
    let raw: GraphJson = serde_json::from_str(input)?;
    ArrangementGraph::new(raw.m, raw.edges)
}

/// Serializes a graph as compact JSON with sorted edges.
pub fn graph_json_string(g: &ArrangementGraph) -> String {
    let raw = GraphJson { m: g.m(), edges: g.edges().map(|e| (e.i(), e.j())).collect() };
    serde_json::to_string(&raw).expect("graph serialization cannot fail")
}

struct Cursor<'a> {
    bytes: &'a [u8],
    line: usize,
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\r')) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.pos + 1, message)
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.peek() {
            Some(found) if found == b => {
                self.pos += 1;
                Ok(())
            }
            Some(found) => Err(self
                .error(format!("expected '{}', found '{}'", b as char, found as char))
                .into()),
            None => Err(self.error(format!("expected '{}', found end of line", b as char)).into()),
        }
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(format!("expected {what}")).into());
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| {
                ParseError::new(self.line, start + 1, format!("{what} out of range")).into()
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn parses_the_documented_example() {
        let g = parse_edge_list("m=5          # planes in general position\n1-2\n2-3\n").unwrap();
        assert_eq!(g.m(), 5);
        assert_eq!(g.edge_count(), 2);
        assert!(g.contains(1, 2) && g.contains(2, 3));
    }

    #[test]
    fn tolerates_blanks_comments_and_spacing() {
        let g =
            parse_edge_list("\n# leading comment\n  m = 4\n\n  2 - 1 # swapped\n3-4\n").unwrap();
        assert_eq!(g.m(), 4);
        assert!(g.contains(1, 2) && g.contains(3, 4));
    }

    #[test]
    fn edge_list_round_trips() {
        let g = parse_edge_list("m=5\n2-1\n1-3\n4-5\n").unwrap();
        let text = edge_list_string(&g);
        assert_eq!(text, "m=5\n1-2\n1-3\n4-5\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(edge_list_string(&ArrangementGraph::empty(7).unwrap()), "m=7\n");
    }

    #[test]
    fn reports_positions() {
        let err = |s: &str| match parse_edge_list(s) {
            Err(Error::Parse(e)) => e,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        let e = err("1-2\n");
        assert_eq!((e.line, e.column), (1, 1));
        let e = err("m=4\n1-2\n2-\n");
        assert_eq!((e.line, e.column), (3, 3));
        let e = err("m=4\n1+2\n");
        assert_eq!((e.line, e.column), (2, 2));
        let e = err("m=4\n1-2 3\n");
        assert_eq!((e.line, e.column), (2, 5));
        let e = err("# nothing\n\n");
        assert_eq!((e.line, e.column), (2, 1));
        let e = err("m=99999999999999\n");
        assert_eq!((e.line, e.column), (1, 3));
    }

    #[test]
    fn semantic_errors_pass_through() {
        assert!(matches!(parse_edge_list("m=4\n2-2\n"), Err(Error::LoopEdge { v: 2 })));
        assert!(matches!(
            parse_edge_list("m=4\n1-2\n2-1\n"),
            Err(Error::DuplicateEdge { i: 1, j: 2 })
        ));
        assert!(matches!(
            parse_edge_list("m=4\n1-5\n"),
            Err(Error::IndexOutOfRange { index: 5, m: 4 })
        ));
    }

    #[test]
    fn json_round_trips() {
        let g = parse_graph_json(r#"{"m":5,"edges":[[2,1],[2,3]]}"#).unwrap();
        assert_eq!(graph_json_string(&g), r#"{"m":5,"edges":[[1,2],[2,3]]}"#);
        let empty = parse_graph_json(r#"{"m":3,"edges":[]}"#).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn json_rejects_malformed_input() {
        assert!(matches!(parse_graph_json(r#"{"edges":[]}"#), Err(Error::Json(_))));
        assert!(matches!(
            parse_graph_json(r#"{"m":5,"edges":[[1,2]],"extra":0}"#),
            Err(Error::Json(_))
        ));
        assert!(matches!(parse_graph_json(r#"{"m":5,"edges":[[1,2,3]]}"#), Err(Error::Json(_))));
        assert!(matches!(
            parse_graph_json(r#"{"m":5,"edges":[[1,1]]}"#),
            Err(Error::LoopEdge { v: 1 })
        ));
    }
}
