//! Combinatorial type symbols for line arrangements.
//!
//! A symbol records, per connected component of Γ(D), the valence
//! distribution together with the edge and triangle counts:
//!
//! ```text
//! (3,0,1|3,0)        one component: three 1-valent vertices, one 3-valent,
//!                    3 edges, 0 triangles (the star on four vertices)
//! (2,1|2,0)^2        two copies of the 2-edge chain
//! ```
//!
//! Concatenated component blocks form the full symbol; the empty arrangement
//! is written as the empty string. The k-th entry before the bar counts the
//! vertices of valence k, so entries must satisfy the handshake relation
//! Σ k·n_k = 2·edges within every block.

use std::fmt;

use crate::error::{ParseError, Result};
use crate::graph::ArrangementGraph;

/// One connected component of a type symbol.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct SymbolComponent {
    /// `valence_counts[k]` is the number of vertices of valence k+1; no
    /// trailing zeros.
    pub valence_counts: Vec<u32>,
    pub edges: u32,
    pub triangles: u32,
}

impl SymbolComponent {
    pub fn vertex_count(&self) -> u32 {
        self.valence_counts.iter().sum()
    }

    fn key(&self) -> (u32, u32, u32, &[u32]) {
        (self.vertex_count(), self.edges, self.triangles, &self.valence_counts)
    }
}

impl PartialOrd for SymbolComponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SymbolComponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for SymbolComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self.valence_counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({}|{},{})", counts.join(","), self.edges, self.triangles)
    }
}

/// The full combinatorial type of Γ(D): its components' symbols, smallest
/// first, with repetitions kept expanded.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TypeSymbol {
    components: Vec<SymbolComponent>,
}

impl TypeSymbol {
    pub fn new(mut components: Vec<SymbolComponent>) -> TypeSymbol {
        components.sort();
        TypeSymbol { components }
    }

    pub fn components(&self) -> &[SymbolComponent] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Total number of edge-carrying vertices.
    pub fn vertex_count(&self) -> u32 {
        self.components.iter().map(|c| c.vertex_count()).sum()
    }

    pub fn edge_count(&self) -> u32 {
        self.components.iter().map(|c| c.edges).sum()
    }

    pub fn triangle_count(&self) -> u32 {
        self.components.iter().map(|c| c.triangles).sum()
    }
}

impl fmt::Display for TypeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.components.len() {
            let mut mult = 1;
            while i + mult < self.components.len()
                && self.components[i + mult] == self.components[i]
            {
                mult += 1;
            }
            write!(f, "{}", self.components[i])?;
            if mult > 1 {
                write!(f, "^{mult}")?;
            }
            i += mult;
        }
        Ok(())
    }
}

/// Reads the combinatorial type off a graph.
pub fn type_symbol(g: &ArrangementGraph) -> TypeSymbol {
    let valences = g.valences();
    let triangles = g.triangles();
    let mut components = Vec::new();
    for comp in g.components() {
        let vals: Vec<usize> = comp.iter().map(|v| valences[v]).collect();
        let max_val = vals.iter().copied().max().unwrap_or(0);
        let mut valence_counts = vec![0u32; max_val];
        for v in &vals {
            valence_counts[v - 1] += 1;
        }
        let edges = (vals.iter().sum::<usize>() / 2) as u32;
        let tri = triangles.iter().filter(|t| comp.binary_search(&t.0).is_ok()).count() as u32;
        components.push(SymbolComponent { valence_counts, edges, triangles: tri });
    }
    TypeSymbol::new(components)
}

/// Parses the textual symbol grammar; positions in errors are 1-based.
pub fn parse_type_symbol(input: &str) -> Result<TypeSymbol> {
    let mut p = Parser { bytes: input.as_bytes(), pos: 0 };
    let mut components = Vec::new();
    while !p.at_end() {
        let start = p.pos;
        p.expect(b'(')?;
        let mut valence_counts = vec![p.number("valence count")?];
        while p.peek() == Some(b',') {
            p.pos += 1;
            valence_counts.push(p.number("valence count")?);
        }
        p.expect(b'|')?;
        let edges = p.number("edge count")?;
        p.expect(b',')?;
        let triangles = p.number("triangle count")?;
        p.expect(b')')?;
        let mult = if p.peek() == Some(b'^') {
            p.pos += 1;
            let at = p.pos;
            let m = p.number("multiplicity")?;
            if m == 0 {
                return Err(p.error_at(at, "multiplicity must be at least 1").into());
            }
            m
        } else {
            1
        };
        while valence_counts.last() == Some(&0) {
            valence_counts.pop();
        }
        let comp = SymbolComponent { valence_counts, edges, triangles };
        validate_component(&comp, &p, start)?;
        for _ in 0..mult {
            components.push(comp.clone());
        }
    }
    Ok(TypeSymbol::new(components))
}

fn validate_component(comp: &SymbolComponent, p: &Parser<'_>, start: usize) -> Result<()> {
    let fail = |msg: String| -> crate::error::Error { p.error_at(start, msg).into() };
    if comp.edges == 0 {
        return Err(fail("component must have at least one edge".into()));
    }
    if comp.valence_counts.is_empty() {
        return Err(fail("component must have at least one vertex".into()));
    }
    let degree_sum: u64 =
        comp.valence_counts.iter().enumerate().map(|(k, &n)| (k as u64 + 1) * n as u64).sum();
    if degree_sum != 2 * comp.edges as u64 {
        return Err(fail(format!(
            "valences sum to {degree_sum} but {} edges require {}",
            comp.edges,
            2 * comp.edges
        )));
    }
    let v = comp.vertex_count() as u64;
    if (comp.edges as u64) > v * (v - 1) / 2 {
        return Err(fail(format!("{} edges cannot fit on {v} vertices", comp.edges)));
    }
    if (comp.triangles as u64) > v * v.saturating_sub(1) * v.saturating_sub(2) / 6 {
        return Err(fail(format!("{} triangles cannot fit on {v} vertices", comp.triangles)));
    }
    if (comp.edges as u64) < v - 1 {
        return Err(fail(format!("{} edges cannot connect {v} vertices", comp.edges)));
    }
    Ok(())
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        // Symbols are single-line; report the byte offset as the column.
        ParseError::new(1, pos + 1, message)
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.peek() {
            Some(found) if found == b => {
                self.pos += 1;
                Ok(())
            }
            Some(found) => Err(self
                .error_at(self.pos, format!("expected '{}', found '{}'", b as char, found as char))
                .into()),
            None => {
                Err(self.error_at(self.pos, format!("expected '{}', found end", b as char)).into())
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error_at(start, format!("expected {what}")).into());
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| self.error_at(start, format!("{what} out of range")).into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn graph(m: u32, pairs: &[(u32, u32)]) -> ArrangementGraph {
        ArrangementGraph::new(m, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn reads_symbols_off_graphs() {
        assert_eq!(type_symbol(&graph(3, &[])).to_string(), "");
        assert_eq!(type_symbol(&graph(3, &[(1, 2)])).to_string(), "(2|1,0)");
        assert_eq!(type_symbol(&graph(4, &[(1, 2), (1, 3), (2, 3)])).to_string(), "(0,3|3,1)");
        assert_eq!(type_symbol(&graph(4, &[(4, 1), (4, 2), (4, 3)])).to_string(), "(3,0,1|3,0)");
        let k4 = graph(5, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(type_symbol(&k4).to_string(), "(0,0,4|6,4)");
        let spider = graph(5, &[(1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(type_symbol(&spider).to_string(), "(3,1,1|4,0)");
    }

    #[test]
    fn groups_repeated_components() {
        let g = graph(10, &[(1, 2), (2, 3), (4, 5), (5, 6), (7, 8), (7, 9), (8, 9), (9, 10)]);
        assert_eq!(type_symbol(&g).to_string(), "(2,1|2,0)^2(1,2,1|4,1)");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["", "(2|1,0)", "(2,1|2,0)^2(1,2,1|4,1)", "(0,0,4|6,4)", "(3,1,1|4,0)"] {
            let sym = parse_type_symbol(s).unwrap();
            assert_eq!(sym.to_string(), s);
            assert_eq!(parse_type_symbol(&sym.to_string()).unwrap(), sym);
        }
    }

    #[test]
    fn parse_normalizes_order_and_trailing_zeros() {
        let sym = parse_type_symbol("(1,2,1|4,1)(2,1,0|2,0)(2,1|2,0)").unwrap();
        assert_eq!(sym.to_string(), "(2,1|2,0)^2(1,2,1|4,1)");
        assert_eq!(sym.vertex_count(), 10);
        assert_eq!(sym.edge_count(), 8);
        assert_eq!(sym.triangle_count(), 1);
    }

    #[test]
    fn parse_rejects_bad_syntax() {
        let err = |s: &str| match parse_type_symbol(s) {
            Err(Error::Parse(e)) => e,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(err("x").column, 1);
        assert_eq!(err("(2|1,0").column, 7);
        assert_eq!(err("(2|1)").column, 5);
        assert_eq!(err("(|1,0)").column, 2);
        assert_eq!(err("(2|1,0)^0").column, 9);
        assert_eq!(err("(2|1,0) ").column, 8);
    }

    #[test]
    fn parse_rejects_impossible_components() {
        // Handshake violation: valences sum to 4, but 3 edges need 6.
        assert!(parse_type_symbol("(2,1|3,0)").is_err());
        // Too many edges for two vertices.
        assert!(parse_type_symbol("(0,2|2,0)").is_err());
        // A triangle needs three vertices.
        assert!(parse_type_symbol("(2|1,1)").is_err());
        // Disconnected: 4 vertices of valence 1 cannot form one component.
        assert!(parse_type_symbol("(4|2,0)").is_err());
        // No edges at all.
        assert!(parse_type_symbol("(0|0,0)").is_err());
    }
}
