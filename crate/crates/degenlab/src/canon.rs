//! Canonical labelings of arrangement graphs.
//!
//! Two line arrangements behave identically as double-curve data exactly when
//! their graphs are isomorphic, so every classification routine here keys on a
//! label-independent certificate. The certificate is the edge list of a
//! canonical relabeling, chosen so that high-valence vertices come first and
//! the edge list is lexicographically least among the orderings considered.

use std::collections::BTreeMap;

use crate::error::{Error, Result, CANON_VERTEX_BOUND};
use crate::graph::ArrangementGraph;

/// A label-independent fingerprint of Γ(D).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalForm {
    /// Edge list of the canonical relabeling, e.g. `"1-2,1-3,2-4"`; empty for D = ∅.
    pub certificate: String,
    /// Order of the automorphism group of the abstract graph.
    pub automorphism_count: u64,
}

/// Computes the canonical certificate and automorphism count of Γ(D).
///
/// Isolated planes never contribute, so the result is independent of m and can
/// be compared across arrangements with different plane counts. Components are
/// canonicalized separately (exact search, bounded by [`CANON_VERTEX_BOUND`]
/// vertices each), sorted largest-first, and renumbered consecutively.
pub fn canonical_form(g: &ArrangementGraph) -> Result<CanonicalForm> {
    let comps = g.components();
    for comp in &comps {
        if comp.len() > CANON_VERTEX_BOUND {
            return Err(Error::TooLarge {
                what: "connected component vertices",
                value: comp.len(),
                bound: CANON_VERTEX_BOUND,
            });
        }
    }
    let mut parts: Vec<(usize, u128, u64)> = comps.iter().map(|c| canon_component(g, c)).collect();
    parts.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));

    let mut automorphism_count: u64 = 1;
    let mut pieces: Vec<String> = Vec::new();
    let mut offset = 0usize;
    let mut run = 1u64;
    for (idx, &(n, bits, count)) in parts.iter().enumerate() {
        automorphism_count = mul_aut(automorphism_count, count)?;
        if idx > 0 && parts[idx - 1].0 == n && parts[idx - 1].1 == bits {
            // Identical components may be swapped wholesale; a run of k of
            // them multiplies the count by k! one factor at a time.
            run += 1;
            automorphism_count = mul_aut(automorphism_count, run)?;
        } else {
            run = 1;
        }
        for (p, q) in bits_to_edges(n, bits) {
            pieces.push(format!("{}-{}", offset + p + 1, offset + q + 1));
        }
        offset += n;
    }
    Ok(CanonicalForm { certificate: pieces.join(","), automorphism_count })
}

/// Rebuilds a graph from a certificate string at a given plane count.
pub fn graph_from_certificate(cert: &str, m: u32) -> Result<ArrangementGraph> {
    if cert.is_empty() {
        return ArrangementGraph::empty(m);
    }
    let mut pairs = Vec::new();
    let mut offset = 0usize;
    for part in cert.split(',') {
        let bad = || {
            crate::error::ParseError::new(1, offset + 1, format!("bad certificate edge {part:?}"))
        };
        let (a, b) = part.split_once('-').ok_or_else(bad)?;
        let a: u32 = a.parse().map_err(|_| bad())?;
        let b: u32 = b.parse().map_err(|_| bad())?;
        pairs.push((a, b));
        offset += part.len() + 1;
    }
    ArrangementGraph::new(m, pairs)
}

fn mul_aut(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::TooLarge {
        what: "automorphism count log2",
        value: 64,
        bound: 63,
    })
}

/// Decodes an upper-triangle bit certificate back into position pairs, in
/// lexicographic order.
fn bits_to_edges(n: usize, bits: u128) -> Vec<(usize, usize)> {
    let total = n * (n - 1) / 2;
    let mut out = Vec::new();
    let mut r = 0;
    for p in 0..n {
        for q in (p + 1)..n {
            if bits >> (total - 1 - r) & 1 == 1 {
                out.push((p, q));
            }
            r += 1;
        }
    }
    out
}

/// Exact canonicalization of one component: returns (vertex count, best
/// adjacency bitstring, automorphism count).
fn canon_component(g: &ArrangementGraph, comp: &[u32]) -> (usize, u128, u64) {
    let n = comp.len();
    let index: BTreeMap<u32, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = vec![0u16; n];
    for e in g.edges() {
        if let (Some(&a), Some(&b)) = (index.get(&e.i()), index.get(&e.j())) {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let tri: Vec<u32> = (0..n)
        .map(|v| {
            let mut t = 0;
            let mut a = adj[v];
            while a != 0 {
                let u = a.trailing_zeros() as usize;
                a &= a - 1;
                t += (adj[u] & adj[v]).count_ones();
            }
            t / 2
        })
        .collect();

    // Initial cells: vertices grouped by (valence, triangle membership),
    // highest first, so hubs land at the front of the canonical order.
    let mut by_key: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_key.entry((deg[v], tri[v])).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = by_key.into_values().rev().collect();

    let mut canon = Canon { n, adj: &adj, best: 0, count: 0 };
    canon.search(cells);
    (n, canon.best, canon.count)
}

/// Individualization-refinement search over orderings compatible with an
/// equitable partition. Fully symmetric cells are never expanded: their
/// factorial contribution is credited directly, which keeps stars and
/// complete graphs cheap.
struct Canon<'a> {
    n: usize,
    adj: &'a [u16],
    best: u128,
    count: u64,
}

impl Canon<'_> {
    /// Splits cells by neighbor-cell count signatures until stable. Sub-cells
    /// are ordered by descending signature so the outcome depends only on the
    /// isomorphism class.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let mut cell_of = vec![0usize; self.n];
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let mut sig = vec![0u8; cells.len()];
                    let mut a = self.adj[v];
                    while a != 0 {
                        let u = a.trailing_zeros() as usize;
                        a &= a - 1;
                        sig[cell_of[u]] += 1;
                    }
                    groups.entry(sig).or_default().push(v);
                }
                if groups.len() > 1 {
                    split = true;
                }
                for members in groups.into_values().rev() {
                    next.push(members);
                }
            }
            *cells = next;
            if !split {
                return;
            }
        }
    }

    /// Whether every permutation within the cell is an automorphism: all
    /// members share one outside neighborhood and the cell induces a complete
    /// or an empty graph.
    fn uniform(&self, cell: &[usize]) -> bool {
        if cell.len() <= 1 {
            return true;
        }
        let mask: u16 = cell.iter().fold(0, |m, &v| m | 1 << v);
        let first = cell[0];
        let out0 = self.adj[first] & !mask;
        let complete = self.adj[first] & mask == mask & !(1u16 << first);
        let empty = self.adj[first] & mask == 0;
        if !complete && !empty {
            return false;
        }
        cell.iter().all(|&v| {
            let inside_ok = if complete {
                self.adj[v] & mask == mask & !(1u16 << v)
            } else {
                self.adj[v] & mask == 0
            };
            inside_ok && self.adj[v] & !mask == out0
        })
    }

    fn search(&mut self, mut cells: Vec<Vec<usize>>) {
        self.refine(&mut cells);
        if let Some(t) = cells.iter().position(|c| c.len() > 1 && !self.uniform(c)) {
            let cell = cells[t].clone();
            for &v in &cell {
                let mut child = Vec::with_capacity(cells.len() + 1);
                child.extend_from_slice(&cells[..t]);
                child.push(vec![v]);
                child.push(cell.iter().copied().filter(|&u| u != v).collect());
                child.extend_from_slice(&cells[t + 1..]);
                self.search(child);
            }
        } else {
            self.emit(&cells);
        }
    }

    fn emit(&mut self, cells: &[Vec<usize>]) {
        let ordering: Vec<usize> = cells.iter().flatten().copied().collect();
        let bits = self.bitstring(&ordering);
        let mut mult: u64 = 1;
        for cell in cells {
            for k in 2..=cell.len() as u64 {
                mult *= k;
            }
        }
        if bits > self.best {
            self.best = bits;
            self.count = mult;
        } else if bits == self.best {
            self.count += mult;
        }
    }

    /// Upper-triangle adjacency bits of the relabeled graph; the pair (0,1)
    /// is the most significant bit, so a larger value means a
    /// lexicographically earlier edge list.
    fn bitstring(&self, ordering: &[usize]) -> u128 {
        let total = self.n * (self.n - 1) / 2;
        let mut bits: u128 = 0;
        let mut r = 0;
        for p in 0..self.n {
            for q in (p + 1)..self.n {
                if self.adj[ordering[p]] >> ordering[q] & 1 == 1 {
                    bits |= 1u128 << (total - 1 - r);
                }
                r += 1;
            }
        }
        bits
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(m: u32, pairs: &[(u32, u32)]) -> CanonicalForm {
        let g = ArrangementGraph::new(m, pairs.iter().copied()).unwrap();
        canonical_form(&g).unwrap()
    }

    #[test]
    fn small_certificates() {
        assert_eq!(
            canon(3, &[]),
            CanonicalForm { certificate: String::new(), automorphism_count: 1 }
        );
        let edge = canon(3, &[(1, 2)]);
        assert_eq!(edge.certificate, "1-2");
        assert_eq!(edge.automorphism_count, 2);
        let chain = canon(3, &[(1, 2), (2, 3)]);
        assert_eq!(chain.certificate, "1-2,1-3");
        assert_eq!(chain.automorphism_count, 2);
        let triangle = canon(3, &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(triangle.certificate, "1-2,1-3,2-3");
        assert_eq!(triangle.automorphism_count, 6);
    }

    #[test]
    fn four_vertex_certificates() {
        let star = canon(4, &[(2, 4), (1, 4), (3, 4)]);
        assert_eq!(star.certificate, "1-2,1-3,1-4");
        assert_eq!(star.automorphism_count, 6);
        let path = canon(4, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(path.certificate, "1-2,1-3,2-4");
        assert_eq!(path.automorphism_count, 2);
        let paw = canon(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]);
        assert_eq!(paw.certificate, "1-2,1-3,1-4,2-3");
        assert_eq!(paw.automorphism_count, 2);
        let cycle = canon(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert_eq!(cycle.certificate, "1-2,1-3,2-4,3-4");
        assert_eq!(cycle.automorphism_count, 8);
        let k4 = canon(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(k4.certificate, "1-2,1-3,1-4,2-3,2-4,3-4");
        assert_eq!(k4.automorphism_count, 24);
    }

    #[test]
    fn spider_certificate() {
        let spider = canon(5, &[(1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(spider.certificate, "1-2,1-3,1-4,2-5");
        assert_eq!(spider.automorphism_count, 2);
    }

    #[test]
    fn disjoint_components_sort_and_multiply() {
        let two_chains = canon(6, &[(1, 2), (2, 3), (4, 5), (5, 6)]);
        assert_eq!(two_chains.certificate, "1-2,1-3,4-5,4-6");
        assert_eq!(two_chains.automorphism_count, 8);
        let chain_and_edge = canon(6, &[(1, 2), (2, 3), (3, 4), (5, 6)]);
        assert_eq!(chain_and_edge.certificate, "1-2,1-3,2-4,5-6");
        assert_eq!(chain_and_edge.automorphism_count, 4);
        let three_edges = canon(6, &[(1, 2), (3, 4), (5, 6)]);
        assert_eq!(three_edges.certificate, "1-2,3-4,5-6");
        assert_eq!(three_edges.automorphism_count, 48);
    }

    #[test]
    fn certificates_are_label_independent() {
        let cases: [&[(u32, u32)]; 4] = [
            &[(1, 2), (2, 3), (3, 4)],
            &[(1, 3), (2, 3), (3, 4), (4, 5)],
            &[(1, 2), (2, 3), (3, 4), (1, 4)],
            &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)],
        ];
        // A fixed relabeling of 1..=5 and its square.
        let perms: [[u32; 5]; 2] = [[3, 5, 1, 4, 2], [1, 2, 3, 5, 4]];
        for pairs in cases {
            let base = canon(5, pairs);
            for perm in &perms {
                let mapped: Vec<(u32, u32)> = pairs
                    .iter()
                    .map(|&(a, b)| (perm[a as usize - 1], perm[b as usize - 1]))
                    .collect();
                assert_eq!(canon(5, &mapped), base, "relabeling changed the certificate");
            }
        }
    }

    #[test]
    fn petersen_graph_has_120_automorphisms() {
        let petersen = canon(
            10,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 10),
                (6, 8),
                (8, 10),
                (10, 7),
                (7, 9),
                (9, 6),
            ],
        );
        assert_eq!(petersen.automorphism_count, 120);
    }

    #[test]
    fn refuses_components_beyond_the_bound() {
        // A 13-vertex path in one component.
        let pairs: Vec<(u32, u32)> = (1..13).map(|i| (i, i + 1)).collect();
        let g = ArrangementGraph::new(20, pairs).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::TooLarge { value: 13, .. })));
    }
}
