//! Line arrangements D ⊂ L as simple graphs on plane indices.
//!
//! An arrangement of m planes in general position has singular locus L made of
//! C(m,2) double lines L_{i,j} and C(m,3) triple points. A sub-arrangement D is
//! recorded as the graph Γ(D) on vertices 1..=m whose edges are the chosen
//! lines; triangles of Γ(D) are exactly the triple points lying triply on D.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result, MAX_PLANES};

/// An unordered pair of distinct plane indices, stored with `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    i: u32,
    j: u32,
}

impl Edge {
    /// Normalizes the endpoint order; rejects loops.
    pub fn new(a: u32, b: u32) -> Result<Edge> {
        if a == b {
            return Err(Error::LoopEdge { v: a });
        }
        Ok(Edge { i: a.min(b), j: a.max(b) })
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// The endpoint other than `v`, if `v` is an endpoint.
    pub fn other(&self, v: u32) -> Option<u32> {
        if v == self.i {
            Some(self.j)
        } else if v == self.j {
            Some(self.i)
        } else {
            None
        }
    }

    pub fn touches(&self, v: u32) -> bool {
        self.i == v || self.j == v
    }

    /// Whether the two edges share exactly one endpoint.
    pub fn adjacent(&self, other: &Edge) -> bool {
        *self != *other && (other.touches(self.i) || other.touches(self.j))
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

/// The graph Γ(D) of a line arrangement D inside the double curve of m planes.
///
/// The vertex set is the set of edge endpoints; isolated plane indices are
/// never stored (they belong to the complement side).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArrangementGraph {
    m: u32,
    edges: BTreeSet<Edge>,
}

impl ArrangementGraph {
    /// Validates raw index pairs against the plane count and builds the graph.
    pub fn new<I>(m: u32, pairs: I) -> Result<ArrangementGraph>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        if !(3..=MAX_PLANES).contains(&m) {
            return Err(Error::PlaneCountOutOfRange { m: m as u64 });
        }
        let mut edges = BTreeSet::new();
        for (a, b) in pairs {
            for v in [a, b] {
                if v < 1 || v > m {
                    return Err(Error::IndexOutOfRange { index: v as u64, m });
                }
            }
            let e = Edge::new(a, b)?;
            if !edges.insert(e) {
                return Err(Error::DuplicateEdge { i: e.i, j: e.j });
            }
        }
        let g = ArrangementGraph { m, edges };
        let vertices = g.vertex_count();
        if vertices > m as usize {
            return Err(Error::TooManyVertices { vertices, m });
        }
        Ok(g)
    }

    /// The empty arrangement D = ∅ (the fully smoothed case).
    pub fn empty(m: u32) -> Result<ArrangementGraph> {
        ArrangementGraph::new(m, [])
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// d̄ — the number of lines of D.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// d — the number of lines of the complement R = L ∖ D.
    pub fn complement_edge_count(&self) -> i128 {
        let m = self.m as i128;
        m * (m - 1) / 2 - self.edges.len() as i128
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges.iter().copied().collect()
    }

    pub fn contains(&self, a: u32, b: u32) -> bool {
        Edge::new(a, b).map(|e| self.edges.contains(&e)).unwrap_or(false)
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Endpoints of the stored edges, sorted.
    pub fn vertices(&self) -> BTreeSet<u32> {
        let mut vs = BTreeSet::new();
        for e in &self.edges {
            vs.insert(e.i);
            vs.insert(e.j);
        }
        vs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    /// Valence of each vertex that carries at least one edge.
    pub fn valences(&self) -> BTreeMap<u32, usize> {
        let mut val = BTreeMap::new();
        for e in &self.edges {
            *val.entry(e.i).or_insert(0) += 1;
            *val.entry(e.j).or_insert(0) += 1;
        }
        val
    }

    pub fn neighbors(&self, v: u32) -> BTreeSet<u32> {
        self.edges.iter().filter_map(|e| e.other(v)).collect()
    }

    /// Γ(R): the complement of Γ(D) inside the complete graph on 1..=m.
    ///
    /// The result keeps only vertices that carry complement edges; use
    /// [`augmented_complement_components`] for the connectivity question, which
    /// never materializes the complement.
    pub fn complement(&self) -> ArrangementGraph {
        let mut edges = BTreeSet::new();
        for i in 1..=self.m {
            for j in (i + 1)..=self.m {
                let e = Edge { i, j };
                if !self.edges.contains(&e) {
                    edges.insert(e);
                }
            }
        }
        ArrangementGraph { m: self.m, edges }
    }

    /// Number of connected components of the augmented complement Γ̄(R):
    /// the complement graph with all m vertices retained.
    ///
    /// Runs a BFS over the complement without materializing it, so it is cheap
    /// even when m is large and D is small.
    pub fn augmented_complement_components(&self) -> usize {
        let m = self.m;
        let mut unvisited: BTreeSet<u32> = (1..=m).collect();
        let mut components = 0;
        while let Some(&start) = unvisited.iter().next() {
            components += 1;
            unvisited.remove(&start);
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                // Complement-neighbors of v = unvisited vertices not joined to
                // v in D.
                let blocked = self.neighbors(v);
                let reach: Vec<u32> =
                    unvisited.iter().copied().filter(|u| !blocked.contains(u)).collect();
                for u in reach {
                    unvisited.remove(&u);
                    queue.push(u);
                }
            }
        }
        components
    }

    /// Whether any smoothing of the planes outside D is an irreducible
    /// surface: exactly when the augmented complement is connected.
    pub fn is_irreducible_pair(&self) -> bool {
        self.augmented_complement_components() == 1
    }

    /// All vertex triples pairwise joined by edges of D; their count is τ₃.
    pub fn triangles(&self) -> Vec<(u32, u32, u32)> {
        let vs: Vec<u32> = self.vertices().into_iter().collect();
        let mut out = Vec::new();
        for (a, &i) in vs.iter().enumerate() {
            for (b, &j) in vs.iter().enumerate().skip(a + 1) {
                if !self.contains(i, j) {
                    continue;
                }
                for &k in vs.iter().skip(b + 1) {
                    if self.contains(i, k) && self.contains(j, k) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// Number of triangles of D containing the vertex `v`.
    pub fn triangle_count_at(&self, v: u32) -> usize {
        self.triangles().iter().filter(|t| t.0 == v || t.1 == v || t.2 == v).count()
    }

    /// Partition of the vertex set into connected components (of Γ(D) itself,
    /// not of the complement), each sorted; components ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut unvisited = self.vertices();
        let mut comps = Vec::new();
        while let Some(&start) = unvisited.iter().next() {
            unvisited.remove(&start);
            let mut comp = vec![start];
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for u in self.neighbors(v) {
                    if unvisited.remove(&u) {
                        comp.push(u);
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The same edges re-read against a different plane count.
    pub fn with_m(&self, m: u32) -> Result<ArrangementGraph> {
        ArrangementGraph::new(m, self.edges.iter().map(|e| (e.i, e.j)))
    }
}
