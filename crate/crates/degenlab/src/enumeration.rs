//! Exhaustive enumeration of arrangements and graph classes.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::canon::{canonical_form, graph_from_certificate, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::ArrangementGraph;
use crate::invariants::{pair_type, PairType};
use crate::symbol::{type_symbol, TypeSymbol};

/// Exhaustive enumeration runs over all 2^C(m,2) subsets, so m stays small.
pub const MAX_ENUMERATION_PLANES: u32 = 6;

/// The graph catalog grows explosively with the edge count.
pub const MAX_CATALOG_EDGES: usize = 8;

/// One isomorphism class of arrangements at a fixed plane count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArrangementClass {
    /// Representative with canonical labels.
    pub graph: ArrangementGraph,
    pub canonical: CanonicalForm,
    /// Number of labeled subsets of the double curve in this class.
    pub labeled_count: u64,
    pub irreducible: bool,
}

/// One isomorphism class of graphs, independent of a plane count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphClass {
    /// Representative with canonical labels, carried by the smallest legal
    /// plane count.
    pub graph: ArrangementGraph,
    pub canonical: CanonicalForm,
}

/// Several classes sharing one combinatorial pair type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TypeCollision {
    pub pair_type: PairType,
    pub classes: Vec<GraphClass>,
}

/// All isomorphism classes of line arrangements on m planes, the empty one
/// included, sorted by edge count and certificate.
pub fn enumerate_arrangements(m: u32) -> Result<Vec<ArrangementClass>> {
    if !(3..=MAX_ENUMERATION_PLANES).contains(&m) {
        return Err(Error::TooLarge {
            what: "plane count for exhaustive enumeration",
            value: m as usize,
            bound: MAX_ENUMERATION_PLANES as usize,
        });
    }
    let all_edges: Vec<(u32, u32)> =
        (1..=m).flat_map(|i| ((i + 1)..=m).map(move |j| (i, j))).collect();
    let t = all_edges.len();

    let counts: HashMap<String, u64> = (0u32..1 << t)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<String, u64>, mask| {
            let pairs =
                all_edges.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p);
            let g = ArrangementGraph::new(m, pairs).expect("subset of the double curve");
            let cert =
                canonical_form(&g).expect("components fit the canonicalization bound").certificate;
            *acc.entry(cert).or_insert(0) += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (cert, n) in b {
                *a.entry(cert).or_insert(0) += n;
            }
            a
        });

    let mut classes = Vec::with_capacity(counts.len());
    for (cert, labeled_count) in counts {
        let graph = graph_from_certificate(&cert, m)?;
        let canonical = canonical_form(&graph)?;
        let irreducible = graph.is_irreducible_pair();
        classes.push(ArrangementClass { graph, canonical, labeled_count, irreducible });
    }
    classes.sort_by(|a, b| {
        (a.graph.edge_count(), &a.canonical.certificate)
            .cmp(&(b.graph.edge_count(), &b.canonical.certificate))
    });
    Ok(classes)
}

/// All isomorphism classes of nonempty graphs with at most `max_edges` edges
/// and no isolated vertices, sorted by edge count and certificate.
///
/// Classes are built by breadth-first edge addition: every (k+1)-edge graph
/// arises from a k-edge graph by inserting one edge, possibly on one or two
/// fresh vertices.
pub fn enumerate_graphs_up_to(max_edges: usize) -> Result<Vec<GraphClass>> {
    if max_edges > MAX_CATALOG_EDGES {
        return Err(Error::TooLarge {
            what: "edge bound for the graph catalog",
            value: max_edges,
            bound: MAX_CATALOG_EDGES,
        });
    }
    let mut out: Vec<GraphClass> = Vec::new();
    if max_edges == 0 {
        return Ok(out);
    }
    let seed = graph_from_certificate("1-2", 3)?;
    let mut level = vec![seed];
    for _ in 1..=max_edges {
        for g in &level {
            out.push(GraphClass { canonical: canonical_form(g)?, graph: g.clone() });
        }
        let mut next: HashMap<String, ArrangementGraph> = HashMap::new();
        for g in &level {
            let v = g.vertex_count() as u32;
            let mut candidates: Vec<(u32, u32)> = Vec::new();
            for i in 1..=v {
                for j in (i + 1)..=v {
                    if !g.contains(i, j) {
                        candidates.push((i, j));
                    }
                }
            }
            for i in 1..=v {
                candidates.push((i, v + 1));
            }
            candidates.push((v + 1, v + 2));
            for (a, b) in candidates {
                let mut pairs: Vec<(u32, u32)> = g.edges().map(|e| (e.i(), e.j())).collect();
                pairs.push((a, b));
                let h = ArrangementGraph::new((v + 2).max(3), pairs)
                    .expect("extending a representative stays valid");
                let cert = canonical_form(&h)?.certificate;
                if !next.contains_key(&cert) {
                    let rep_m = (h.vertex_count() as u32).max(3);
                    next.insert(cert.clone(), graph_from_certificate(&cert, rep_m)?);
                }
            }
        }
        level = next.into_values().collect();
    }
    out.sort_by(|a, b| {
        (a.graph.edge_count(), &a.canonical.certificate)
            .cmp(&(b.graph.edge_count(), &b.canonical.certificate))
    });
    Ok(out)
}

/// The arrangement drawn in the large worked example: two 12-valent hubs
/// carrying eleven leaves each, joined by a path with three pendant edges.
pub fn build_fig4_graph() -> ArrangementGraph {
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for leaf in 1..=11 {
        pairs.push((leaf, 12));
    }
    pairs.extend([(12, 13), (13, 14), (14, 15), (15, 16), (16, 17)]);
    pairs.extend([(13, 29), (14, 30), (15, 31)]);
    for leaf in 18..=28 {
        pairs.push((leaf, 17));
    }
    ArrangementGraph::new(31, pairs).expect("the fixed example graph is valid")
}

/// Searches for an irreducible pair with the given pair type.
///
/// Types with at most [`MAX_CATALOG_EDGES`] lines are settled exhaustively
/// (a graph with d̄ edges and no isolated vertices has at most 2d̄ vertices,
/// so the catalog is complete); beyond that only the worked example's type is
/// recognized, and everything else reports the search space as out of reach.
pub fn exists_pair_of_type(target: &PairType) -> Result<Option<ArrangementGraph>> {
    if target.m < 3 || target.m > crate::error::MAX_PLANES {
        return Err(Error::PlaneCountOutOfRange { m: target.m as u64 });
    }
    if target.dbar < 0 {
        return Err(Error::NegativeCount { name: "dbar", value: target.dbar });
    }
    if target.tau2 < 0 {
        return Err(Error::NegativeCount { name: "tau2", value: target.tau2 });
    }
    if target.tau3 < 0 {
        return Err(Error::NegativeCount { name: "tau3", value: target.tau3 });
    }
    let gbar = target.tau2 - target.dbar + target.k;
    if gbar < 0 {
        return Err(Error::NegativeGenus { genus: gbar });
    }
    if target.dbar == 0 {
        return Ok(if target.k == 0 && target.tau2 == 0 && target.tau3 == 0 {
            Some(ArrangementGraph::empty(target.m)?)
        } else {
            None
        });
    }
    if target.k < 1 || target.k > target.dbar {
        return Ok(None);
    }
    if target.dbar as usize <= MAX_CATALOG_EDGES {
        for class in enumerate_graphs_up_to(target.dbar as usize)? {
            if class.graph.edge_count() as i128 != target.dbar
                || class.graph.vertex_count() > target.m as usize
            {
                continue;
            }
            let witness = class.graph.with_m(target.m)?;
            if pair_type(&witness) == *target && witness.is_irreducible_pair() {
                return Ok(Some(witness));
            }
        }
        return Ok(None);
    }
    let fig4 = build_fig4_graph();
    if fig4.m() == target.m && pair_type(&fig4) == *target && fig4.is_irreducible_pair() {
        return Ok(Some(fig4));
    }
    Err(Error::SearchSpaceTooLarge { dbar: target.dbar })
}

/// Resolves a type symbol to the graph class it names, embedded on m planes.
///
/// A symbol records valences, edges and triangles per component, which does
/// not always pin down one isomorphism class; ambiguous symbols are rejected
/// with the list of matching certificates.
pub fn realize_symbol(sym: &TypeSymbol, m: u32) -> Result<ArrangementGraph> {
    if !(3..=crate::error::MAX_PLANES).contains(&m) {
        return Err(Error::PlaneCountOutOfRange { m: m as u64 });
    }
    if sym.is_empty() {
        return ArrangementGraph::empty(m);
    }
    let edges = sym.edge_count() as usize;
    if edges > MAX_CATALOG_EDGES {
        return Err(Error::SearchSpaceTooLarge { dbar: edges as i128 });
    }
    let mut matches: Vec<ArrangementGraph> = Vec::new();
    let mut candidates: Vec<String> = Vec::new();
    for class in enumerate_graphs_up_to(edges)? {
        if class.graph.edge_count() != edges
            || class.graph.vertex_count() > m as usize
            || type_symbol(&class.graph) != *sym
        {
            continue;
        }
        candidates.push(class.canonical.certificate.clone());
        matches.push(class.graph);
    }
    match matches.len() {
        0 => Err(Error::UnrealizableSymbol),
        1 => matches.remove(0).with_m(m),
        _ => Err(Error::AmbiguousSymbol { candidates }),
    }
}

/// Groups the catalog classes that share a pair type at the given plane
/// count; only classes whose vertices fit on m planes take part.
pub fn find_type_collisions(m: u32, max_edges: usize) -> Result<Vec<TypeCollision>> {
    if !(3..=crate::error::MAX_PLANES).contains(&m) {
        return Err(Error::PlaneCountOutOfRange { m: m as u64 });
    }
    let mut groups: HashMap<PairType, Vec<GraphClass>> = HashMap::new();
    for class in enumerate_graphs_up_to(max_edges)? {
        if class.graph.vertex_count() > m as usize {
            continue;
        }
        let pt = pair_type(&class.graph.with_m(m)?);
        groups.entry(pt).or_default().push(class);
    }
    let mut collisions: Vec<TypeCollision> = groups
        .into_iter()
        .filter(|(_, classes)| classes.len() > 1)
        .map(|(pair_type, mut classes)| {
            classes.sort_by(|a, b| a.canonical.certificate.cmp(&b.canonical.certificate));
            TypeCollision { pair_type, classes }
        })
        .collect();
    collisions.sort_by_key(|c| c.pair_type);
    Ok(collisions)
}
