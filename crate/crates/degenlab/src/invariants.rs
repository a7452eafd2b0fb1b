//! Numerical invariants of a pair (m, D).
//!
//! Throughout, m planes in general position carry the double curve L with
//! C(m,2) lines and C(m,3) triple points. For a line arrangement D ⊆ L with
//! d̄ lines (and complement R with d = C(m,2) − d̄ lines), τ_i counts the
//! triple points lying on exactly i lines of D, and ν_i counts the pairs of
//! disjoint lines of L with exactly i members in D. Everything else — the
//! Chern numbers of a smoothing, the branch curve of a generic projection and
//! its Plücker dual, and the splitting of D into limit-curve classes — is a
//! polynomial in m, d̄, τ₂, τ₃ and the class structure.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{ArrangementGraph, Edge};

pub(crate) fn choose2(x: i128) -> i128 {
    x * (x - 1) / 2
}

pub(crate) fn choose3(x: i128) -> i128 {
    x * (x - 1) * (x - 2) / 6
}

/// Triple points of L classified by how many of their three lines lie in D.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TauProfile {
    pub tau0: i128,
    pub tau1: i128,
    pub tau2: i128,
    pub tau3: i128,
    /// Always C(m,3).
    pub tau_total: i128,
}

impl TauProfile {
    pub fn as_array(&self) -> [i128; 4] {
        [self.tau0, self.tau1, self.tau2, self.tau3]
    }

    /// Rejects profiles with a negative entry, which no arrangement realizes.
    pub fn validate(&self) -> Result<()> {
        for (name, value) in
            [("tau0", self.tau0), ("tau1", self.tau1), ("tau2", self.tau2), ("tau3", self.tau3)]
        {
            if value < 0 {
                return Err(Error::NegativeCount { name, value });
            }
        }
        Ok(())
    }
}

/// Pairs of disjoint lines of L classified by how many members lie in D.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NuProfile {
    pub nu0: i128,
    pub nu1: i128,
    pub nu2: i128,
    /// Always m(m−1)(m−2)(m−3)/8.
    pub nu_total: i128,
}

impl NuProfile {
    pub fn as_array(&self) -> [i128; 3] {
        [self.nu0, self.nu1, self.nu2]
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [("nu0", self.nu0), ("nu1", self.nu1), ("nu2", self.nu2)] {
            if value < 0 {
                return Err(Error::NegativeCount { name, value });
            }
        }
        Ok(())
    }
}

/// The combinatorial type (m, d̄, k, τ₂, τ₃) of a pair; k is the number of
/// classes of the limit double curve.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PairType {
    pub m: u32,
    pub dbar: i128,
    pub k: i128,
    pub tau2: i128,
    pub tau3: i128,
}

impl PairType {
    pub fn as_array(&self) -> [i128; 5] {
        [self.m as i128, self.dbar, self.k, self.tau2, self.tau3]
    }
}

/// The surface-side form (m, d̄, k, ḡ, t) of the same data, with
/// ḡ = τ₂ − d̄ + k the total genus of the limit double curve and t = τ₃.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SurfaceType {
    pub m: u32,
    pub dbar: i128,
    pub k: i128,
    pub gbar: i128,
    pub t: i128,
}

impl SurfaceType {
    pub fn as_array(&self) -> [i128; 5] {
        [self.m as i128, self.dbar, self.k, self.gbar, self.t]
    }
}

/// Chern and Hodge numbers of the smooth surfaces degenerating to the pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SurfaceInvariants {
    pub k2: i128,
    pub euler: i128,
    pub chi: i128,
    /// Number of exceptional curves ω = 2τ₁ of the degeneration.
    pub omega: i128,
}

/// Degree, genus, cusps and nodes of the branch curve of a generic projection.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ProjectionData {
    pub deg_b: i128,
    pub g: i128,
    pub c: i128,
    pub n: i128,
}

/// Plücker data of the dual of the branch curve.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DualData {
    pub deg_dual: i128,
    pub c_dual: i128,
    pub n_dual: i128,
}

/// One class of the limit double curve: a connected union of `degree` lines
/// glued along τ₂-points, of genus `genus`, with `self_nodes` extra nodes
/// coming from triple points that meet the class twice or more.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveClass {
    pub edges: Vec<Edge>,
    pub degree: i128,
    pub genus: i128,
    pub self_nodes: i128,
}

/// The splitting of D into classes of the limit double curve.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ComponentData {
    pub classes: Vec<CurveClass>,
}

/// Counts the τ-profile of a graph directly: τ₃ from triangles, τ₂ from
/// adjacent edge pairs, the rest from the incidence relations.
pub fn tau_profile(g: &ArrangementGraph) -> TauProfile {
    let m = g.m() as i128;
    let dbar = g.edge_count() as i128;
    let tau3 = g.triangles().len() as i128;
    let adjacent_pairs: i128 = g.valences().values().map(|&v| choose2(v as i128)).sum();
    let tau2 = adjacent_pairs - 3 * tau3;
    complete_tau(m, dbar, tau2, tau3)
}

/// Completes (τ₂, τ₃) to a full profile using the two incidence relations
/// τ₁ + 2τ₂ + 3τ₃ = (m−2)d̄ and Στ_i = C(m,3). Entries can be negative when
/// the input type is unrealizable; see [`TauProfile::validate`].
pub fn tau_profile_of_type(pt: &PairType) -> TauProfile {
    complete_tau(pt.m as i128, pt.dbar, pt.tau2, pt.tau3)
}

fn complete_tau(m: i128, dbar: i128, tau2: i128, tau3: i128) -> TauProfile {
    let tau1 = (m - 2) * dbar - 2 * tau2 - 3 * tau3;
    let tau0 = choose3(m) - tau1 - tau2 - tau3;
    TauProfile { tau0, tau1, tau2, tau3, tau_total: choose3(m) }
}

/// Counts the ν-profile of a graph via the τ-profile.
pub fn nu_profile(g: &ArrangementGraph) -> NuProfile {
    nu_profile_of_type(&pair_type(g))
}

/// ν-profile of a pair type; entries can be negative for unrealizable types.
pub fn nu_profile_of_type(pt: &PairType) -> NuProfile {
    let tau = tau_profile_of_type(pt);
    let m = pt.m as i128;
    let d = choose2(m) - pt.dbar;
    let nu_total = m * (m - 1) * (m - 2) * (m - 3) / 8;
    let nu2 = choose2(pt.dbar) - tau.tau2 - 3 * tau.tau3;
    let nu0 = choose2(d) - tau.tau1 - 3 * tau.tau0;
    NuProfile { nu0, nu1: nu_total - nu0 - nu2, nu2, nu_total }
}

/// Splits D into the classes of its limit double curve.
///
/// Two lines fall in one class when some chain of τ₂-points joins them: each
/// τ₂-point is a pair of edges sharing a vertex whose closing edge is absent,
/// and it glues its two lines into the same component of the limit.
pub fn double_curve_classes(g: &ArrangementGraph) -> ComponentData {
    let edges = g.edge_list();
    let n = edges.len();
    let index: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    let mut incident: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        incident.entry(e.i()).or_default().push(i);
        incident.entry(e.j()).or_default().push(i);
    }

    let mut dsu = Dsu::new(n);
    let mut glue_pairs: Vec<(usize, usize)> = Vec::new();
    for (&v, ids) in &incident {
        for (a, &ea) in ids.iter().enumerate() {
            for &eb in ids.iter().skip(a + 1) {
                let x = edges[ea].other(v).expect("incident edge");
                let y = edges[eb].other(v).expect("incident edge");
                if !g.contains(x, y) {
                    dsu.union(ea, eb);
                    glue_pairs.push((ea, eb));
                }
            }
        }
    }

    let mut by_root: BTreeMap<usize, CurveClass> = BTreeMap::new();
    for (i, &edge) in edges.iter().enumerate() {
        let root = dsu.find(i);
        by_root
            .entry(root)
            .or_insert_with(|| CurveClass { edges: Vec::new(), degree: 0, genus: 0, self_nodes: 0 })
            .edges
            .push(edge);
    }
    let mut tau2_of: BTreeMap<usize, i128> = BTreeMap::new();
    for &(ea, _) in &glue_pairs {
        *tau2_of.entry(dsu.find(ea)).or_insert(0) += 1;
    }
    for (i, j, k) in g.triangles() {
        let mut per_root: BTreeMap<usize, i128> = BTreeMap::new();
        for (a, b) in [(i, j), (i, k), (j, k)] {
            let id = index[&Edge::new(a, b).expect("triangle edge")];
            *per_root.entry(dsu.find(id)).or_insert(0) += 1;
        }
        for (root, cnt) in per_root {
            if let Some(class) = by_root.get_mut(&root) {
                class.self_nodes += choose2(cnt);
            }
        }
    }

    let mut classes: Vec<CurveClass> = by_root
        .into_iter()
        .map(|(root, mut class)| {
            class.degree = class.edges.len() as i128;
            class.genus = tau2_of.get(&root).copied().unwrap_or(0) - class.degree + 1;
            class.edges.sort();
            class
        })
        .collect();
    classes.sort_by(|a, b| b.degree.cmp(&a.degree).then(a.edges.cmp(&b.edges)));
    ComponentData { classes }
}

/// The combinatorial type (m, d̄, k, τ₂, τ₃) of a graph.
pub fn pair_type(g: &ArrangementGraph) -> PairType {
    let tau = tau_profile(g);
    let k = double_curve_classes(g).classes.len() as i128;
    PairType { m: g.m(), dbar: g.edge_count() as i128, k, tau2: tau.tau2, tau3: tau.tau3 }
}

/// Rewrites a pair type with the total limit-curve genus ḡ = τ₂ − d̄ + k.
pub fn surface_type_of(pt: &PairType) -> SurfaceType {
    SurfaceType { m: pt.m, dbar: pt.dbar, k: pt.k, gbar: pt.tau2 - pt.dbar + pt.k, t: pt.tau3 }
}

/// Inverts [`surface_type_of`]; fails when the stated genus forces τ₂ < 0.
pub fn pair_type_of(st: &SurfaceType) -> Result<PairType> {
    let tau2 = st.gbar + st.dbar - st.k;
    if tau2 < 0 {
        return Err(Error::NegativeCount { name: "tau2", value: tau2 });
    }
    Ok(PairType { m: st.m, dbar: st.dbar, k: st.k, tau2, tau3: st.t })
}

/// The surface type of a graph.
pub fn surface_type(g: &ArrangementGraph) -> SurfaceType {
    surface_type_of(&pair_type(g))
}

/// Chern and Hodge numbers of the smoothings with the given type; rejects
/// types whose τ-profile has a negative entry.
pub fn surface_invariants(pt: &PairType) -> Result<SurfaceInvariants> {
    tau_profile_of_type(pt).validate()?;
    Ok(raw_surface_invariants(pt))
}

/// The same numbers with no realizability check; used by the obstruction
/// battery, which must evaluate every criterion even on impossible types.
pub(crate) fn raw_surface_invariants(pt: &PairType) -> SurfaceInvariants {
    let tau = tau_profile_of_type(pt);
    let m = pt.m as i128;
    let dbar = pt.dbar;
    let k2 = m * (m - 4) * (m - 4) - (5 * m - 20) * dbar + 4 * pt.tau2 + 9 * pt.tau3;
    let euler = m * m * (m - 4) + 6 * m - (7 * m - 16) * dbar + 8 * pt.tau2 + 15 * pt.tau3;
    let chi = dbar + tau.tau0 - m * (m - 3) / 2;
    debug_assert_eq!(k2 + euler, 12 * chi, "Noether's formula must hold identically");
    SurfaceInvariants { k2, euler, chi, omega: 2 * tau.tau1 }
}

/// Arithmetic genus of the curve D itself: p_a = τ₂ + 3τ₃ − d̄ + 1.
pub fn arithmetic_genus_d(g: &ArrangementGraph) -> Result<i128> {
    if g.is_empty() {
        return Err(Error::EmptyCurve);
    }
    let tau = tau_profile(g);
    Ok(tau.tau2 + 3 * tau.tau3 - g.edge_count() as i128 + 1)
}

/// Branch-curve data of a generic projection of the smoothed surface.
pub fn projection_data(pt: &PairType) -> ProjectionData {
    let tau = tau_profile_of_type(pt);
    let m = pt.m as i128;
    let d = choose2(m) - pt.dbar;
    let deg_b = 2 * d;
    let g = 6 * tau.tau0 + tau.tau1 - d + 1;
    let c = 6 * tau.tau0 + 3 * tau.tau1;
    let nu0 = choose2(d) - tau.tau1 - 3 * tau.tau0;
    let n = 4 * nu0;
    debug_assert_eq!(
        deg_b * (deg_b - 3) / 2,
        (g - 1) + c + n,
        "genus of the branch curve must match its degree, cusps and nodes"
    );
    ProjectionData { deg_b, g, c, n }
}

/// Plücker data of the dual of the branch curve.
pub fn dual_plucker(pd: &ProjectionData) -> DualData {
    let deg_dual = pd.deg_b * (pd.deg_b - 1) - 2 * pd.n - 3 * pd.c;
    let c_dual = 3 * deg_dual - 3 * pd.deg_b + pd.c;
    let n_dual = (deg_dual - 1) * (deg_dual - 2) / 2 - pd.g - c_dual;
    DualData { deg_dual, c_dual, n_dual }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
