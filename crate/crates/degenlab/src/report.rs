//! Bundled analysis of one pair and its JSON / text rendering.

use serde_json::{json, Value};

use crate::canon::{canonical_form, CanonicalForm};
use crate::curated::CuratedTable;
use crate::graph::ArrangementGraph;
use crate::invariants::{
    arithmetic_genus_d, double_curve_classes, dual_plucker, nu_profile, projection_data,
    surface_invariants, tau_profile, ComponentData, DualData, NuProfile, ProjectionData,
    SurfaceInvariants, TauProfile,
};
use crate::obstructions::{build_report, ObstructionReport, Verdict};
use crate::symbol::{type_symbol, TypeSymbol};

/// Everything the tools report about one pair (m, D).
#[derive(Clone, Debug)]
pub struct Analysis {
    pub graph: ArrangementGraph,
    pub symbol: TypeSymbol,
    /// Absent when a component exceeds the canonicalization bound.
    pub canonical: Option<CanonicalForm>,
    pub tau: TauProfile,
    pub nu: NuProfile,
    pub invariants: SurfaceInvariants,
    /// Arithmetic genus of D; absent for the empty arrangement.
    pub genus_d: Option<i128>,
    pub branch: ProjectionData,
    pub dual: DualData,
    pub components: ComponentData,
    pub report: ObstructionReport,
}

/// Computes the full analysis bundle.
pub fn analyze(g: &ArrangementGraph, table: &CuratedTable) -> Analysis {
    let report = build_report(g, table);
    let pt = report.pair_type;
    let branch = projection_data(&pt);
    Analysis {
        symbol: type_symbol(g),
        canonical: canonical_form(g).ok(),
        tau: tau_profile(g),
        nu: nu_profile(g),
        invariants: surface_invariants(&pt).expect("graph-derived profiles are nonnegative"),
        genus_d: arithmetic_genus_d(g).ok(),
        branch,
        dual: dual_plucker(&branch),
        components: double_curve_classes(g),
        graph: g.clone(),
        report,
    }
}

/// The symbol, with the empty arrangement spelled out for readability.
pub fn display_symbol(symbol: &TypeSymbol) -> String {
    if symbol.is_empty() {
        "(empty)".to_string()
    } else {
        symbol.to_string()
    }
}

/// One JSON object with the full analysis.
pub fn analysis_json(a: &Analysis) -> Value {
    json!({
        "m": a.graph.m(),
        "symbol": a.symbol.to_string(),
        "certificate": a.canonical.as_ref().map(|c| c.certificate.clone()),
        "automorphisms": a.canonical.as_ref().map(|c| c.automorphism_count),
        "irreducible": a.graph.is_irreducible_pair(),
        "pair_type": a.report.pair_type.as_array(),
        "surface_type": a.report.surface_type.as_array(),
        "tau": a.tau.as_array(),
        "nu": a.nu.as_array(),
        "K2": a.invariants.k2,
        "e": a.invariants.euler,
        "chi": a.invariants.chi,
        "omega": a.invariants.omega,
        "pa_D": a.genus_d,
        "branch": {"degB": a.branch.deg_b, "g": a.branch.g, "c": a.branch.c, "n": a.branch.n},
        "dual": {"deg": a.dual.deg_dual, "c": a.dual.c_dual, "n": a.dual.n_dual},
        "components": a.components.classes.iter().map(|c| json!({
            "degree": c.degree,
            "genus": c.genus,
            "self_nodes": c.self_nodes,
        })).collect::<Vec<_>>(),
        "fired": fired_json(&a.report),
        "curated": curated_json(&a.report),
        "verdict": a.report.verdict.to_string(),
    })
}

/// The battery-only view: type data, fired criteria and the verdict.
pub fn battery_json(report: &ObstructionReport) -> Value {
    json!({
        "pair_type": report.pair_type.as_array(),
        "surface_type": report.surface_type.as_array(),
        "fired": fired_json(report),
        "curated": curated_json(report),
        "verdict": report.verdict.to_string(),
    })
}

fn fired_json(report: &ObstructionReport) -> Vec<Value> {
    report.fired.iter().map(|o| json!({"kind": o.name(), "detail": o.description()})).collect()
}

fn curated_json(report: &ObstructionReport) -> Value {
    match &report.curated {
        Some(v) => json!({
            "status": v.status.to_string(),
            "source": v.source,
            "m": v.applicable_m.to_string(),
        }),
        None => Value::Null,
    }
}

/// Multi-line human-readable analysis; plain ASCII throughout.
pub fn analysis_text(a: &Analysis) -> String {
    let mut out = String::new();
    let pt = &a.report.pair_type;
    let st = &a.report.surface_type;
    out.push_str(&format!(
        "m = {}, lines kept = {}, complement lines = {}\n",
        a.graph.m(),
        pt.dbar,
        a.graph.complement_edge_count()
    ));
    out.push_str(&format!("symbol: {}\n", display_symbol(&a.symbol)));
    if let Some(c) = &a.canonical {
        out.push_str(&format!(
            "certificate: {} (automorphisms: {})\n",
            if c.certificate.is_empty() { "(empty)" } else { &c.certificate },
            c.automorphism_count
        ));
    }
    out.push_str(&format!(
        "pair type (m, dbar, k, tau2, tau3) = ({}, {}, {}, {}, {})\n",
        pt.m, pt.dbar, pt.k, pt.tau2, pt.tau3
    ));
    out.push_str(&format!(
        "surface type (m, dbar, k, gbar, t) = ({}, {}, {}, {}, {})\n",
        st.m, st.dbar, st.k, st.gbar, st.t
    ));
    out.push_str(&format!(
        "tau = ({}, {}, {}, {}) of {}   nu = ({}, {}, {}) of {}\n",
        a.tau.tau0,
        a.tau.tau1,
        a.tau.tau2,
        a.tau.tau3,
        a.tau.tau_total,
        a.nu.nu0,
        a.nu.nu1,
        a.nu.nu2,
        a.nu.nu_total
    ));
    out.push_str(&format!(
        "K2 = {}, e = {}, chi = {}, omega = {}\n",
        a.invariants.k2, a.invariants.euler, a.invariants.chi, a.invariants.omega
    ));
    if let Some(pa) = a.genus_d {
        out.push_str(&format!("p_a(D) = {pa}\n"));
    }
    out.push_str(&format!(
        "branch curve: deg {}, g {}, c {}, n {}\n",
        a.branch.deg_b, a.branch.g, a.branch.c, a.branch.n
    ));
    out.push_str(&format!(
        "dual curve: deg {}, c {}, n {}\n",
        a.dual.deg_dual, a.dual.c_dual, a.dual.n_dual
    ));
    if a.components.classes.is_empty() {
        out.push_str("classes: none\n");
    } else {
        let parts: Vec<String> = a
            .components
            .classes
            .iter()
            .map(|c| format!("deg {} g {} nodes {}", c.degree, c.genus, c.self_nodes))
            .collect();
        out.push_str(&format!("classes: {}\n", parts.join("; ")));
    }
    out.push_str(&format!(
        "irreducible pair: {}\n",
        if a.graph.is_irreducible_pair() { "yes" } else { "no" }
    ));
    if a.report.fired.is_empty() {
        out.push_str("battery: silent\n");
    } else {
        let parts: Vec<String> =
            a.report.fired.iter().map(|o| format!("{} ({})", o.name(), o.description())).collect();
        out.push_str(&format!("battery: {}\n", parts.join("; ")));
    }
    match (&a.report.verdict, &a.report.curated) {
        (Verdict::KnownResult, Some(v)) => out.push_str(&format!(
            "verdict: KnownResult - {} [{}] per {}\n",
            v.status, v.applicable_m, v.source
        )),
        (verdict, _) => out.push_str(&format!("verdict: {verdict}\n")),
    }
    out
}

/// One catalog line for a graph class at a plane count. The certificate is
/// null when a component exceeds the canonicalization bound.
pub fn catalog_line(g: &ArrangementGraph, table: &CuratedTable) -> Value {
    let report = build_report(g, table);
    json!({
        "certificate": canonical_form(g).ok().map(|c| c.certificate),
        "edges": g.edges().map(|e| [e.i(), e.j()]).collect::<Vec<_>>(),
        "pair_type": report.pair_type.as_array(),
        "irreducible": g.is_irreducible_pair(),
        "verdict": report.verdict.to_string(),
    })
}
