//! Invariants and degeneration obstructions for line arrangements in the
//! double curve of a generic plane arrangement.

pub mod canon;
pub mod curated;
pub mod enumeration;
pub mod error;
pub mod formats;
pub mod graph;
pub mod invariants;
pub mod obstructions;
pub mod report;
pub mod symbol;

pub use canon::{canonical_form, graph_from_certificate, CanonicalForm};
pub use curated::{
    curated_verdict, parse_curated, serialize_curated, CuratedRow, CuratedStatus, CuratedTable,
    KnownVerdict, MPredicate,
};
pub use enumeration::{
    build_fig4_graph, enumerate_arrangements, enumerate_graphs_up_to, exists_pair_of_type,
    find_type_collisions, realize_symbol, ArrangementClass, GraphClass, TypeCollision,
    MAX_CATALOG_EDGES, MAX_ENUMERATION_PLANES,
};
pub use error::{Error, ParseError, Result, CANON_VERTEX_BOUND, MAX_PLANES};
pub use formats::{edge_list_string, graph_json_string, parse_edge_list, parse_graph_json};
pub use graph::{ArrangementGraph, Edge};
pub use invariants::{
    arithmetic_genus_d, double_curve_classes, dual_plucker, nu_profile, nu_profile_of_type,
    pair_type, pair_type_of, projection_data, surface_invariants, surface_type, surface_type_of,
    tau_profile, tau_profile_of_type, ComponentData, CurveClass, DualData, NuProfile, PairType,
    ProjectionData, SurfaceInvariants, SurfaceType, TauProfile,
};
pub use obstructions::{build_report, run_battery, Obstruction, ObstructionReport, Verdict};
pub use report::{
    analysis_json, analysis_text, analyze, battery_json, catalog_line, display_symbol, Analysis,
};
pub use symbol::{parse_type_symbol, type_symbol, SymbolComponent, TypeSymbol};
