//! The obstruction battery.
//!
//! Each criterion is a necessary condition for the pair (m, D) to arise as
//! the limit of a degeneration of smooth surfaces. All criteria are always
//! evaluated, in a fixed order, with no short-circuiting; the geometric ones
//! (d)–(g) only apply when the pair is irreducible, i.e. when the complement
//! arrangement stays connected.

use crate::canon::canonical_form;
use crate::curated::{CuratedTable, KnownVerdict};
use crate::graph::ArrangementGraph;
use crate::invariants::{
    double_curve_classes, dual_plucker, nu_profile_of_type, pair_type, projection_data,
    raw_surface_invariants, surface_type_of, tau_profile_of_type, CurveClass, PairType,
    SurfaceType,
};

/// One reason a pair cannot be a degeneration limit, with the witness
/// numbers that triggered it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Obstruction {
    /// A τ- or ν-count is negative, so the type is not realizable at all.
    NegativeCount { name: &'static str, value: i128 },
    /// The limit curve genus ḡ is negative: no surface type corresponds.
    NoCorrespondingSurfaceType { gbar: i128 },
    /// K² > 0 with e ≤ 0 violates the Chern inequalities of a smoothing.
    ChernViolation { k2: i128, euler: i128 },
    /// The branch curve of a generic projection would have negative genus.
    NegativeBranchGenus { genus: i128 },
    /// A branch curve of degree ≥ 4 cannot have a dual of degree ≤ 2.
    DualDegreeTooSmall { deg_b: i128, deg_dual: i128 },
    /// A class exceeds the genus bound for nondegenerate space curves, so it
    /// must be planar, but its plane would meet too few of the m planes.
    PlanarTrap { degree: i128, genus: i128, self_nodes: i128 },
    /// A forced-planar class together with a second class needs one more
    /// plane than the arrangement has.
    PlanarTrapWithExtraComponent { degree: i128, classes: i128 },
}

impl Obstruction {
    pub fn name(&self) -> &'static str {
        match self {
            Obstruction::NegativeCount { .. } => "NegativeCount",
            Obstruction::NoCorrespondingSurfaceType { .. } => "NoCorrespondingSurfaceType",
            Obstruction::ChernViolation { .. } => "ChernViolation",
            Obstruction::NegativeBranchGenus { .. } => "NegativeBranchGenus",
            Obstruction::DualDegreeTooSmall { .. } => "DualDegreeTooSmall",
            Obstruction::PlanarTrap { .. } => "PlanarTrap",
            Obstruction::PlanarTrapWithExtraComponent { .. } => "PlanarTrapWithExtraComponent",
        }
    }

    pub fn description(&self) -> String {
        match self {
            Obstruction::NegativeCount { name, value } => {
                format!("count {name} = {value} is negative")
            }
            Obstruction::NoCorrespondingSurfaceType { gbar } => {
                format!("the limit curve genus {gbar} is negative")
            }
            Obstruction::ChernViolation { k2, euler } => {
                format!("K2 = {k2} > 0 forces a positive Euler number, but e = {euler}")
            }
            Obstruction::NegativeBranchGenus { genus } => {
                format!("the branch curve would have genus {genus}")
            }
            Obstruction::DualDegreeTooSmall { deg_b, deg_dual } => {
                format!("a branch curve of degree {deg_b} cannot have a dual of degree {deg_dual}")
            }
            Obstruction::PlanarTrap { degree, genus, self_nodes } => format!(
                "a class of degree {degree} with genus {genus} and {self_nodes} extra nodes \
                 is planar, and its plane meets too few of the arrangement planes"
            ),
            Obstruction::PlanarTrapWithExtraComponent { degree, classes } => format!(
                "a planar class of degree {degree} among {classes} classes leaves no plane \
                 for the rest of the curve"
            ),
        }
    }
}

impl std::fmt::Display for Obstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of classification.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// No criterion fired and nothing curated applies.
    PassesBattery,
    /// At least one criterion fired.
    Obstructed,
    /// No criterion fired and the curated table has a verdict.
    KnownResult,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::PassesBattery => "PassesBattery",
            Verdict::Obstructed => "Obstructed",
            Verdict::KnownResult => "KnownResult",
        })
    }
}

/// Everything the battery concluded about one pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ObstructionReport {
    pub pair_type: PairType,
    pub surface_type: SurfaceType,
    pub fired: Vec<Obstruction>,
    pub curated: Option<KnownVerdict>,
    pub verdict: Verdict,
}

/// Castelnuovo's genus bound ⌊(d−2)²/4⌋ for nondegenerate space curves of
/// degree d; a connected nodal curve beyond it must be planar.
fn castelnuovo_bound(degree: i128) -> i128 {
    (degree - 2) * (degree - 2) / 4
}

/// A class that can only lie in a plane: either it beats the space-curve
/// genus bound, or it is a conic (two lines through a point).
fn forced_planar(class: &CurveClass) -> bool {
    class.degree == 2
        || (class.degree >= 3 && class.genus + class.self_nodes > castelnuovo_bound(class.degree))
}

/// Runs every criterion against a pair and reports those that fired, in
/// battery order.
pub fn run_battery(g: &ArrangementGraph) -> Vec<Obstruction> {
    let pt = pair_type(g);
    let st = surface_type_of(&pt);
    let tau = tau_profile_of_type(&pt);
    let nu = nu_profile_of_type(&pt);
    let inv = raw_surface_invariants(&pt);
    let branch = projection_data(&pt);
    let dual = dual_plucker(&branch);
    let classes = double_curve_classes(g).classes;
    let irreducible = g.is_irreducible_pair();
    let m = g.m() as i128;

    let mut fired = Vec::new();
    let negatives = [
        ("tau0", tau.tau0),
        ("tau1", tau.tau1),
        ("tau2", tau.tau2),
        ("tau3", tau.tau3),
        ("nu0", nu.nu0),
        ("nu1", nu.nu1),
        ("nu2", nu.nu2),
    ];
    if let Some(&(name, value)) = negatives.iter().find(|(_, v)| *v < 0) {
        fired.push(Obstruction::NegativeCount { name, value });
    }
    if st.gbar < 0 {
        fired.push(Obstruction::NoCorrespondingSurfaceType { gbar: st.gbar });
    }
    if inv.k2 > 0 && inv.euler <= 0 {
        fired.push(Obstruction::ChernViolation { k2: inv.k2, euler: inv.euler });
    }
    if irreducible {
        if branch.g < 0 {
            fired.push(Obstruction::NegativeBranchGenus { genus: branch.g });
        }
        if branch.deg_b >= 4 && dual.deg_dual <= 2 {
            fired.push(Obstruction::DualDegreeTooSmall {
                deg_b: branch.deg_b,
                deg_dual: dual.deg_dual,
            });
        }
        if let Some(c) = classes.iter().find(|c| {
            c.degree >= 3
                && c.genus + c.self_nodes > castelnuovo_bound(c.degree)
                && 2 * c.degree > m
        }) {
            fired.push(Obstruction::PlanarTrap {
                degree: c.degree,
                genus: c.genus,
                self_nodes: c.self_nodes,
            });
        }
        if classes.len() >= 2 {
            if let Some(c) = classes.iter().find(|c| forced_planar(c) && 2 * c.degree + 2 > m) {
                fired.push(Obstruction::PlanarTrapWithExtraComponent {
                    degree: c.degree,
                    classes: classes.len() as i128,
                });
            }
        }
    }
    fired
}

/// Classifies a pair: battery first, curated table for the survivors.
pub fn build_report(g: &ArrangementGraph, table: &CuratedTable) -> ObstructionReport {
    let pt = pair_type(g);
    let fired = run_battery(g);
    let curated = canonical_form(g).ok().and_then(|cf| table.lookup(&cf.certificate, g.m()));
    let verdict = if !fired.is_empty() {
        Verdict::Obstructed
    } else if curated.is_some() {
        Verdict::KnownResult
    } else {
        Verdict::PassesBattery
    };
    ObstructionReport { pair_type: pt, surface_type: surface_type_of(&pt), fired, curated, verdict }
}
