//! Property tests: format round-trips, relabeling invariance, and the
//! type-search contract, each checked against independently written oracles.

use std::collections::BTreeSet;

use proptest::prelude::*;

use degenlab::{
    canonical_form, edge_list_string, enumerate_arrangements, exists_pair_of_type,
    graph_from_certificate, graph_json_string, pair_type, parse_curated, parse_edge_list,
    parse_graph_json, parse_type_symbol, run_battery, serialize_curated, type_symbol,
    ArrangementGraph, Error, Obstruction, PairType,
};

fn arb_graph() -> impl Strategy<Value = ArrangementGraph> {
    (4u32..=9).prop_flat_map(|m| {
        let pairs: Vec<(u32, u32)> =
            (1..=m).flat_map(|i| ((i + 1)..=m).map(move |j| (i, j))).collect();
        let n = pairs.len();
        proptest::collection::vec(proptest::bool::ANY, n).prop_map(move |mask| {
            let chosen = pairs.iter().zip(&mask).filter(|&(_, &keep)| keep).map(|(&p, _)| p);
            ArrangementGraph::new(m, chosen).unwrap()
        })
    })
}

fn arb_graph_with_permutation() -> impl Strategy<Value = (ArrangementGraph, Vec<u32>)> {
    arb_graph().prop_flat_map(|g| {
        let m = g.m();
        let idents: Vec<u32> = (1..=m).collect();
        (Just(g), Just(idents).prop_shuffle())
    })
}

fn relabel(g: &ArrangementGraph, sigma: &[u32]) -> ArrangementGraph {
    let edges = g.edges().map(|e| (sigma[(e.i() - 1) as usize], sigma[(e.j() - 1) as usize]));
    ArrangementGraph::new(g.m(), edges).unwrap()
}

fn battery_rank(o: &Obstruction) -> u8 {
    match o {
        Obstruction::NegativeCount { .. } => 0,
        Obstruction::NoCorrespondingSurfaceType { .. } => 1,
        Obstruction::ChernViolation { .. } => 2,
        Obstruction::NegativeBranchGenus { .. } => 3,
        Obstruction::DualDegreeTooSmall { .. } => 4,
        Obstruction::PlanarTrap { .. } => 5,
        Obstruction::PlanarTrapWithExtraComponent { .. } => 6,
    }
}

proptest! {
    #[test]
    fn edge_list_round_trips(g in arb_graph()) {
        let text = edge_list_string(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn graph_json_round_trips(g in arb_graph()) {
        let text = graph_json_string(&g);
        prop_assert_eq!(parse_graph_json(&text).unwrap(), g);
    }

    #[test]
    fn type_symbol_round_trips(g in arb_graph()) {
        let sym = type_symbol(&g);
        if !sym.is_empty() {
            prop_assert_eq!(parse_type_symbol(&sym.to_string()).unwrap(), sym);
        }
    }

    #[test]
    fn certificate_round_trips(g in arb_graph()) {
        let canon = canonical_form(&g).unwrap();
        let back = graph_from_certificate(&canon.certificate, g.m()).unwrap();
        prop_assert_eq!(canonical_form(&back).unwrap().certificate, canon.certificate);
    }

    #[test]
    fn canonical_form_ignores_labels((g, sigma) in arb_graph_with_permutation()) {
        let relabeled = relabel(&g, &sigma);
        let a = canonical_form(&g).unwrap();
        let b = canonical_form(&relabeled).unwrap();
        prop_assert_eq!(a.certificate, b.certificate);
        prop_assert_eq!(a.automorphism_count, b.automorphism_count);
    }

    #[test]
    fn invariants_ignore_labels((g, sigma) in arb_graph_with_permutation()) {
        let relabeled = relabel(&g, &sigma);
        prop_assert_eq!(pair_type(&g), pair_type(&relabeled));
        prop_assert_eq!(type_symbol(&g), type_symbol(&relabeled));
        prop_assert_eq!(run_battery(&g), run_battery(&relabeled));
    }

    #[test]
    fn battery_is_deterministic_and_ordered(g in arb_graph()) {
        let fired = run_battery(&g);
        prop_assert_eq!(&fired, &run_battery(&g));
        let ranks: Vec<u8> = fired.iter().map(battery_rank).collect();
        let mut sorted = ranks.clone();
        sorted.sort_unstable();
        prop_assert_eq!(ranks, sorted);
        // Numerical counts of a real arrangement are never negative.
        let negative = fired.iter().any(|o| matches!(o, Obstruction::NegativeCount { .. }));
        prop_assert!(!negative);
    }

    #[test]
    fn type_search_is_sound(
        m in 5u32..=8,
        dbar in 0i128..=8,
        k in 0i128..=8,
        tau2 in 0i128..=10,
        tau3 in 0i128..=4,
    ) {
        let target = PairType { m, dbar, k, tau2, tau3 };
        if let Ok(Some(witness)) = exists_pair_of_type(&target) {
            prop_assert_eq!(pair_type(&witness), target);
            prop_assert!(witness.is_irreducible_pair());
        }
    }
}

/// Every type realized by an irreducible six-plane arrangement with at most
/// five lines is found by the search, and no unrealized type gets a witness.
#[test]
fn type_search_is_complete_for_small_sizes() {
    let classes = enumerate_arrangements(6).unwrap();
    let realized: BTreeSet<PairType> = classes
        .iter()
        .filter(|c| c.irreducible && c.graph.edge_count() <= 5)
        .map(|c| pair_type(&c.graph))
        .collect();
    for pt in &realized {
        let witness = exists_pair_of_type(pt).unwrap();
        assert!(witness.is_some(), "missed realizable type {pt:?}");
    }
    // Sweep a box of candidate types around the realized ones.
    for dbar in 0..=5i128 {
        for k in 0..=dbar.max(1) {
            for tau2 in 0..=8i128 {
                for tau3 in 0..=2i128 {
                    let target = PairType { m: 6, dbar, k, tau2, tau3 };
                    let found = matches!(exists_pair_of_type(&target), Ok(Some(_)));
                    assert_eq!(found, realized.contains(&target), "disagreement on {target:?}");
                }
            }
        }
    }
}

#[test]
fn automorphism_counts_match_orbit_sizes() {
    // Sum over classes of m!/(aut * (m-v)!) must recover 2^C(m,2) subsets.
    for m in [4u32, 5] {
        let classes = enumerate_arrangements(m).unwrap();
        let total: u64 = classes.iter().map(|c| c.labeled_count).sum();
        assert_eq!(total, 1u64 << (m * (m - 1) / 2));
        for c in &classes {
            let v = c.graph.vertex_count() as u64;
            let orbit = c.labeled_count * c.canonical.automorphism_count;
            let mut expected = 1u64;
            for x in ((m as u64 - v) + 1)..=(m as u64) {
                expected *= x;
            }
            assert_eq!(orbit, expected, "{}", c.canonical.certificate);
        }
    }
}

#[test]
fn curated_text_round_trips() {
    let text = "\
# symbol\tcertificate\tm\tstatus\tsource
(2|1,0)\t1-2\t=4\tLimit\tlow-degree existence
(2|1,0)\t1-2\t>=9\tPotentiallyLimit\tno construction known here
(2|1,0)\t1-2\t*\tAbsolutelyNotLimit\ta blanket exclusion for exercise
(0,3|3,1)\t1-2,1-3,2-3\t=5\tNotLimitForThisM\ttriangle exclusion\n";
    let table = parse_curated(text).unwrap();
    assert_eq!(table.rows().len(), 4);
    let serialized = serialize_curated(&table);
    let reparsed = parse_curated(&serialized).unwrap();
    assert_eq!(reparsed, table);
    assert_eq!(serialize_curated(&reparsed), serialized);
    // Specificity order: an exact match beats a bound, which beats a wildcard.
    assert_eq!(table.lookup("1-2", 4).unwrap().status.to_string(), "Limit");
    assert_eq!(table.lookup("1-2", 9).unwrap().status.to_string(), "PotentiallyLimit");
    assert_eq!(table.lookup("1-2", 6).unwrap().status.to_string(), "AbsolutelyNotLimit");
    assert!(table.lookup("1-2,1-3", 6).is_none());
}

#[test]
fn curated_parse_rejects_malformed_rows() {
    assert!(matches!(parse_curated("(2|1,0)\t1-2\t=4\tLimit"), Err(Error::Parse(_))));
    assert!(matches!(parse_curated("(2|1,0)\t1-2\t=4\tSomething\tsource"), Err(Error::Parse(_))));
    assert!(matches!(parse_curated("(2|1,0)\t1-2\tmaybe\tLimit\tsource"), Err(Error::Parse(_))));
}
