//! The shipped curated table is regenerated here from hand-coded edge lists,
//! so its certificates and symbols can never drift from the canonicalizer or
//! the symbol printer.

use degenlab::{
    canonical_form, enumerate_arrangements, parse_curated, serialize_curated, type_symbol,
    ArrangementGraph, CuratedTable,
};

const LOW_DEGREE: &str =
    "every line arrangement on at most four planes is a limit double curve (low-degree existence)";

fn row(g: &ArrangementGraph, predicate: &str, status: &str, source: &str) -> String {
    let cert = canonical_form(g).expect("curated graphs are small").certificate;
    format!("{}\t{}\t{}\t{}\t{}", type_symbol(g), cert, predicate, status, source)
}

fn graph(m: u32, pairs: &[(u32, u32)]) -> ArrangementGraph {
    ArrangementGraph::new(m, pairs.iter().copied()).unwrap()
}

fn expected_table() -> String {
    let mut lines: Vec<String> = vec![degenlab::curated::TABLE_HEADER.to_string()];

    // Everything on three or four planes is a limit.
    for m in [3u32, 4] {
        for class in enumerate_arrangements(m).unwrap() {
            lines.push(row(&class.graph, &format!("={m}"), "Limit", LOW_DEGREE));
        }
    }

    // The seven five-plane exclusions. Six are recorded at m = 5; the last
    // (the extended star) is absolutely not limit and gets a single all-m row
    // further down instead.
    let five: &[(&[(u32, u32)], &str)] = &[
        (&[(1, 4), (2, 4), (3, 4)], "three concurrent lines in a plane (planar-trap argument)"),
        (&[(1, 2), (3, 4), (4, 5)], "conic-and-line exclusion (planar-trap argument)"),
        (&[(1, 2), (1, 3), (2, 3), (3, 4)], "nodal plane cubic exclusion (planar-trap argument)"),
        (&[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)], "Chern-number exclusion (K2 = 1, e = -1)"),
        (
            &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5)],
            "uniqueness of generic coverings rules out the branch curve",
        ),
        (
            &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
            "dual of the branch curve would be a conic (dual-degree argument)",
        ),
    ];
    for (pairs, source) in five {
        lines.push(row(&graph(5, pairs), "=5", "NotLimitForThisM", source));
    }

    // Dependence on the plane count beyond five.
    let star = graph(7, &[(1, 4), (2, 4), (3, 4)]);
    lines.push(row(
        &star,
        ">=7",
        "Limit",
        "plane-cubic realizability: complete intersection of a cubic and a plane",
    ));
    lines.push(row(
        &star,
        "*",
        "PotentiallyLimit",
        "plane cubic with no construction below seven planes",
    ));
    let conic_line = graph(6, &[(1, 2), (3, 4), (4, 5)]);
    lines.push(row(
        &conic_line,
        "*",
        "PotentiallyLimit",
        "conic-and-line analogue of the plane-cubic construction",
    ));
    let four_cycle = graph(5, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
    lines.push(row(
        &four_cycle,
        ">=5",
        "Limit",
        "complete-intersection limit construction (two quadrics)",
    ));
    let spider = graph(5, &[(1, 2), (1, 3), (1, 4), (2, 5)]);
    lines.push(row(
        &spider,
        "*",
        "AbsolutelyNotLimit",
        "elliptic-quartic non-realizability; the numerical type stays virtually realizable from five planes on",
    ));

    lines.join("\n") + "\n"
}

#[test]
fn builtin_table_matches_its_generator() {
    let expected = expected_table();
    parse_curated(&expected).expect("generated table parses");
    let actual = serialize_curated(CuratedTable::builtin());
    if actual != expected {
        println!("=== expected curated table ===\n{expected}=== end ===");
    }
    assert_eq!(actual, expected);
}
