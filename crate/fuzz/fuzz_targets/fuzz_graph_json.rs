#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(graph) = degenlab::parse_graph_json(text) {
        let rendered = degenlab::graph_json_string(&graph);
        let back = degenlab::parse_graph_json(&rendered).expect("rendered JSON parses");
        assert_eq!(back, graph);
    }
});
