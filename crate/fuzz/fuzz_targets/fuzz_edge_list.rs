#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(graph) = degenlab::parse_edge_list(text) {
        // Anything we accept must survive a round trip unchanged.
        let rendered = degenlab::edge_list_string(&graph);
        let back = degenlab::parse_edge_list(&rendered).expect("rendered edge list parses");
        assert_eq!(back, graph);
    }
});
