#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(table) = degenlab::parse_curated(text) {
        let rendered = degenlab::serialize_curated(&table);
        let back = degenlab::parse_curated(&rendered).expect("serialized table parses");
        assert_eq!(back, table);
    }
});
