#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(symbol) = degenlab::parse_type_symbol(text) {
        let rendered = symbol.to_string();
        if symbol.is_empty() {
            assert!(rendered.is_empty());
            return;
        }
        let back = degenlab::parse_type_symbol(&rendered).expect("rendered symbol parses");
        assert_eq!(back, symbol);
    }
});
