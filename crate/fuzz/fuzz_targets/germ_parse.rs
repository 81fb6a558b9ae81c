//! Fuzzes the `.germ` grammar: parsing must never panic, and any germ
//! that parses must survive a render/re-parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use quasiadj::algebra::{parse_germ, render_germ};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = parse_germ(text) {
        let rendered = render_germ(&spec);
        let reparsed = parse_germ(&rendered).expect("rendered germ must re-parse");
        assert_eq!(
            render_germ(&reparsed),
            rendered,
            "render/parse must stabilize"
        );
    }
});
