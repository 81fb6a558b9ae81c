//! Fuzzes the `.graph` loader: loading must never panic, every accepted
//! file must satisfy the structural validator (the loader enforces it),
//! and accepted data must round-trip through the renderer.

#![no_main]

use libfuzzer_sys::fuzz_target;
use quasiadj::resolution::{load_resolution_graph, render_resolution_graph};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(data) = load_resolution_graph(text) {
        let rendered = render_resolution_graph(&data);
        let reparsed =
            load_resolution_graph(&rendered).expect("rendered graph must re-parse");
        assert_eq!(data, reparsed, "graph round trip must be stable");
    }
});
