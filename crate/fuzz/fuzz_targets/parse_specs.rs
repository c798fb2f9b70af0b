#![no_main]

use adbi::io::{AxisSpec, TestFunction};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = text.parse::<AxisSpec>() {
        assert!(spec.count >= 2 && spec.start < spec.stop);
        if spec.count <= 10_000 {
            let nodes = spec.nodes();
            assert_eq!(nodes.len(), spec.count);
            assert_eq!(nodes[spec.count - 1], spec.stop);
        }
    }
    if let Ok(function) = text.parse::<TestFunction>() {
        let shown = function.to_string();
        assert_eq!(shown.parse::<TestFunction>().ok(), Some(function));
    }
});
