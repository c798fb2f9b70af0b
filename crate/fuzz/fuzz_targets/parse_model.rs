#![no_main]

use adbi::io::{model_to_string, parse_model};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(model) = parse_model(text) {
        let written = model_to_string(&model);
        let again = parse_model(&written).expect("written model parses");
        assert_eq!(model_to_string(&again), written);
        // Answering a query must never panic, whatever the model holds.
        let _ = model.predict(&vec![0.0; model.dimension()]);
    }
});
