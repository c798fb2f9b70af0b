#![no_main]

use adbi::io::{parse_queries, write_queries};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(queries) = parse_queries(data, None) {
        if queries.names.is_empty() {
            return;
        }
        let mut buf = Vec::new();
        write_queries(&queries, &mut buf).expect("write to memory");
        let again = parse_queries(buf.as_slice(), Some(queries.names.len())).expect("written queries parse");
        assert_eq!(again.points, queries.points);
    }
});
