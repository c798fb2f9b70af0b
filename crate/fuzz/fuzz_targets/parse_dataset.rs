#![no_main]

use adbi::io::{parse_dataset, write_dataset, TargetKind};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    for kind in [TargetKind::Numeric, TargetKind::Labeled] {
        if let Ok(dataset) = parse_dataset(data, kind) {
            let mut buf = Vec::new();
            write_dataset(&dataset, &mut buf).expect("write to memory");
            let again = parse_dataset(buf.as_slice(), kind).expect("written dataset parses");
            assert_eq!(again.points, dataset.points);
            assert_eq!(again.targets, dataset.targets);
        }
    }
});
