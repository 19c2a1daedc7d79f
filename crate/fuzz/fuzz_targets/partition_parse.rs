#![no_main]

use libfuzzer_sys::fuzz_target;
use tower_core::combinatorics::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Partition::parse(s) {
        assert_eq!(Partition::parse(&p.to_string()).expect("display parses"), p);
        assert_eq!(Partition::parse(&p.to_csv()).expect("csv parses"), p);
    }
});
