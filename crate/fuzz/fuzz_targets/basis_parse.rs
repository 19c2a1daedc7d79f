#![no_main]

use libfuzzer_sys::fuzz_target;
use tower_core::algebra::BasisId;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(b) = BasisId::parse(s) {
        assert_eq!(BasisId::parse(&b.to_string()).expect("display parses"), b);
    }
});
