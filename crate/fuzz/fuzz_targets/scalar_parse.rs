#![no_main]

use libfuzzer_sys::fuzz_target;
use tower_core::arith::parse_scalar;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = parse_scalar(s) {
        let printed = x.to_string();
        let back = parse_scalar(&printed).expect("printed scalars parse");
        assert_eq!(back, x, "{s:?} printed as {printed:?}");
    }
});
