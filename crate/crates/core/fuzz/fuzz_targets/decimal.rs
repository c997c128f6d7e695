#![no_main]

use durfee_core::codec::parse_decimal;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_decimal(text) {
        assert_eq!(v.to_string(), text);
    }
});
