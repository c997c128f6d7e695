#![no_main]

use durfee_core::polyring::RationalFunction;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(v) = serde_json::from_slice::<RationalFunction>(data) {
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<RationalFunction>(&s).unwrap(), v);
    }
});
