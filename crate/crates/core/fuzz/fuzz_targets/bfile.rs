#![no_main]

use durfee_core::codec::{parse_bfile, write_bfile};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((offset, values)) = parse_bfile(text) {
        let again = write_bfile(offset, &values);
        assert_eq!(parse_bfile(&again).unwrap(), (offset, values));
    }
});
