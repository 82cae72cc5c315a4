#![no_main]

use hyperbraid::arrangement::{intersection_poset, parse_arrangement};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(arr) = parse_arrangement(text) else { return };
    let again = parse_arrangement(&arr.to_text()).expect("printed arrangement parses");
    assert_eq!(again, arr);
    if arr.len() <= 8 && arr.ambient_dim() <= 4 {
        let poset = intersection_poset(&arr);
        assert_eq!(poset.mobius(0), 1);
    }
});
