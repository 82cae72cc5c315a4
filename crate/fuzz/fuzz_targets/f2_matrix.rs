#![no_main]

use hyperbraid::charclass::{is_stably_trivial, pairing_witness, parse_f2_matrix, sw_total, PairingWitness};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(rep) = parse_f2_matrix(text) else { return };
    if rep.q() > 0 {
        assert_eq!(parse_f2_matrix(&rep.to_text()).expect("printed matrix parses"), rep);
    }
    if rep.q() <= 12 && rep.n() <= 16 {
        let trivial = is_stably_trivial(&rep);
        match pairing_witness(&rep) {
            PairingWitness::Obstructed(_) => assert!(!trivial),
            _ => assert!(trivial),
        }
        let _ = sw_total(&rep, 3);
    }
});
