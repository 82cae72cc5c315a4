#![no_main]

use hyperbraid::burau::Permutation;
use libfuzzer_sys::fuzz_target;

// First byte selects the number of letters.
fuzz_target!(|data: &[u8]| {
    let Some((&head, rest)) = data.split_first() else { return };
    let n = head as usize % 32;
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let Ok(p) = Permutation::parse_cycles(n, text) else { return };
    assert_eq!(p.len(), n);
    assert_eq!(Permutation::parse_cycles(n, &p.to_string()).expect("printed cycles parse"), p);
    assert_eq!(p.compose(&p.inverse()), Permutation::identity(n));
});
