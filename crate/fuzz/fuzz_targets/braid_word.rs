#![no_main]

use hyperbraid::burau::{burau, permutation_at_1, BraidWord};
use hyperbraid::laurent::LaurentPoly;
use libfuzzer_sys::fuzz_target;

// First byte selects the strand count.
fuzz_target!(|data: &[u8]| {
    let Some((&head, rest)) = data.split_first() else { return };
    let n = 2 + head as usize % 6;
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let Ok(word) = BraidWord::parse(n, text) else { return };
    assert_eq!(BraidWord::parse(n, &word.to_string()).expect("printed word parses"), word);
    if word.letters().len() <= 24 {
        let m = burau(&word);
        assert_eq!(m.determinant(), LaurentPoly::neg_t_pow(word.exponent_sum()));
        permutation_at_1(&word).expect("t = 1 gives a permutation");
    }
});
