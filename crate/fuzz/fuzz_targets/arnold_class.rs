#![no_main]

use hyperbraid::arnold::{parse_class, parse_form, straighten, Ring};
use libfuzzer_sys::fuzz_target;

// First byte selects the strand count and the coefficient ring.
fuzz_target!(|data: &[u8]| {
    let Some((&head, rest)) = data.split_first() else { return };
    let n = 2 + (head as usize & 7) % 6;
    let ring = if head & 0x80 == 0 { Ring::Z } else { Ring::F2 };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if text.len() > 512 {
        return;
    }
    if let Ok(form) = parse_form(n, ring, text) {
        if form.terms().keys().all(|w| w.len() <= 6) {
            let _ = straighten(&form);
        }
    }
    if text.matches('A').count() > 24 {
        return;
    }
    let Ok(class) = parse_class(n, ring, text) else { return };
    let printed = class.to_string();
    let back = parse_class(n, ring, &printed).expect("printed class parses");
    assert_eq!(back, class);
});
