#![no_main]

use hyperbraid::burau::{parse_gaussian_list, RationalComplexConfiguration};
use hyperbraid::exact::{format_rational, parse_rational, GaussianRational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(q) = parse_rational(text) {
        assert_eq!(parse_rational(&format_rational(&q)).expect("printed rational parses"), q);
    }
    if let Ok(z) = text.parse::<GaussianRational>() {
        let back: GaussianRational = z.to_string().parse().expect("printed Gaussian rational parses");
        assert_eq!(back, z);
    }
    if let Ok(list) = parse_gaussian_list(text) {
        let _ = RationalComplexConfiguration::new(list);
    }
});
