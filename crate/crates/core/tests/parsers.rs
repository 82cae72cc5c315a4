//! Every text entry point on arbitrary and near-valid input: no panics, and
//! whatever parses prints back to something that parses to the same value.

use hyperbraid::arnold::{parse_class, parse_form, Ring};
use hyperbraid::arrangement::parse_arrangement;
use hyperbraid::burau::{parse_gaussian_list, BraidWord, Permutation, RationalComplexConfiguration};
use hyperbraid::charclass::parse_f2_matrix;
use hyperbraid::exact::{format_rational, parse_rational, GaussianRational};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn arrangement_text(text in "([-0-9/ |#a]{0,14}\n){0,5}") {
        if let Ok(arr) = parse_arrangement(&text) {
            prop_assert_eq!(parse_arrangement(&arr.to_text()).unwrap(), arr);
        }
    }

    #[test]
    fn arnold_text(n in 2usize..=5, text in "[-+*0-9 A\\[\\],]{0,40}", f2 in any::<bool>()) {
        let ring = if f2 { Ring::F2 } else { Ring::Z };
        let _ = parse_form(n, ring, &text);
        if let Ok(c) = parse_class(n, ring, &text) {
            prop_assert_eq!(parse_class(n, ring, &c.to_string()).unwrap(), c);
        }
    }

    #[test]
    fn arnold_generators(n in 2usize..=5, terms in prop::collection::vec((1usize..=6, 1usize..=6, -3i64..=3), 1..4)) {
        let text = terms
            .iter()
            .map(|(i, j, c)| format!("{c}*A[{i},{j}]"))
            .collect::<Vec<_>>()
            .join(" + ");
        let valid = terms.iter().all(|&(i, j, _)| j < i && i <= n);
        prop_assert_eq!(parse_class(n, Ring::Z, &text).is_ok(), valid);
    }

    #[test]
    fn f2_matrix_text(text in "([01 2x]{0,8}\n?){0,5}") {
        if let Ok(rep) = parse_f2_matrix(&text) {
            if rep.q() > 0 {
                prop_assert_eq!(parse_f2_matrix(&rep.to_text()).unwrap(), rep);
            }
        }
    }

    #[test]
    fn braid_word_text(n in 2usize..=5, text in "[s0-9^ -]{0,24}") {
        if let Ok(w) = BraidWord::parse(n, &text) {
            prop_assert_eq!(BraidWord::parse(n, &w.to_string()).unwrap(), w);
        }
    }

    #[test]
    fn cycle_text(n in 0usize..=7, text in "[()0-9 ,]{0,20}") {
        if let Ok(p) = Permutation::parse_cycles(n, &text) {
            prop_assert_eq!(p.len(), n);
            prop_assert_eq!(Permutation::parse_cycles(n, &p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn scalar_text(text in "[-+0-9/i ]{0,12}") {
        if let Ok(q) = parse_rational(&text) {
            prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
        if let Ok(z) = text.parse::<GaussianRational>() {
            prop_assert_eq!(z.to_string().parse::<GaussianRational>().unwrap(), z);
        }
    }

    #[test]
    fn gaussian_list_text(text in "[-+0-9/i, ]{0,24}") {
        if let Ok(list) = parse_gaussian_list(&text) {
            let _ = RationalComplexConfiguration::new(list);
        }
    }

    #[test]
    fn arbitrary_unicode(text in "\\PC{0,40}", n in 0usize..=6) {
        let _ = parse_arrangement(&text);
        let _ = parse_form(n.max(1), Ring::Z, &text);
        let _ = parse_f2_matrix(&text);
        let _ = BraidWord::parse(n, &text);
        let _ = Permutation::parse_cycles(n, &text);
        let _ = parse_rational(&text);
        let _ = text.parse::<GaussianRational>();
        let _ = parse_gaussian_list(&text);
    }
}
